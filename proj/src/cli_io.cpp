#include "zb/cli_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zb::io {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double finite_number(const json& j, const std::string& key) {
    if (!j.is_number()) throw ConfigError("field \"" + key + "\" must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError("field \"" + key + "\" is not finite");
    return v;
}

long integer_field(const json& j, const std::string& key) {
    if (!j.is_number_integer()) throw ConfigError("field \"" + key + "\" must be an integer");
    return j.get<long>();
}

void reject_unknown(const json& obj, const std::string& scope,
                    std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) { known = true; break; }
        if (!known)
            throw ConfigError("unknown key \"" + (scope.empty() ? key : scope + "." + key) + "\"");
    }
}

const json& require_field(const json& obj, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError("missing required field \"" + key + "\"");
    return *it;
}

Vec3 parse_vec3(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError("field \"" + key + "\" must be an array of 3 numbers");
    return {finite_number(j[0], key), finite_number(j[1], key), finite_number(j[2], key)};
}

PacketSpec parse_packet(const json& j) {
    if (!j.is_object()) throw ConfigError("field \"packet\" must be an object");
    reject_unknown(j, "packet", {"p0", "sigma", "epsilon", "delta", "spin", "grid"});
    PacketSpec spec;
    if (j.contains("p0")) spec.p0 = parse_vec3(j["p0"], "packet.p0");
    spec.sigma = finite_number(require_field(j, "sigma"), "packet.sigma");
    if (!(spec.sigma > 0.0)) throw ConfigError("field \"packet.sigma\" must be positive");
    if (j.contains("epsilon")) spec.epsilon = finite_number(j["epsilon"], "packet.epsilon");
    if (spec.epsilon < 0.0 || spec.epsilon > 1.0)
        throw ConfigError("field \"packet.epsilon\" must lie in [0, 1]");
    if (j.contains("delta")) spec.delta = finite_number(j["delta"], "packet.delta");
    if (j.contains("spin")) {
        const std::string s = j["spin"].get<std::string>();
        if (s == "up") spec.spin = SpinLabel::Up;
        else if (s == "down") spec.spin = SpinLabel::Down;
        else throw ConfigError("field \"packet.spin\" must be \"up\" or \"down\"");
    }
    if (j.contains("grid")) {
        const json& g = j["grid"];
        if (!g.is_object()) throw ConfigError("field \"packet.grid\" must be an object");
        reject_unknown(g, "packet.grid", {"nodes", "cutoff"});
        if (g.contains("nodes"))
            spec.grid.nodes_per_axis = static_cast<int>(integer_field(g["nodes"], "packet.grid.nodes"));
        if (spec.grid.nodes_per_axis < 1)
            throw ConfigError("field \"packet.grid.nodes\" must be >= 1");
        if (g.contains("cutoff"))
            spec.grid.cutoff_sigmas = finite_number(g["cutoff"], "packet.grid.cutoff");
        if (!(spec.grid.cutoff_sigmas > 0.0))
            throw ConfigError("field \"packet.grid.cutoff\" must be positive");
    }
    return spec;
}

TimeWindow parse_time(const json& j) {
    if (!j.is_object()) throw ConfigError("field \"time\" must be an object");
    reject_unknown(j, "time", {"t_max", "dt"});
    TimeWindow t;
    t.t_max = finite_number(require_field(j, "t_max"), "time.t_max");
    t.dt = finite_number(require_field(j, "dt"), "time.dt");
    if (!(t.dt > 0.0)) throw ConfigError("field \"time.dt\" must be positive");
    if (t.t_max < t.dt) throw ConfigError("field \"time.t_max\" must be >= dt");
    return t;
}

kinematics::CollisionScenario parse_scenario(const json& j) {
    if (!j.is_object()) throw ConfigError("field \"scenario\" must be an object");
    reject_unknown(j, "scenario", {"E_eV", "b_perp_cm"});
    kinematics::CollisionScenario s;
    s.beam_energy_eV = finite_number(require_field(j, "E_eV"), "scenario.E_eV");
    s.impact_parameter_cm = finite_number(require_field(j, "b_perp_cm"), "scenario.b_perp_cm");
    if (!(s.impact_parameter_cm > 0.0))
        throw ConfigError("field \"scenario.b_perp_cm\" must be positive");
    return s;
}

DensityRequest parse_density(const json& j) {
    if (!j.is_object()) throw ConfigError("field \"density\" must be an object");
    reject_unknown(j, "density", {"amplitude", "bins", "samples", "axis"});
    DensityRequest d;
    d.amplitude = finite_number(require_field(j, "amplitude"), "density.amplitude");
    if (!(d.amplitude > 0.0)) throw ConfigError("field \"density.amplitude\" must be positive");
    if (j.contains("bins")) d.bins = static_cast<int>(integer_field(j["bins"], "density.bins"));
    if (d.bins < 2) throw ConfigError("field \"density.bins\" must be >= 2");
    if (j.contains("samples")) d.samples = integer_field(j["samples"], "density.samples");
    if (d.samples < 1) throw ConfigError("field \"density.samples\" must be >= 1");
    if (j.contains("axis")) {
        const std::string a = j["axis"].get<std::string>();
        if (a == "x") d.axis = Axis::X;
        else if (a == "y") d.axis = Axis::Y;
        else if (a == "z") d.axis = Axis::Z;
        else throw ConfigError("field \"density.axis\" must be \"x\", \"y\" or \"z\"");
    }
    return d;
}

const char* axis_name(Axis a) { return a == Axis::X ? "x" : (a == Axis::Y ? "y" : "z"); }

json echo_config(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    if (c.packet) {
        const auto& p = *c.packet;
        j["packet"] = {{"p0", {p.p0.x, p.p0.y, p.p0.z}},
                       {"sigma", p.sigma},
                       {"epsilon", p.epsilon},
                       {"delta", p.delta},
                       {"spin", p.spin == SpinLabel::Up ? "up" : "down"},
                       {"grid", {{"nodes", p.grid.nodes_per_axis}, {"cutoff", p.grid.cutoff_sigmas}}}};
    }
    if (c.time) j["time"] = {{"t_max", c.time->t_max}, {"dt", c.time->dt}};
    if (c.scenario)
        j["scenario"] = {{"E_eV", c.scenario->beam_energy_eV},
                         {"b_perp_cm", c.scenario->impact_parameter_cm}};
    if (c.delta_w_eV) j["delta_w_eV"] = *c.delta_w_eV;
    if (c.density)
        j["density"] = {{"amplitude", c.density->amplitude},
                        {"bins", c.density->bins},
                        {"samples", c.density->samples},
                        {"axis", axis_name(c.density->axis)}};
    if (c.trajectory_samples) j["trajectory"] = {{"samples", *c.trajectory_samples}};
    j["output"] = {{"dir", c.output.dir}, {"basename", c.output.basename}};
    return j;
}

std::uint64_t write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << bytes;
    f.close();
    if (!f) throw std::runtime_error("write failed: " + path);
    return fnv1a(bytes);
}

void write_manifest(const RunConfig& c, const json& outputs, const std::string& path) {
    json m;
    m["tool_version"] = kToolVersion;
    m["unit_system"] = kUnitSystem;
    m["velocity_sign_convention"] = kSignConvention;
    m["config"] = echo_config(c);
    m["outputs"] = outputs;
    write_file(path, m.dump(2) + "\n");
}

std::string output_path(const RunConfig& c, const std::string& suffix) {
    return (std::filesystem::path(c.output.dir) / (c.output.basename + suffix)).string();
}

// Node nearest the packet center; ties resolved by mode order.
const MomentumMode& central_mode(const PacketState& state) {
    const MomentumMode* best = &state.modes.front();
    double best_d = (best->p - state.spec.p0).norm2();
    for (const auto& m : state.modes) {
        const double d = (m.p - state.spec.p0).norm2();
        if (d < best_d) { best = &m; best_d = d; }
    }
    return *best;
}

int run_constants(const RunConfig& c, std::ostream& out) {
    namespace kin = kinematics;
    const double tz = kin::electron_zitter_period();
    out << "m_e c^2 = " << fmt(kin::PhysicalConstants::electron_rest_energy_eV)
        << " eV (1 eu)\n";
    out << "T_Z = " << fmt(tz) << " s (1 eu)\n";
    out << "lambda_C = " << fmt(kin::compton_wavelength_cm()) << " cm (1 eu)\n";
    out << "ZB angular frequency at rest = 4*pi / T_Z = " << fmt(4.0 * M_PI / tz) << " rad/s\n";
    json outputs = json::object();
    write_manifest(c, outputs, output_path(c, "_manifest.json"));
    return 0;
}

int run_kinematics(const RunConfig& c, std::ostream& out) {
    namespace kin = kinematics;
    if (!c.scenario) throw ConfigError("missing required field \"scenario\"");
    const auto& s = *c.scenario;
    const double gi = kin::gamma_inverse(s.beam_energy_eV);
    const double b_par = kin::contracted_impact(s.impact_parameter_cm, s.beam_energy_eV);
    const double tau = kin::collision_time(s);
    const auto verdict = kin::classify_regime(tau);
    out << "gamma_inverse = " << fmt(gi) << "\n";
    out << "b_parallel = " << fmt(b_par) << " cm\n";
    out << "tau = " << fmt(tau) << " s\n";
    out << "tau/T_Z = " << fmt(verdict.ratio) << " -> " << kin::regime_name(verdict.verdict)
        << "\n";
    if (c.delta_w_eV) {
        const auto u = kin::uncertainty_time(*c.delta_w_eV);
        out << "delta_w/m_e c^2 = "
            << fmt(*c.delta_w_eV / kin::PhysicalConstants::electron_rest_energy_eV) << "\n";
        out << "delta_t = " << fmt(u.delta_t_s) << " s, delta_t/T_Z = " << fmt(u.ratio) << "\n";
    }
    json outputs = json::object();
    write_manifest(c, outputs, output_path(c, "_manifest.json"));
    return 0;
}

int run_simulate(const RunConfig& c, std::ostream& out) {
    if (!c.packet) throw ConfigError("missing required field \"packet\"");
    if (!c.time) throw ConfigError("missing required field \"time\"");
    const PacketState state = gaussian_packet(*c.packet);
    const TimeSeries ts = simulate(state, c.time->t_max, c.time->dt);

    if (c.delta_w_eV) {
        const double dw_eu = *c.delta_w_eV / kinematics::PhysicalConstants::electron_rest_energy_eV;
        const auto report = observability_filter(state, dw_eu, c.time->t_max, c.time->dt);
        out << "delta_t/T_Z = " << fmt(report.dt_over_Tz) << ", oscillation period = "
            << fmt(report.max_mode_period) << " T_Z\n";
        if (report.averaged) {
            out << "oscillations unobservable; stationary velocity v_E = (" << fmt(report.v_E.x)
                << ", " << fmt(report.v_E.y) << ", " << fmt(report.v_E.z)
                << "), mean ZB displacement = (0, 0, 0)\n";
        } else {
            out << "oscillations resolvable; raw time series emitted\n";
        }
    }

    const std::string path = output_path(c, "_series.csv");
    const std::uint64_t sum = emit_series_csv(ts, path);
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(sum));
    json outputs = {{c.output.basename + "_series.csv", hex}};
    write_manifest(c, outputs, output_path(c, "_manifest.json"));
    out << "wrote " << path << " (" << ts.samples.size() << " samples)\n";
    return 0;
}

int run_density(const RunConfig& c, std::ostream& out) {
    if (!c.density) throw ConfigError("missing required field \"density\"");
    const auto& d = *c.density;
    const DwellHistogram h = dwell_density(d.amplitude, d.bins, d.samples, d.axis);
    const std::string path = output_path(c, "_density.csv");
    const std::uint64_t sum = emit_histogram_csv(h, path);
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(sum));
    json outputs = {{c.output.basename + "_density.csv", hex}};
    write_manifest(c, outputs, output_path(c, "_manifest.json"));
    out << "wrote " << path << " (" << h.density.size() << " bins, axis " << axis_name(h.axis)
        << ")\n";
    return 0;
}

int run_trajectory(const RunConfig& c, std::ostream& out) {
    if (!c.packet) throw ConfigError("missing required field \"packet\"");
    const int n = c.trajectory_samples.value_or(256);
    const PacketState state = gaussian_packet(*c.packet);
    const auto curve = mode_trajectory(central_mode(state), n);
    const std::string path = output_path(c, "_trajectory.csv");
    const std::uint64_t sum = emit_trajectory_csv(curve, path);
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(sum));
    json outputs = {{c.output.basename + "_trajectory.csv", hex}};
    write_manifest(c, outputs, output_path(c, "_manifest.json"));
    out << "wrote " << path << " (" << curve.size() << " points)\n";
    return 0;
}

}  // namespace

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown(j, "", {"command", "packet", "time", "scenario", "delta_w_eV", "density",
                           "trajectory", "output"});

    RunConfig c;
    c.command = require_field(j, "command").get<std::string>();
    if (c.command != "constants" && c.command != "kinematics" && c.command != "simulate" &&
        c.command != "density" && c.command != "trajectory")
        throw ConfigError("unknown command \"" + c.command + "\"");

    if (j.contains("packet")) c.packet = parse_packet(j["packet"]);
    if (j.contains("time")) c.time = parse_time(j["time"]);
    if (j.contains("scenario")) c.scenario = parse_scenario(j["scenario"]);
    if (j.contains("delta_w_eV")) {
        c.delta_w_eV = finite_number(j["delta_w_eV"], "delta_w_eV");
        if (!(*c.delta_w_eV > 0.0)) throw ConfigError("field \"delta_w_eV\" must be positive");
    }
    if (j.contains("density")) c.density = parse_density(j["density"]);
    if (j.contains("trajectory")) {
        const json& t = j["trajectory"];
        if (!t.is_object()) throw ConfigError("field \"trajectory\" must be an object");
        reject_unknown(t, "trajectory", {"samples"});
        c.trajectory_samples = static_cast<int>(integer_field(require_field(t, "samples"),
                                                              "trajectory.samples"));
        if (*c.trajectory_samples < 2)
            throw ConfigError("field \"trajectory.samples\" must be >= 2");
    }
    if (j.contains("output")) {
        const json& o = j["output"];
        if (!o.is_object()) throw ConfigError("field \"output\" must be an object");
        reject_unknown(o, "output", {"dir", "basename"});
        if (o.contains("dir")) c.output.dir = o["dir"].get<std::string>();
        if (o.contains("basename")) c.output.basename = o["basename"].get<std::string>();
    }

    // cross-field requirements, so errors surface at parse time
    if (c.command == "kinematics" && !c.scenario)
        throw ConfigError("command \"kinematics\" requires field \"scenario\"");
    if ((c.command == "simulate" || c.command == "trajectory") && !c.packet)
        throw ConfigError("command \"" + c.command + "\" requires field \"packet\"");
    if (c.command == "simulate" && !c.time)
        throw ConfigError("command \"simulate\" requires field \"time\"");
    if (c.command == "density" && !c.density)
        throw ConfigError("command \"density\" requires field \"density\"");
    return c;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::uint64_t emit_series_csv(const TimeSeries& ts, const std::string& path) {
    std::string csv = "t,vE_x,vE_y,vE_z,vZ_x,vZ_y,vZ_z,xZ_x,xZ_y,xZ_z\n";
    for (const auto& s : ts.samples) {
        csv += fmt(s.t);
        for (double v : {s.v_E.x, s.v_E.y, s.v_E.z, s.v_Z.x, s.v_Z.y, s.v_Z.z, s.x_Z.x, s.x_Z.y,
                         s.x_Z.z}) {
            csv += ',';
            csv += fmt(v);
        }
        csv += '\n';
    }
    return write_file(path, csv);
}

std::uint64_t emit_histogram_csv(const DwellHistogram& h, const std::string& path) {
    std::string csv = "bin_center,histogram,closed_form\n";
    for (size_t i = 0; i < h.density.size(); ++i) {
        const double center = 0.5 * (h.bin_edges[i] + h.bin_edges[i + 1]);
        csv += fmt(center);
        csv += ',';
        csv += fmt(h.density[i]);
        csv += ',';
        csv += fmt(h.closed_form[i]);
        csv += '\n';
    }
    return write_file(path, csv);
}

std::uint64_t emit_trajectory_csv(const std::vector<Vec3>& curve, const std::string& path) {
    std::string csv = "x,y,z\n";
    for (const auto& r : curve) {
        csv += fmt(r.x);
        csv += ',';
        csv += fmt(r.y);
        csv += ',';
        csv += fmt(r.z);
        csv += '\n';
    }
    return write_file(path, csv);
}

int run(const RunConfig& config, std::ostream& out) {
    try {
        if (config.command == "constants") return run_constants(config, out);
        if (config.command == "kinematics") return run_kinematics(config, out);
        if (config.command == "simulate") return run_simulate(config, out);
        if (config.command == "density") return run_density(config, out);
        if (config.command == "trajectory") return run_trajectory(config, out);
        throw ConfigError("unknown command \"" + config.command + "\"");
    } catch (const ConfigError& e) {
        out << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        out << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace zb::io
