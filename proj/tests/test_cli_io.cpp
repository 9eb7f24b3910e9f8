#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zb/cli_io.hpp"

using namespace zb;
using namespace zb::io;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string temp_dir(const char* tag) {
    auto dir = std::filesystem::temp_directory_path() / (std::string("zbsim_test_") + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

std::string error_message(const std::string& config_text) {
    try {
        parse_config(config_text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("minimal kinematics config parses") {
    const RunConfig c = parse_config(R"({
        "command": "kinematics",
        "scenario": {"E_eV": 45e9, "b_perp_cm": 1e-16}
    })");
    CHECK(c.command == "kinematics");
    REQUIRE(c.scenario.has_value());
    CHECK(c.scenario->beam_energy_eV == 45e9);
    CHECK(c.scenario->impact_parameter_cm == 1e-16);
}

TEST_CASE("config validation names the offending key") {
    CHECK(error_message(R"({
        "command": "simulate",
        "packet": {"sigma": 0.01},
        "time": {"t_max": 1.0, "dt": 0.0}
    })").find("dt") != std::string::npos);

    CHECK(error_message(R"({"command": "constants", "foo": 1})").find("foo") !=
          std::string::npos);

    CHECK(error_message(R"({"command": "warp"})").find("warp") != std::string::npos);
    CHECK(error_message(R"({"scenario": {}})").find("command") != std::string::npos);
    CHECK(error_message(R"({"command": "simulate"})").find("packet") != std::string::npos);
    CHECK(error_message(R"({"command": "density"})").find("density") != std::string::npos);
    CHECK(error_message("not json at all") != "");
    // overflow to infinity is caught at the JSON layer already
    CHECK(error_message(R"({"command": "kinematics",
                            "scenario": {"E_eV": 1e400, "b_perp_cm": 1e-16}})")
              .find("overflow") != std::string::npos);
}

TEST_CASE("constants run reports T_Z") {
    RunConfig c;
    c.command = "constants";
    c.output.dir = temp_dir("constants");
    std::ostringstream out;
    CHECK(run(c, out) == 0);
    CHECK(out.str().find("8.09") != std::string::npos);
    CHECK(out.str().find("2.4263") != std::string::npos);
    CHECK(std::filesystem::exists(c.output.dir + "/run_manifest.json"));
}

TEST_CASE("kinematics run reproduces the collision chain") {
    const std::string dir = temp_dir("kin");
    RunConfig c = parse_config(R"({
        "command": "kinematics",
        "scenario": {"E_eV": 45e9, "b_perp_cm": 1e-16},
        "delta_w_eV": 1e-7
    })");
    c.output.dir = dir;
    std::ostringstream out;
    CHECK(run(c, out) == 0);
    CHECK(out.str().find("tau = 3.78") != std::string::npos);
    CHECK(out.str().find("point-like") != std::string::npos);
    CHECK(out.str().find("delta_t/T_Z = 5109989") != std::string::npos);
}

TEST_CASE("simulate run: CSV contract and determinism") {
    const std::string dir = temp_dir("sim");
    RunConfig c = parse_config(R"({
        "command": "simulate",
        "packet": {"p0": [0,0,0], "sigma": 0.01, "epsilon": 0.70710678118654752,
                   "delta": 0.0, "spin": "up", "grid": {"nodes": 1, "cutoff": 5.0}},
        "time": {"t_max": 1.0, "dt": 0.001}
    })");
    c.output.dir = dir;
    std::ostringstream out;
    REQUIRE(run(c, out) == 0);

    const std::string csv = slurp(dir + "/run_series.csv");
    // header + 1000 rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1001);
    CHECK(csv.rfind("t,vE_x,vE_y,vE_z,vZ_x,vZ_y,vZ_z,xZ_x,xZ_y,xZ_z\n", 0) == 0);

    // vZ_x at t = 0 is 1 to rounding
    std::istringstream rows(csv);
    std::string header, first;
    std::getline(rows, header);
    std::getline(rows, first);
    std::istringstream fields(first);
    std::string field;
    std::vector<double> row;
    while (std::getline(fields, field, ',')) row.push_back(std::stod(field));
    REQUIRE(row.size() == 10);
    CHECK(row[0] == 0.0);
    CHECK(row[4] == doctest::Approx(1.0).epsilon(1e-12));

    std::ostringstream out2;
    REQUIRE(run(c, out2) == 0);
    CHECK(slurp(dir + "/run_series.csv") == csv);
    CHECK(slurp(dir + "/run_manifest.json").find("outputs") != std::string::npos);
}

TEST_CASE("simulate honors the observability filter") {
    const std::string dir = temp_dir("obs");
    RunConfig c = parse_config(R"({
        "command": "simulate",
        "packet": {"sigma": 0.01, "epsilon": 0.5, "grid": {"nodes": 1}},
        "time": {"t_max": 0.5, "dt": 0.01},
        "delta_w_eV": 1e-7
    })");
    c.output.dir = dir;
    std::ostringstream out;
    REQUIRE(run(c, out) == 0);
    CHECK(out.str().find("unobservable") != std::string::npos);
}

TEST_CASE("density and trajectory runs write their artifacts") {
    const std::string dir = temp_dir("artifacts");
    RunConfig c = parse_config(R"({
        "command": "density",
        "density": {"amplitude": 0.0795, "bins": 16, "samples": 20000, "axis": "x"}
    })");
    c.output.dir = dir;
    std::ostringstream out;
    REQUIRE(run(c, out) == 0);
    const std::string csv = slurp(dir + "/run_density.csv");
    CHECK(csv.rfind("bin_center,histogram,closed_form\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);

    RunConfig t = parse_config(R"({
        "command": "trajectory",
        "packet": {"sigma": 0.01, "epsilon": 0.5, "grid": {"nodes": 1}},
        "trajectory": {"samples": 64}
    })");
    t.output.dir = dir;
    std::ostringstream tout;
    REQUIRE(run(t, tout) == 0);
    const std::string tcsv = slurp(dir + "/run_trajectory.csv");
    CHECK(tcsv.rfind("x,y,z\n", 0) == 0);
    CHECK(std::count(tcsv.begin(), tcsv.end(), '\n') == 65);
}

TEST_CASE("empty series emits a header-only file") {
    const std::string dir = temp_dir("empty");
    TimeSeries ts;
    ts.dt = 0.1;
    emit_series_csv(ts, dir + "/empty.csv");
    CHECK(slurp(dir + "/empty.csv") == "t,vE_x,vE_y,vE_z,vZ_x,vZ_y,vZ_z,xZ_x,xZ_y,xZ_z\n");
}

TEST_CASE("unwritable paths are reported") {
    TimeSeries ts;
    CHECK_THROWS_AS(emit_series_csv(ts, "/nonexistent_dir_zbsim/x.csv"), std::runtime_error);

    RunConfig c;
    c.command = "constants";
    c.output.dir = "/nonexistent_dir_zbsim";
    std::ostringstream out;
    CHECK(run(c, out) == 2);
}

TEST_CASE("manifest declares units and sign convention") {
    const std::string dir = temp_dir("manifest");
    RunConfig c;
    c.command = "constants";
    c.output.dir = dir;
    std::ostringstream out;
    REQUIRE(run(c, out) == 0);
    const std::string m = slurp(dir + "/run_manifest.json");
    CHECK(m.find("electron units: m_e=c=h=1") != std::string::npos);
    CHECK(m.find("+alpha") != std::string::npos);
    CHECK(m.find("tool_version") != std::string::npos);
}
