#include "zb/zitter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace zb {

namespace {

constexpr double kPi = std::numbers::pi;

void require_normalized(const PacketState& state) {
    if (std::abs(total_norm(state) - 1.0) > 1e-9)
        throw std::domain_error("state is not normalized");
}

// Cross coefficients C_i = a^+ alpha_i b for one mode.
std::array<cplx, 3> cross_terms(const MomentumMode& m) {
    std::array<cplx, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = quadratic_form(m.a, alpha(i), m.b);
    return c;
}

}  // namespace

ZbMode zb_mode(const MomentumMode& mode) {
    ZbMode z;
    z.p = mode.p;
    z.weight = mode.weight;
    z.omega = 4.0 * kPi * mode.W;
    const auto c = cross_terms(mode);
    for (int i = 0; i < 3; ++i) {
        z.amplitude[i] = 2.0 * std::abs(c[i]);
        if (z.amplitude[i] == 0.0) {
            z.phase[i] = 0.0;
        } else {
            double phi = -std::arg(c[i]);
            if (phi <= -kPi) phi = kPi;  // fold onto (-pi, pi]
            z.phase[i] = phi;
        }
    }
    return z;
}

std::vector<ZbMode> zb_modes(const PacketState& state) {
    std::vector<ZbMode> out;
    out.reserve(state.modes.size());
    for (const auto& m : state.modes) out.push_back(zb_mode(m));
    return out;
}

Vec3 ehrenfest_velocity(const PacketState& state) {
    Vec3 v;
    for (const auto& m : state.modes) {
        for (int i = 0; i < 3; ++i) {
            const double d =
                m.weight * (quadratic_form(m.a, alpha(i), m.a).real() +
                            quadratic_form(m.b, alpha(i), m.b).real());
            if (i == 0) v.x += d;
            else if (i == 1) v.y += d;
            else v.z += d;
        }
    }
    return v;
}

VelocitySample velocity_components(const PacketState& state, double t) {
    require_normalized(state);
    VelocitySample s;
    s.t = t;
    s.v_E = ehrenfest_velocity(state);
    Vec3 vz;
    for (const auto& m : state.modes) {
        const double omega = 4.0 * kPi * m.W;
        const auto c = cross_terms(m);
        const cplx rot = std::exp(cplx(0.0, -omega * t));
        vz.x += m.weight * 2.0 * (c[0] * rot).real();
        vz.y += m.weight * 2.0 * (c[1] * rot).real();
        vz.z += m.weight * 2.0 * (c[2] * rot).real();
    }
    s.v_Z = vz;
    s.v_total = s.v_E + s.v_Z;
    return s;
}

Vec3 expected_velocity(const PacketState& state, double t) {
    return velocity_components(state, t).v_total;
}

Vec3 zb_position(const PacketState& state, double t) {
    require_normalized(state);
    Vec3 x;
    for (const auto& m : state.modes) {
        const ZbMode z = zb_mode(m);
        for (int i = 0; i < 3; ++i) {
            const double d = m.weight * (z.amplitude[i] / z.omega) *
                             (std::sin(z.omega * t + z.phase[i]) - std::sin(z.phase[i]));
            if (i == 0) x.x += d;
            else if (i == 1) x.y += d;
            else x.z += d;
        }
    }
    return x;
}

std::vector<Vec3> mode_trajectory(const MomentumMode& mode, int n_samples) {
    if (n_samples < 2) throw std::invalid_argument("mode_trajectory: n_samples must be >= 2");
    const ZbMode z = zb_mode(mode);
    if (z.amplitude[0] == 0.0 && z.amplitude[1] == 0.0 && z.amplitude[2] == 0.0)
        return {Vec3{}};

    const double period = 2.0 * kPi / z.omega;
    std::vector<Vec3> out;
    out.reserve(n_samples);
    for (int j = 0; j < n_samples; ++j) {
        const double t = period * j / (n_samples - 1);
        Vec3 r;
        for (int i = 0; i < 3; ++i) {
            const double d = (z.amplitude[i] / z.omega) *
                             (std::sin(z.omega * t + z.phase[i]) - std::sin(z.phase[i]));
            if (i == 0) r.x = d;
            else if (i == 1) r.y = d;
            else r.z = d;
        }
        out.push_back(r);
    }
    return out;
}

double arcsine_density(double amplitude, double x) {
    if (!(amplitude > 0.0)) throw std::invalid_argument("arcsine_density: amplitude must be positive");
    if (std::abs(x) >= amplitude)
        throw std::domain_error("arcsine_density: |x| must be < amplitude");
    return 1.0 / (kPi * std::sqrt(amplitude * amplitude - x * x));
}

DwellHistogram dwell_density(double amplitude, int n_bins, long n_samples, Axis axis) {
    if (!(amplitude > 0.0)) throw std::invalid_argument("dwell_density: amplitude must be positive");
    if (n_bins < 2) throw std::invalid_argument("dwell_density: n_bins must be >= 2");
    if (n_samples < 1) throw std::invalid_argument("dwell_density: n_samples must be >= 1");

    DwellHistogram h;
    h.axis = axis;
    h.n_samples = n_samples;
    const double width = 2.0 * amplitude / n_bins;
    h.bin_edges.resize(n_bins + 1);
    for (int i = 0; i <= n_bins; ++i) h.bin_edges[i] = -amplitude + i * width;

    // Uniform-in-time sampling with a golden-ratio phase step: deterministic
    // and equidistributed over the period, so counts converge to the dwell
    // fractions without locking onto a rational sub-grid.
    constexpr double kGolden = 0.6180339887498949;
    std::vector<long> counts(n_bins, 0);
    double frac = 0.0;
    for (long j = 0; j < n_samples; ++j) {
        const double x = amplitude * std::sin(2.0 * kPi * frac);
        int bin = static_cast<int>((x + amplitude) / width);
        if (bin < 0) bin = 0;
        if (bin >= n_bins) bin = n_bins - 1;
        ++counts[bin];
        frac += kGolden;
        if (frac >= 1.0) frac -= 1.0;
    }

    h.density.resize(n_bins);
    h.closed_form.resize(n_bins);
    for (int i = 0; i < n_bins; ++i) {
        h.density[i] = static_cast<double>(counts[i]) / (n_samples * width);
        const double lo = std::clamp(h.bin_edges[i] / amplitude, -1.0, 1.0);
        const double hi = std::clamp(h.bin_edges[i + 1] / amplitude, -1.0, 1.0);
        h.closed_form[i] = (std::asin(hi) - std::asin(lo)) / (kPi * width);
    }
    return h;
}

TimeAveragedReport observability_filter(const PacketState& state, double delta_w_eu, double t_max,
                                        double dt) {
    if (!(delta_w_eu > 0.0)) throw std::invalid_argument("observability_filter: delta_w must be positive");
    require_normalized(state);

    TimeAveragedReport r;
    r.dt_over_Tz = 1.0 / delta_w_eu;  // dimensionless uncertainty relation at unity

    double min_w = std::numeric_limits<double>::infinity();
    for (const auto& m : state.modes) min_w = std::min(min_w, m.W);
    r.max_mode_period = 1.0 / (2.0 * min_w);  // T_Z

    if (r.dt_over_Tz > r.max_mode_period) {
        r.averaged = true;
        r.v_E = ehrenfest_velocity(state);
        r.mean_zb_displacement = Vec3{};  // zero-mean oscillation
        r.modes = zb_modes(state);
    } else {
        r.averaged = false;
        r.v_E = ehrenfest_velocity(state);
        r.raw = simulate(state, t_max, dt);
    }
    return r;
}

TimeSeries simulate(const PacketState& state, double t_max, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("simulate: dt must be positive");
    if (t_max < dt) throw std::invalid_argument("simulate: t_max must be >= dt");
    require_normalized(state);

    const Vec3 v_e = ehrenfest_velocity(state);
    const std::vector<ZbMode> modes = zb_modes(state);
    const long n = std::lround(t_max / dt);

    TimeSeries ts;
    ts.dt = dt;
    ts.samples.reserve(n);
    for (long j = 0; j < n; ++j) {
        SimSample s;
        s.t = j * dt;
        Vec3 vz, xz;
        for (const auto& z : modes) {
            for (int i = 0; i < 3; ++i) {
                const double arg = z.omega * s.t + z.phase[i];
                const double dv = z.weight * z.amplitude[i] * std::cos(arg);
                const double dx = z.weight * (z.amplitude[i] / z.omega) *
                                  (std::sin(arg) - std::sin(z.phase[i]));
                if (i == 0) { vz.x += dv; xz.x += dx; }
                else if (i == 1) { vz.y += dv; xz.y += dx; }
                else { vz.z += dv; xz.z += dx; }
            }
        }
        s.v_E = v_e;
        s.v_Z = vz;
        s.v_total = s.v_E + s.v_Z;
        s.x_Z = xz;
        ts.samples.push_back(s);
    }
    return ts;
}

double estimate_period(const std::vector<double>& t, const std::vector<double>& v) {
    if (t.size() != v.size() || t.size() < 2)
        throw std::invalid_argument("estimate_period: need matching series with >= 2 samples");

    std::vector<double> crossings;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] == 0.0) {
            crossings.push_back(t[i]);
        } else if (v[i] * v[i + 1] < 0.0) {
            const double f = v[i] / (v[i] - v[i + 1]);
            crossings.push_back(t[i] + f * (t[i + 1] - t[i]));
        }
    }
    if (crossings.size() < 2) return 0.0;
    return 2.0 * (crossings.back() - crossings.front()) / (crossings.size() - 1);
}

}  // namespace zb
