#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zb/wavepacket.hpp"

namespace zb {

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Per-mode oscillation data: the mode's interference velocity on axis i is
/// A_i cos(omega t + phi_i) with omega = 4 pi W (t in T_Z).
struct ZbMode {
    Vec3 p;
    double weight = 1.0;
    double omega = 0.0;
    std::array<double, 3> amplitude{};  // A_i >= 0, units of c
    std::array<double, 3> phase{};      // phi_i in (-pi, pi]
};

struct VelocitySample {
    double t = 0.0;
    Vec3 v_total, v_E, v_Z;
};

struct SimSample {
    double t = 0.0;
    Vec3 v_total, v_E, v_Z;  // units of c
    Vec3 x_Z;                // lambda_C
};

struct TimeSeries {
    double dt = 0.0;
    std::vector<SimSample> samples;
};

struct DwellHistogram {
    Axis axis = Axis::X;
    std::vector<double> bin_edges;    // n_bins + 1, lambda_C
    std::vector<double> density;      // sampled, probability per lambda_C
    std::vector<double> closed_form;  // arcsine law, bin-averaged
    long n_samples = 0;
};

/// Extracts the oscillation amplitude/phase of one momentum mode from the
/// polar form of the cross terms a^+ alpha_i b.
ZbMode zb_mode(const MomentumMode& mode);

std::vector<ZbMode> zb_modes(const PacketState& state);

/// Expected velocity at time t (T_Z), component i:
///   sum_modes weight [ a^+ a_i a + b^+ a_i b + 2 Re(a^+ a_i b e^{-i omega t}) ]
/// Rejects unnormalized states.
Vec3 expected_velocity(const PacketState& state, double t);

/// Time-independent (Ehrenfest) part of the expected velocity.
Vec3 ehrenfest_velocity(const PacketState& state);

/// Splits the expected velocity into the stationary drift v_E and the
/// oscillating interference part v_Z; v_total = v_E + v_Z by construction.
VelocitySample velocity_components(const PacketState& state, double t);

/// Time-integrated interference displacement, zero at t = 0:
///   x_i(t) = sum weight (A_i/omega) [sin(omega t + phi_i) - sin(phi_i)]
Vec3 zb_position(const PacketState& state, double t);

/// Samples the single-mode interference displacement over exactly one period
/// 2 pi / omega; first and last samples coincide. A vanishing amplitude
/// yields a single point at the origin.
std::vector<Vec3> mode_trajectory(const MomentumMode& mode, int n_samples);

/// dP/dx = 1/(pi sqrt(A^2 - x^2)) for |x| < A.
double arcsine_density(double amplitude, double x);

/// Dwell-time density of x(t) = A sin(omega t): histogram of uniform-in-time
/// samples spread over many periods, with the bin-averaged arcsine law as
/// companion curve. Both carry unit mass.
DwellHistogram dwell_density(double amplitude, int n_bins, long n_samples, Axis axis = Axis::X);

struct TimeAveragedReport {
    bool averaged = false;
    double dt_over_Tz = 0.0;      // time indetermination in units of T_Z
    double max_mode_period = 0.0; // slowest oscillation period in the state
    Vec3 v_E;
    Vec3 mean_zb_displacement;          // zero on the averaged branch
    std::vector<ZbMode> modes;          // averaged branch: per-mode dwell data
    std::optional<TimeSeries> raw;      // fast-probe branch
};

/// Applies the energy-time uncertainty gate: when the time indetermination
/// 1/delta_w (eu) exceeds the oscillation period the oscillations are not
/// resolvable, and the stationary observables plus per-mode dwell data are
/// reported; otherwise the raw time series is returned.
TimeAveragedReport observability_filter(const PacketState& state, double delta_w_eu, double t_max,
                                        double dt);

/// Uniformly sampled trace of the velocity split and interference position,
/// t_j = j dt for j = 0 .. round(t_max/dt) - 1.
TimeSeries simulate(const PacketState& state, double t_max, double dt);

/// Zero-crossing period estimate of an oscillating channel; linear
/// interpolation between samples, period = twice the mean crossing gap.
/// Returns 0 when fewer than two crossings exist.
double estimate_period(const std::vector<double>& t, const std::vector<double>& v);

}  // namespace zb
