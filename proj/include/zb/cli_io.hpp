#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "zb/kinematics.hpp"
#include "zb/zitter.hpp"

namespace zb::io {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kUnitSystem = "electron units: m_e=c=h=1";
inline constexpr const char* kSignConvention =
    "velocity kernel +alpha (global sign of velocity traces flips under the -alpha_1 convention)";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimeWindow {
    double t_max = 1.0;
    double dt = 1e-3;
};

struct DensityRequest {
    double amplitude = 0.0;  // lambda_C
    int bins = 64;
    long samples = 1000000;
    Axis axis = Axis::X;
};

struct OutputSpec {
    std::string dir = ".";
    std::string basename = "run";
};

struct RunConfig {
    std::string command;  // constants | kinematics | simulate | density | trajectory
    std::optional<PacketSpec> packet;
    std::optional<TimeWindow> time;
    std::optional<kinematics::CollisionScenario> scenario;
    std::optional<double> delta_w_eV;
    std::optional<DensityRequest> density;
    std::optional<int> trajectory_samples;
    OutputSpec output;
};

/// Parses and validates a JSON config document. Unknown keys, missing
/// required fields and non-finite numbers are rejected with the offending
/// key named in the ConfigError message.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

/// Executes the configured command, printing a human-readable report to
/// `out` and writing CSV artifacts plus a manifest next to them.
/// Returns the process exit status (0 on success).
int run(const RunConfig& config, std::ostream& out);

// CSV emitters; full round-trip precision, deterministic rows.
// Return the FNV-1a checksum of the bytes written.
std::uint64_t emit_series_csv(const TimeSeries& ts, const std::string& path);
std::uint64_t emit_histogram_csv(const DwellHistogram& h, const std::string& path);
std::uint64_t emit_trajectory_csv(const std::vector<Vec3>& curve, const std::string& path);

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace zb::io
