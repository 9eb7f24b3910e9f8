#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "zb/cli_io.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string out_dir;
};

int dispatch(const std::string& command, const Options& opt) {
    zb::io::RunConfig config;
    try {
        if (opt.config_path.empty()) {
            if (command != "constants") {
                std::cerr << "config error: --config is required for \"" << command << "\"\n";
                return 1;
            }
            config.command = command;
        } else {
            config = zb::io::load_config_file(opt.config_path);
            if (config.command != command) {
                std::cerr << "config error: config declares command \"" << config.command
                          << "\" but \"" << command << "\" was invoked\n";
                return 1;
            }
        }
    } catch (const zb::io::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    }

    if (!opt.out_dir.empty()) {
        config.output.dir = opt.out_dir;
    } else if (const char* env = std::getenv("ZBSIM_OUT_DIR"); env && *env) {
        config.output.dir = env;
    }
    return zb::io::run(config, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free-particle Dirac wavepacket simulator: velocity oscillations, "
                 "dwell densities and collision-time kinematics"};
    app.require_subcommand(1);

    Options opt;
    const char* names[] = {"constants", "kinematics", "simulate", "density", "trajectory"};
    const char* descs[] = {
        "print T_Z, lambda_C and the electron rest energy",
        "collision-time and uncertainty-ratio chain for a beam scenario",
        "time series of the velocity split and interference position",
        "dwell-time histogram against the arcsine law",
        "closed single-mode trajectory over one oscillation period",
    };
    for (int i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descs[i]);
        sub->add_option("--config", opt.config_path, "JSON config file");
        sub->add_option("--out", opt.out_dir, "output directory (default: $ZBSIM_OUT_DIR or .)");
    }

    CLI11_PARSE(app, argc, argv);
    return dispatch(app.get_subcommands().front()->get_name(), opt);
}
