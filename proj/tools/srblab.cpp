#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "srblab/cli.hpp"
#include "srblab/errors.hpp"
#include "srblab/version.hpp"

namespace {

srblab::ExperimentConfig load_config(const std::string& path, std::uint64_t* seed_override,
                                     int* threads_override) {
    if (path.empty()) throw srblab::ConfigError("--config <path> is required");
    srblab::ExperimentConfig cfg = srblab::parse_config(path);
    if (seed_override) cfg.seed = *seed_override;
    if (threads_override) cfg.threads = static_cast<unsigned>(*threads_override);
    srblab::validate_config(cfg);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(srblab::kToolName) + " " + srblab::kToolVersion +
                 " - observable-measure estimation for map dynamics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    int threads = -1;
    app.add_option("--config", config_path, "experiment config file");
    app.add_option("--out", out_dir, "output directory (overrides config and SRBLAB_OUT)");
    auto* seed_opt = app.add_option("--seed", seed, "override the master seed");
    auto* threads_opt = app.add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* cmd_list = app.add_subcommand("list-systems", "print the built-in systems");
    auto* cmd_empiric =
        app.add_subcommand("empiric", "empiric-measure checkpoints of one orbit (CSV)");
    auto* cmd_pomega = app.add_subcommand("pomega", "limit-set estimate of one orbit (JSON)");
    auto* cmd_observable =
        app.add_subcommand("observable", "full observable-set report over sampled starts");
    auto* cmd_check = app.add_subcommand("check", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : srblab::kExitConfig;
    }

    try {
        if (cmd_list->parsed()) return srblab::run_list_systems(std::cout);
        if (cmd_check->parsed()) return srblab::run_check(std::cout);

        std::uint64_t* seed_ov = seed_opt->count() ? &seed : nullptr;
        int* threads_ov = threads_opt->count() ? &threads : nullptr;
        const srblab::ExperimentConfig cfg = load_config(config_path, seed_ov, threads_ov);
        const std::string dir = srblab::resolve_out_dir(cfg, out_dir);
        if (cmd_empiric->parsed()) return srblab::run_empiric(cfg, dir, std::cerr);
        if (cmd_pomega->parsed()) return srblab::run_pomega(cfg, dir, std::cerr);
        if (cmd_observable->parsed()) return srblab::run_observable(cfg, dir, std::cerr);
    } catch (const srblab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return srblab::kExitConfig;
    } catch (const srblab::RegistryError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return srblab::kExitConfig;
    } catch (const srblab::ArgumentError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return srblab::kExitConfig;
    } catch (const srblab::OrbitDivergenceError& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return srblab::kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return srblab::kExitRuntime;
    }
    return srblab::kExitConfig;
}
