#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srblab/domain.hpp"

namespace srblab {

// Experiment configuration with defaults filled in. Parsed from an INI-style
// file: [section] headers, key = value pairs, '#' comments. Unknown keys are
// rejected with a nearest-key suggestion; validation errors name the field.
struct ExperimentConfig {
    // [system]
    std::string system_name;
    std::map<std::string, double> system_params;

    // [grid] empty = system default resolution
    std::vector<std::uint32_t> resolution;

    // [metric]
    std::size_t truncation = 24;

    // [schedule]
    std::uint64_t n0 = 1000;
    double gamma = 1.25;
    std::uint64_t horizon = 100000;
    std::uint64_t burn_in = 0;

    // [pomega]
    double delta_cluster = 0.05;
    double delta_conv = 0.02;
    double tail_fraction = 0.5;
    std::optional<std::vector<double>> x0;
    std::optional<std::vector<double>> endpoint_a;
    std::optional<std::vector<double>> endpoint_b;

    // [observable]
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::vector<double> epsilon_ladder{0.2, 0.1, 0.05, 0.025};
    double phi_srb = 0.05;
    std::size_t holdout_samples = 0;
    std::optional<std::uint64_t> holdout_seed;  // default: seed + 1
    double holdout_epsilon = 0.1;
    std::vector<std::size_t> sweep;

    // [output]
    std::string out_dir;  // empty = SRBLAB_OUT env or "out"
    unsigned threads = 0;
    std::string reference = "first";  // empiric CSV reference: first | uniform | none
    bool dump_measures = false;

    std::uint64_t resolved_holdout_seed() const { return holdout_seed ? *holdout_seed : seed + 1; }
};

ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

// Range/consistency checks shared by both entry points; throws ConfigError
// naming the offending field.
void validate_config(const ExperimentConfig& cfg);

}  // namespace srblab
