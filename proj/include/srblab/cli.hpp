#pragma once

#include <iosfwd>
#include <string>

#include "srblab/config.hpp"

namespace srblab {

// Exit codes shared by the CLI and the library entry points.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitCheckFailed = 3;

// Output directory precedence: explicit --out flag, then config [output] dir,
// then SRBLAB_OUT, then "out".
std::string resolve_out_dir(const ExperimentConfig& cfg, const std::string& flag_out);

int run_list_systems(std::ostream& os);
int run_empiric(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& log);
int run_pomega(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& log);
int run_observable(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& log);
int run_check(std::ostream& os);

// Full observable pipeline rendered to the report.json payload; exposed so
// determinism can be tested in process. Byte-identical for identical config
// and seed, independent of thread count.
std::string observable_report_json(const ExperimentConfig& cfg);

}  // namespace srblab
