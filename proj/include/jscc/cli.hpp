#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace jscc {

/// Command entry points, split from main() so tests can drive them. All
/// write into `out_dir` (which must exist) and report on stdout/stderr.
///
/// Exit codes: 0 success; 1 configuration or input errors (bad schema,
/// invalid problem, missing design file, empty sweep); 2 the run completed
/// but the result is unusable (solver did not converge, synthesis or
/// simulation failed; design.json is still written with the error recorded);
/// 3 sweep finished but at least one cell failed.
int cmd_design(const std::string& config_path, const std::string& out_dir);
int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              int jobs = 1);
int cmd_opta(const std::string& config_path, const std::string& out_dir);
int cmd_simulate(const std::string& config_path,
                 const std::string& design_path, const std::string& out_dir,
                 std::optional<std::uint64_t> seed_override = {});

}  // namespace jscc
