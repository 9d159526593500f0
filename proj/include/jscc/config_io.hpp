#pragma once

#include <string>
#include <vector>

#include "jscc/baselines.hpp"
#include "jscc/design_problem.hpp"
#include "jscc/psi_solver.hpp"
#include "jscc/simulation.hpp"
#include "jscc/synthesis.hpp"

namespace jscc {

/// Everything a run needs, read from one JSON file. Sections `problem`,
/// `solver`, `sim`, `sweep`, and `opta` are all optional and every field has
/// a default, but unknown keys are rejected so typos cannot silently fall
/// back to defaults.
struct RunConfig {
  ProblemSpec spec;
  SolverOptions solver;
  SimConfig sim;
  std::vector<double> sweep_snrs;   // default: 25 log points, 1e-3 .. 1e4
  std::vector<int> sweep_delays = {0, 2, 10};
  int opta_channels = 1;
};

/// Parses and validates a config file. Throws ConfigError whose path()
/// names the offending field (e.g. "problem.s.fir"). Transfer functions are
/// written as one of
///   {"fir": [c0, c1, ...]}            scalar FIR
///   {"fir": [[[...],[...]], ...]}     matrix FIR, one matrix per tap
///   {"rational": {"num": [...], "den": [...]}}
///   {"delay": d}
/// and the sweep grid as {"snr_list": {"start_exp", "stop_exp", "points"},
/// "delay_list": [...]} with SNRs log-spaced in base 10.
RunConfig load_config(const std::string& path);

/// Shortest round-trippable decimal form ("%.17g"); "nan"/"inf" for
/// non-finite values (JSON output maps those to null instead).
std::string format_double(double v);

/// One solved design plus everything needed to audit it. `error` is empty
/// on success; on failure the partial document is still written so the
/// failure mode is inspectable.
struct DesignDocument {
  DesignResult result;
  ValidationReport validation;
  double el_residual = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
  bool converged = false;
  std::string error;
};

/// Writers are deterministic: keys sorted, two-space indent, LF newlines,
/// doubles at 17 significant digits. Rerunning a command on the same inputs
/// reproduces the bytes.
void write_design_json(const std::string& path, const DesignDocument& doc);

/// Reads k/c/d back from a design.json. Throws ConfigError when the file is
/// missing or malformed. Numeric fields are re-derived by the caller, so
/// only the transfer functions are recovered.
DesignResult read_design_json(const std::string& path);

void write_sweep_csv(const std::string& path, const SweepTable& table);
void write_opta_csv(const std::string& path, const OptaCurve& curve);
void write_sim_json(const std::string& path, const SimReport& report);

}  // namespace jscc
