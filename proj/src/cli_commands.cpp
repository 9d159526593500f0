#include "jscc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "jscc/baselines.hpp"
#include "jscc/config_io.hpp"
#include "jscc/errors.hpp"
#include "jscc/psi_solver.hpp"
#include "jscc/simulation.hpp"
#include "jscc/spectral_factorization.hpp"
#include "jscc/synthesis.hpp"

namespace jscc {
namespace {

// Loads and validates in one step so every command rejects bad input the
// same way; returns false after printing the reason (exit code 1).
bool load_checked(const std::string& config_path, RunConfig& cfg) {
  try {
    cfg = load_config(config_path);
    validate(cfg.spec);
    return true;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "invalid problem: " << e.what() << "\n";
  }
  return false;
}

// Creates the output directory before any long computation so a bad --out
// fails fast; returns false after printing the reason (exit code 1).
bool ensure_out_dir(const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec && !std::filesystem::is_directory(out_dir)) {
    std::cerr << "output error: " << out_dir << ": " << ec.message() << "\n";
    return false;
  }
  return true;
}

// K = W^{-1} X H^{-1} recovers the design variable from the reduced one.
GridSamples k_from_solution(const TransferFunction& x, const ProblemSpec& spec,
                            const ReducedProblem& rp) {
  const GridSamples xs = evaluate_on_grid(x, spec.grid);
  const GridSamples ws = evaluate_on_grid(spec.w, spec.grid);
  return multiply(inverse(ws), multiply(xs, inverse(rp.h)));
}

SpectralDensity source_density(const ProblemSpec& spec) {
  const GridSamples s = evaluate_on_grid(spec.s, spec.grid);
  GridSamples phi = multiply(s, adjoint(s));
  return SpectralDensity::from_samples(phi);
}

}  // namespace

int cmd_design(const std::string& config_path, const std::string& out_dir) {
  RunConfig cfg;
  if (!load_checked(config_path, cfg)) return 1;
  if (!ensure_out_dir(out_dir)) return 1;

  DesignDocument doc;
  try {
    const ReducedProblem rp = reduce(cfg.spec);
    const SolveReport rep = minimize_psi(rp, cfg.spec.fir_order, cfg.solver);
    doc.iterations = rep.iterations;
    doc.converged = rep.converged;
    const GridSamples k = k_from_solution(rep.x_opt, cfg.spec, rp);
    doc.result = cfg.spec.is_vector() ? synthesize_vector(k, cfg.spec)
                                      : synthesize_scalar(k, cfg.spec);
    doc.validation = validate_design(doc.result, cfg.spec);
    if (!cfg.spec.is_vector()) {
      try {
        doc.el_residual = el_residual(rep.x_opt, rp);
      } catch (const std::exception&) {
        // degenerate X = 0 has no certificate; leave NaN -> null
      }
    }
  } catch (const std::exception& e) {
    doc.error = e.what();
  }

  const std::string out = out_dir + "/design.json";
  write_design_json(out, doc);

  if (!doc.error.empty()) {
    std::cout << "design failed: " << doc.error << " (partial document in "
              << out << ")\n";
    return 2;
  }
  std::cout << "design written to " << out << "\n"
            << "  converged: " << (doc.converged ? "yes" : "no") << " after "
            << doc.iterations << " iterations\n"
            << "  predicted distortion "
            << format_double(doc.result.predicted_distortion) << ", power "
            << format_double(doc.result.predicted_power) << "\n"
            << "  duality gap " << format_double(doc.validation.duality_gap)
            << ", power gap "
            << format_double(doc.result.certificates.power_gap) << "\n";
  return doc.converged ? 0 : 2;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              int jobs) {
  RunConfig cfg;
  if (!load_checked(config_path, cfg)) return 1;
  if (!ensure_out_dir(out_dir)) return 1;

  SweepTable table;
  try {
    table = sweep(cfg.spec, cfg.sweep_snrs, cfg.sweep_delays, cfg.solver,
                  std::max(1, jobs));
  } catch (const std::exception& e) {
    std::cerr << "sweep rejected: " << e.what() << "\n";
    return 1;
  }

  const std::string out = out_dir + "/sweep.csv";
  write_sweep_csv(out, table);

  size_t failed = 0;
  for (const auto& row : table.rows)
    if (!row.converged || !row.note.empty()) ++failed;
  std::cout << "sweep written to " << out << " (" << table.rows.size()
            << " cells, " << failed << " failed)\n";
  return failed ? 3 : 0;
}

int cmd_opta(const std::string& config_path, const std::string& out_dir) {
  RunConfig cfg;
  if (!load_checked(config_path, cfg)) return 1;
  if (!ensure_out_dir(out_dir)) return 1;

  OptaCurve curve;
  try {
    curve = opta_curve(source_density(cfg.spec), cfg.sweep_snrs,
                       cfg.opta_channels);
  } catch (const std::exception& e) {
    std::cerr << "opta rejected: " << e.what() << "\n";
    return 1;
  }

  const std::string out = out_dir + "/opta.csv";
  write_opta_csv(out, curve);
  std::cout << "opta curve written to " << out << " (" << curve.points.size()
            << " points)\n";
  return 0;
}

int cmd_simulate(const std::string& config_path,
                 const std::string& design_path, const std::string& out_dir,
                 std::optional<std::uint64_t> seed_override) {
  RunConfig cfg;
  if (!load_checked(config_path, cfg)) return 1;
  if (!ensure_out_dir(out_dir)) return 1;

  DesignResult design;
  try {
    design = read_design_json(design_path);
  } catch (const std::exception& e) {
    std::cerr << "design file error: " << e.what() << "\n";
    return 1;
  }
  if (seed_override) cfg.sim.seed = *seed_override;

  SimReport report;
  try {
    report = run_simulation(design, cfg.spec, cfg.sim);
  } catch (const InvalidInputError& e) {
    std::cerr << "simulation rejected: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "simulation failed: " << e.what() << "\n";
    return 2;
  }

  const std::string out = out_dir + "/sim.json";
  write_sim_json(out, report);
  std::cout << "simulation written to " << out << "\n"
            << "  mse " << format_double(report.empirical_mse) << " +/- "
            << format_double(report.mse_stderr) << " (predicted "
            << format_double(report.predicted_mse) << ")\n"
            << "  power " << format_double(report.empirical_power) << " +/- "
            << format_double(report.power_stderr) << " (predicted "
            << format_double(report.predicted_power) << ")\n";
  if (report.truncation_warning)
    std::cout << "  warning: impulse response tails above 1e-6 (max ratio "
              << format_double(report.max_tail_ratio) << ")\n";
  return 0;
}

}  // namespace jscc
