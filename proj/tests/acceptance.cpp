// Acceptance gate: one line per criterion, PASS or FAIL with the measured
// numbers. Tolerances are pinned in this file on purpose; if a line fails,
// the fix belongs in the library, not here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jscc/baselines.hpp"
#include "jscc/design_problem.hpp"
#include "jscc/errors.hpp"
#include "jscc/psi_solver.hpp"
#include "jscc/simulation.hpp"
#include "jscc/spectral_factorization.hpp"
#include "jscc/synthesis.hpp"
#include "support/oracles.hpp"

using namespace jscc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string num(double v, int prec = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

TransferFunction ar1_source() {
  return TransferFunction::rational({0.0, 1.0}, {1.0, -0.9});
}
constexpr double kAr1Variance = 5.263157894736842;  // 1 / 0.19

GridSamples k_from_solution(const TransferFunction& x, const ProblemSpec& spec,
                            const ReducedProblem& rp) {
  const GridSamples xs = evaluate_on_grid(x, spec.grid);
  const GridSamples ws = evaluate_on_grid(spec.w, spec.grid);
  return multiply(inverse(ws), multiply(xs, inverse(rp.h)));
}

struct Solved {
  ReducedProblem rp;
  SolveReport rep;
  DesignResult res;
  ValidationReport val;
};

Solved solve_full(const ProblemSpec& spec, const SolverOptions& opts) {
  Solved out;
  out.rp = reduce(spec);
  out.rep = minimize_psi(out.rp, spec.fir_order, opts);
  const GridSamples k = k_from_solution(out.rep.x_opt, spec, out.rp);
  out.res = spec.is_vector() ? synthesize_vector(k, spec)
                             : synthesize_scalar(k, spec);
  out.val = validate_design(out.res, spec);
  return out;
}

SpectralDensity density_of(const TransferFunction& s, const FrequencyGrid& g) {
  const GridSamples ss = evaluate_on_grid(s, g);
  GridSamples phi(g, ss.rows(), ss.rows());
  for (int k = 0; k < g.n; ++k)
    phi.at(k) = ss.at(k) * ss.at(k).adjoint();
  return SpectralDensity::from_samples(phi);
}

double anticausal_ratio(const GridSamples& x) {
  const auto c = fourier_coefficients(x);
  const int n = static_cast<int>(c.size());
  double total = 0.0, anti = 0.0;
  for (int t = 0; t < n; ++t) {
    const double e = c[t].squaredNorm();
    total += e;
    if (t > n / 2) anti += e;
  }
  return anti / total;
}

double max_rel_diff(const GridSamples& a, const GridSamples& b) {
  double scale = 0.0;
  for (int k = 0; k < a.size(); ++k) scale = std::max(scale, a.at(k).norm());
  double worst = 0.0;
  for (int k = 0; k < a.size(); ++k)
    worst = std::max(worst, (a.at(k) - b.at(k)).norm() / scale);
  return worst;
}

std::vector<double> log_spaced(double start_exp, double stop_exp, int points) {
  std::vector<double> out;
  for (int k = 0; k < points; ++k)
    out.push_back(std::pow(
        10.0, start_exp + (stop_exp - start_exp) * k / (points - 1)));
  return out;
}

// 1. Matched white source: the linear design is exactly optimal, so the
// designed distortion must land on 1/(1+snr) and on the theoretical floor.
Outcome criterion_white_exactness() {
  double worst_closed = 0.0, worst_opta = 0.0, worst_time = 0.0;
  for (const double snr : {0.5, 1.0, 10.0}) {
    const auto t0 = std::chrono::steady_clock::now();
    ProblemSpec spec;
    spec.m = TransferFunction::fir({0.0});
    spec.snr = snr;
    spec.grid = FrequencyGrid(1024);
    spec.fir_order = 30;
    SolverOptions opts;
    opts.tol = 1e-9;
    const Solved s = solve_full(spec, opts);

    const double expected = 1.0 / (1.0 + snr);
    const double opta = opta_distortion(density_of(spec.s, spec.grid), snr);
    worst_closed = std::max(
        worst_closed, std::abs(s.val.j_value - expected) / expected);
    worst_opta = std::max(worst_opta, std::abs(s.val.j_value - opta) / opta);
    worst_time = std::max(worst_time, seconds_since(t0));
  }
  const bool pass =
      worst_closed <= 1e-4 && worst_opta <= 1e-4 && worst_time < 10.0;
  return {pass, "worst rel err vs closed form " + num(worst_closed) +
                    ", vs floor " + num(worst_opta) + ", slowest point " +
                    num(worst_time, 2) + " s"};
}

// 2. Vanishing channel: distortion must approach the unfiltered source
// power 1/0.19 within 1% at snr = 1e-3 for each delay.
Outcome criterion_low_snr_limit() {
  std::ostringstream detail;
  bool pass = true;
  for (const int d : {0, 2, 10}) {
    ProblemSpec spec;
    spec.s = ar1_source();
    spec.m = TransferFunction::fir({0.0});
    spec.p = TransferFunction::delay(d);
    spec.snr = 1e-3;
    SolverOptions opts;
    opts.tol = 1e-8;
    opts.max_iter = 200000;
    const Solved s = solve_full(spec, opts);
    const double rel =
        (s.res.predicted_distortion - kAr1Variance) / kAr1Variance;
    if (std::abs(rel) > 0.01) pass = false;
    detail << "d=" << d << " " << num(100.0 * rel, 4) << "%  ";
  }
  detail << "(band +/-1%)";
  return {pass, detail.str()};
}

// 3. Distortion-vs-snr sweep: monotone in snr and delay, never below the
// floor, and about a factor two off the floor in the high-snr regime.
Outcome criterion_sweep_regression() {
  const auto t0 = std::chrono::steady_clock::now();
  ProblemSpec spec;
  spec.s = ar1_source();
  spec.m = TransferFunction::fir({0.0});
  spec.fir_order = 150;  // keeps FIR truncation floors ~1e-12, far below
                         // the 1e-6 dominance margin tested here
  SolverOptions opts;
  opts.tol = 1e-9;
  opts.max_iter = 300000;
  const std::vector<double> snrs = log_spaced(-3.0, 4.0, 25);
  const std::vector<int> delays = {0, 2, 10};
  const SweepTable table = sweep(spec, snrs, delays, opts);

  const auto row = [&](double snr, int d) -> const SweepRow& {
    for (const auto& r : table.rows)
      if (r.delay == d && std::abs(r.snr - snr) < 1e-9 * snr) return r;
    throw std::logic_error("missing sweep row");
  };

  bool solved = true;
  for (const auto& r : table.rows)
    solved = solved && r.converged && r.note.empty();

  bool mono_snr = true;
  for (const int d : delays)
    for (size_t i = 1; i < snrs.size(); ++i)
      mono_snr = mono_snr && row(snrs[i], d).distortion_linear <
                                 row(snrs[i - 1], d).distortion_linear;

  bool mono_delay = true;
  double worst_delay_step = -1.0;
  for (const double snr : snrs)
    for (size_t j = 1; j < delays.size(); ++j) {
      const double hi = row(snr, delays[j - 1]).distortion_linear;
      const double lo = row(snr, delays[j]).distortion_linear;
      mono_delay = mono_delay && lo <= hi;
      worst_delay_step = std::max(worst_delay_step, (lo - hi) / hi);
    }

  bool dominated = true;
  double worst_margin = 1e30;
  for (const auto& r : table.rows) {
    worst_margin = std::min(
        worst_margin, r.distortion_linear - r.distortion_opta);
    dominated = dominated &&
                r.distortion_linear >= r.distortion_opta - 1e-6;
  }

  bool ratio_ok = true;
  double ratio_lo = 1e30, ratio_hi = 0.0;
  for (const auto& r : table.rows)
    if (r.snr >= 1e3) {
      const double ratio = r.distortion_linear / r.distortion_opta;
      ratio_lo = std::min(ratio_lo, ratio);
      ratio_hi = std::max(ratio_hi, ratio);
      ratio_ok = ratio_ok && ratio >= 1.4 && ratio <= 3.0;
    }

  const double elapsed = seconds_since(t0);
  const bool pass = solved && mono_snr && mono_delay && dominated &&
                    ratio_ok && elapsed < 1800.0;
  std::ostringstream detail;
  detail << (solved ? "75/75 solved" : "unsolved cells") << ", snr-monotone "
         << (mono_snr ? "yes" : "NO") << ", delay-monotone "
         << (mono_delay ? "yes" : "NO") << " (worst step "
         << num(worst_delay_step, 2) << "), floor margin "
         << num(worst_margin, 2) << ", high-snr ratio ["
         << num(ratio_lo, 4) << ", " << num(ratio_hi, 4) << "], "
         << num(elapsed, 3) << " s";
  return {pass, detail.str()};
}

struct RandomInstances {
  std::vector<ProblemSpec> specs;
};

// Shared pool for criteria 4 and 5: random stable S and M, random delay and
// snr, fixed seed so failures are reproducible.
RandomInstances random_scalar_problems() {
  RandomInstances out;
  std::mt19937_64 rng(0xACCE5501u);
  std::uniform_int_distribution<int> delay_dist(0, 5);
  std::uniform_real_distribution<double> snr_exp(-1.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    ProblemSpec spec;
    spec.s = TransferFunction::fir(
        oracles::random_fir_away_from_circle(rng, 4, 0.3));
    if (i % 3 == 0) {
      spec.m = TransferFunction::fir({0.0});
    } else {
      auto m = oracles::random_fir_away_from_circle(rng, 2, 0.3);
      for (double& c : m) c *= 0.3;
      spec.m = TransferFunction::fir(m);
    }
    spec.p = TransferFunction::delay(delay_dist(rng));
    spec.snr = std::pow(10.0, snr_exp(rng));
    spec.grid = FrequencyGrid(1024);
    spec.fir_order = 40;
    out.specs.push_back(spec);
  }
  return out;
}

// 4. The synthesized pair must achieve the convex bound: J(C,D) = phi(K)
// and the power constraint must be met with equality.
Outcome criterion_objective_equality(const std::vector<Solved>& solved,
                                     const RandomInstances& inst) {
  double worst_gap = 0.0, worst_power = 0.0;
  for (size_t i = 0; i < solved.size(); ++i) {
    const auto& s = solved[i];
    worst_gap = std::max(
        worst_gap, std::abs(s.val.j_value - s.res.predicted_distortion) /
                       std::max(s.res.predicted_distortion, 1e-12));
    if (!s.res.d.is_zero())
      worst_power = std::max(
          worst_power,
          std::abs(s.val.power - inst.specs[i].snr) / inst.specs[i].snr);
  }
  const bool pass = worst_gap <= 1e-3 && worst_power <= 1e-3;
  return {pass, "worst |J-phi| " + num(worst_gap) + " rel, worst power gap " +
                    num(worst_power) + " rel (20 instances)"};
}

// 5. Noise-power identity: ||WDN||^2 must equal its closed form
// ||WKHN||_1^2 / snr on the same instances.
Outcome criterion_value_identity(const std::vector<Solved>& solved) {
  double worst = 0.0;
  for (const auto& s : solved)
    if (!s.res.d.is_zero())
      worst = std::max(worst, s.res.certificates.lemma2_value_gap);
  return {worst <= 1e-3, "worst value gap " + num(worst) + " rel"};
}

// 6. Stationarity: the solution satisfies the variational condition, and
// any single-tap perturbation makes psi worse.
Outcome criterion_stationarity() {
  ProblemSpec spec;
  spec.s = ar1_source();
  spec.m = TransferFunction::fir({0.0});
  spec.p = TransferFunction::delay(2);
  spec.snr = 10.0;
  spec.fir_order = 150;  // the certificate compares against the full causal
                         // class, so the FIR tail (0.9^{T-d}) must sit well
                         // below the 1e-3 bound; T=60 leaves it at 5e-3
  SolverOptions opts;
  opts.tol = 1e-10;
  opts.max_iter = 400000;
  const ReducedProblem rp = reduce(spec);
  const SolveReport rep = minimize_psi(rp, spec.fir_order, opts);

  const double r_norm = std::sqrt(h2_norm_sq(rp.r));
  const double el = el_residual(rep.x_opt, rp);

  const auto& coeffs = rep.x_opt.fir_coeffs();
  std::vector<double> taps(coeffs.size(), 0.0);
  for (size_t t = 0; t < coeffs.size(); ++t) taps[t] = coeffs[t](0, 0);
  double min_increase = 1e30;
  for (size_t j = 0; j < taps.size(); ++j) {
    std::vector<double> bumped = taps;
    bumped[j] += 0.05;
    const double value = psi_cost(TransferFunction::fir(bumped), rp);
    min_increase = std::min(min_increase, value - rep.psi_value);
  }
  const bool pass = el <= 1e-3 * r_norm && min_increase > 0.0;
  return {pass, "stationarity residual " + num(el) + " vs bound " +
                    num(1e-3 * r_norm) + ", smallest perturbation increase " +
                    num(min_increase)};
}

// 7. Spectral factorization: exact magnitude, causal factor, causal inverse;
// matrix case within Newton tolerance.
Outcome criterion_spectral_suite() {
  const FrequencyGrid grid(4096);
  std::mt19937_64 rng(0x7AC70001u);
  double worst_resid = 0.0, worst_anti = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracles::random_fir_away_from_circle(rng, 8, 0.02);
    const GridSamples ks = evaluate_on_grid(TransferFunction::fir(c), grid);
    GridSamples phi(grid, 1, 1);
    double scale = 0.0;
    for (int k = 0; k < grid.n; ++k) {
      phi.at(k)(0, 0) = 0.1 + std::norm(ks.scalar(k));
      scale = std::max(scale, phi.at(k)(0, 0).real());
    }
    const auto h = scalar_spectral_factor(SpectralDensity::from_samples(phi));
    for (int k = 0; k < grid.n; ++k)
      worst_resid = std::max(
          worst_resid,
          std::abs(std::norm(h.scalar(k)) - phi.scalar(k).real()) / scale);
    worst_anti = std::max(worst_anti, anticausal_ratio(h));
    worst_anti = std::max(worst_anti, anticausal_ratio(inverse(h)));
  }

  const FrequencyGrid mgrid(1024);
  std::normal_distribution<double> gauss(0.0, 0.5);
  double worst_wilson = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Eigen::MatrixXd> taps(3, Eigen::MatrixXd(2, 2));
    for (auto& tap : taps)
      for (int r = 0; r < 2; ++r)
        for (int cc = 0; cc < 2; ++cc) tap(r, cc) = gauss(rng);
    const GridSamples gs =
        evaluate_on_grid(TransferFunction::fir(taps), mgrid);
    GridSamples phi(mgrid, 2, 2);
    for (int k = 0; k < mgrid.n; ++k)
      phi.at(k) = gs.at(k) * gs.at(k).adjoint() +
                  0.1 * Eigen::MatrixXcd::Identity(2, 2);
    const auto h = matrix_spectral_factor(SpectralDensity::from_samples(phi));
    double resid = 0.0, scale = 0.0;
    for (int k = 0; k < mgrid.n; ++k) {
      resid += (h.at(k) * h.at(k).adjoint() - phi.at(k)).squaredNorm();
      scale += phi.at(k).squaredNorm();
    }
    worst_wilson = std::max(worst_wilson, std::sqrt(resid / scale));
  }

  const bool pass =
      worst_resid <= 1e-8 && worst_anti <= 1e-8 && worst_wilson <= 1e-6;
  return {pass, "scalar residual " + num(worst_resid) + ", anticausal " +
                    num(worst_anti) + " (100 trials); matrix residual " +
                    num(worst_wilson) + " (20 trials)"};
}

// 8. Inner-outer factorization against independent root reflection.
Outcome criterion_inner_outer_suite() {
  const FrequencyGrid grid(4096);
  std::mt19937_64 rng(0x10DE5EEDu);
  double worst_outer = 0.0, worst_modulus = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = oracles::random_fir_away_from_circle(rng, 8, 0.02);
    const GridSamples ks = evaluate_on_grid(TransferFunction::fir(c), grid);
    const auto pair = inner_outer_factorize(ks);
    const GridSamples expected = evaluate_on_grid(
        TransferFunction::fir(oracles::outer_part_by_roots(c)), grid);
    worst_outer = std::max(worst_outer, max_rel_diff(expected, pair.outer));
    for (int k = 0; k < grid.n; ++k)
      worst_modulus = std::max(
          worst_modulus, std::abs(std::abs(pair.inner.scalar(k)) - 1.0));
  }
  const bool pass = worst_outer <= 1e-8 && worst_modulus <= 1e-8;
  return {pass, "worst outer mismatch " + num(worst_outer) +
                    ", worst inner modulus defect " + num(worst_modulus) +
                    " (50 trials)"};
}

// 9. Two identical decoupled channels must reproduce two independent scalar
// designs at half the power each.
Outcome criterion_vector_decoupling() {
  ProblemSpec vec;
  vec.n_s = vec.n_t = vec.n_e = 2;
  vec.s = TransferFunction::identity(2);
  vec.m = TransferFunction::zero(2, 1);
  vec.w = TransferFunction::identity(2);
  vec.p = TransferFunction::identity(2);
  vec.snr = 1.0;
  vec.grid = FrequencyGrid(256);
  vec.fir_order = 8;
  SolverOptions opts;
  opts.tol = 1e-10;
  const Solved sv = solve_full(vec, opts);

  ProblemSpec sc;
  sc.m = TransferFunction::fir({0.0});
  sc.snr = 0.5;  // half the vector budget per channel
  sc.grid = FrequencyGrid(256);
  sc.fir_order = 8;
  const Solved ss = solve_full(sc, opts);

  const double total_scalar = 2.0 * ss.val.j_value;
  const double rel =
      std::abs(sv.val.j_value - total_scalar) / total_scalar;
  const double dd_gap = sv.res.certificates.dd_star_gap;
  const bool pass = rel <= 1e-3 && dd_gap <= 1e-3;
  return {pass, "distortion " + num(sv.val.j_value, 8) + " vs 2x scalar " +
                    num(total_scalar, 8) + " (rel " + num(rel) +
                    "), profile gap " + num(dd_gap)};
}

// 10. Monte Carlo: empirical statistics within four standard errors of the
// frequency-domain predictions; a fixed seed reproduces bit-identical runs.
Outcome criterion_monte_carlo() {
  std::ostringstream detail;
  bool pass = true;

  ProblemSpec white;
  white.m = TransferFunction::fir({0.0});
  white.snr = 1.0;
  white.grid = FrequencyGrid(256);
  white.fir_order = 8;

  ProblemSpec ar1;
  ar1.s = ar1_source();
  ar1.m = TransferFunction::fir({0.0});
  ar1.p = TransferFunction::delay(2);
  ar1.snr = 10.0;

  SolverOptions opts;
  opts.tol = 1e-9;
  bool first = true;
  for (const auto& spec : {white, ar1}) {
    const Solved s = solve_full(spec, opts);
    SimConfig cfg;
    cfg.seed = 20260817;
    cfg.n_samples = 1L << 20;
    const SimReport a = run_simulation(s.res, spec, cfg);
    const double mse_dev =
        std::abs(a.empirical_mse - a.predicted_mse) / a.mse_stderr;
    const double pow_dev =
        std::abs(a.empirical_power - a.predicted_power) / a.power_stderr;
    pass = pass && mse_dev <= 4.0 && pow_dev <= 4.0;
    detail << (first ? "white" : "ar1") << ": mse " << num(mse_dev, 2)
           << " se, power " << num(pow_dev, 2) << " se";

    if (first) {
      const SimReport b = run_simulation(s.res, spec, cfg);
      const bool identical = a.empirical_mse == b.empirical_mse &&
                             a.mse_stderr == b.mse_stderr &&
                             a.empirical_power == b.empirical_power &&
                             a.power_stderr == b.power_stderr;
      pass = pass && identical;
      detail << ", reseed " << (identical ? "bit-identical" : "DIVERGED")
             << "; ";
    }
    first = false;
  }
  return {pass, detail.str()};
}

// 11. Primal-dual solver against the projected-subgradient oracle given ten
// times the iteration budget.
Outcome criterion_solver_oracle() {
  std::mt19937_64 rng(0x50CE0011u);
  std::uniform_int_distribution<int> delay_dist(0, 3);
  std::uniform_real_distribution<double> snr_exp(-0.3, 1.3);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    ProblemSpec spec;
    if (i % 3 == 1) {
      spec.s = ar1_source();
    } else if (i % 3 == 2) {
      spec.s = TransferFunction::fir(
          oracles::random_fir_away_from_circle(rng, 3, 0.3));
    }
    if (i % 2 == 0) {
      auto m = oracles::random_fir_away_from_circle(rng, 2, 0.3);
      for (double& c : m) c *= 0.3;
      spec.m = TransferFunction::fir(m);
    } else {
      spec.m = TransferFunction::fir({0.0});
    }
    spec.p = TransferFunction::delay(delay_dist(rng));
    spec.snr = std::pow(10.0, snr_exp(rng));
    spec.grid = FrequencyGrid(256);
    spec.fir_order = 4 + 2 * (i % 3);

    SolverOptions opts;
    opts.tol = 1e-9;
    const ReducedProblem rp = reduce(spec);
    const SolveReport rep = minimize_psi(rp, spec.fir_order, opts);

    std::vector<oracles::cd> r(spec.grid.n), nn(spec.grid.n);
    for (int k = 0; k < spec.grid.n; ++k) {
      r[k] = rp.r.scalar(k);
      nn[k] = rp.n.scalar(k);
    }
    const long budget = std::clamp(10L * rep.iterations, 100000L, 2000000L);
    const auto ref = oracles::subgradient_minimize(r, nn, rp.sigma_sq,
                                                   spec.fir_order, budget);
    worst = std::max(worst, std::abs(rep.psi_value - ref.value) /
                                std::max(ref.value, 1e-12));
  }
  return {worst <= 1e-4,
          "worst value mismatch " + num(worst) + " rel (10 instances)"};
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };

  // Criteria 4 and 5 share their instance pool, so they run together below.
  const RandomInstances inst = random_scalar_problems();
  std::vector<Solved> pool;
  SolverOptions pool_opts;
  pool_opts.tol = 1e-8;
  pool_opts.max_iter = 200000;

  int failures = 0;
  int index = 0;
  const auto report = [&](const char* name, const Outcome& o) {
    ++index;
    std::printf("[%2d] %s  %-34s %s\n", index, o.pass ? "PASS" : "FAIL", name,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };
  const auto guarded = [](const std::function<Outcome()>& f) -> Outcome {
    try {
      return f();
    } catch (const std::exception& e) {
      return {false, std::string("exception: ") + e.what()};
    }
  };

  report("white-source exactness", guarded(criterion_white_exactness));
  report("low-snr distortion limit", guarded(criterion_low_snr_limit));
  report("distortion sweep regression", guarded(criterion_sweep_regression));

  Outcome c4{false, "skipped"}, c5{false, "skipped"};
  try {
    for (const auto& spec : inst.specs)
      pool.push_back(solve_full(spec, pool_opts));
    c4 = criterion_objective_equality(pool, inst);
    c5 = criterion_value_identity(pool);
  } catch (const std::exception& e) {
    c4 = {false, std::string("exception: ") + e.what()};
    c5 = {false, std::string("exception: ") + e.what()};
  }
  report("objective equality", c4);
  report("noise-power value identity", c5);

  report("stationarity certificate", guarded(criterion_stationarity));
  report("spectral factorization suite", guarded(criterion_spectral_suite));
  report("inner-outer suite", guarded(criterion_inner_outer_suite));
  report("vector decoupling consistency",
         guarded(criterion_vector_decoupling));
  report("monte carlo agreement", guarded(criterion_monte_carlo));
  report("solver-oracle agreement", guarded(criterion_solver_oracle));

  std::printf("acceptance: %d/11 passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
