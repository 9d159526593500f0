#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jscc/design_problem.hpp"
#include "jscc/synthesis.hpp"

namespace jscc {

struct SimConfig {
  uint64_t seed = 1;
  long n_samples = 1L << 20;
  // 0 means "pick for me": burn_in becomes 10x the longest combined impulse
  // response, truncation becomes 4x the design's fir_order.
  long burn_in = 0;
  int truncation = 0;
};

struct SimReport {
  double empirical_mse = 0.0;
  double mse_stderr = 0.0;
  double empirical_power = 0.0;
  double power_stderr = 0.0;
  double predicted_mse = 0.0;    // J(C, D) by frequency-domain quadrature
  double predicted_power = 0.0;  // ||C [S M]||_2^2 likewise

  // reproducibility notes
  std::string rng_algorithm = "mt19937_64+box-muller";
  // largest impulse-response energy fraction any filter lost to truncation;
  // above 1e-6 the flag below is set and the comparison is suspect
  double max_tail_ratio = 0.0;
  bool truncation_warning = false;
};

/// First `length` causal impulse-response coefficients of a stable transfer
/// function. FIRs are copied and zero-padded; delays place a unit pulse;
/// rationals run the recursive difference equation. If tail_ratio_out is
/// given it receives the energy fraction beyond `length` (for rationals the
/// tail is measured on an extended run, long enough for any pole this side
/// of the stability margin to die out).
std::vector<Eigen::MatrixXd> impulse_response(const TransferFunction& tf,
                                              int length,
                                              double* tail_ratio_out = nullptr);

/// Time-domain Monte Carlo check of a synthesized design. Three independent
/// white unit-Gaussian streams (source, observation noise, channel noise)
/// are derived from cfg.seed via splitmix64 and filtered through direct-form
/// FIR convolutions of the truncated impulse responses:
///   error   e(k) = [W(PS - DCS)] w_s - [WDCM] w_m - [WDN] w_n
///   channel t(k) = [CS] w_s + [CM] w_m
/// After burn-in, ||e||^2 and ||t||^2 are averaged over 32 batches; the
/// standard errors come from the batch-mean spread. The report is
/// bit-reproducible for fixed (design, spec, cfg).
///
/// Throws InvalidInputError when n_samples does not leave every batch at
/// least one sample past burn-in (or truncation < 1 was forced), and
/// DivergenceError if any signal magnitude exceeds 1e12.
SimReport run_simulation(const DesignResult& design, const ProblemSpec& spec,
                         const SimConfig& cfg);

}  // namespace jscc
