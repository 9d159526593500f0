#pragma once

#include <string>
#include <vector>

#include "jscc/design_problem.hpp"
#include "jscc/psi_solver.hpp"
#include "jscc/spectral_factorization.hpp"

namespace jscc {

/// Cost of the best causal estimator with an unconstrained (noiseless,
/// infinite-power) channel: ||R - P+ R||_2^2 + eta. This is the floor the
/// designed systems approach as snr grows.
double wiener_cost(const ProblemSpec& spec);

/// Minimum distortion theoretically achievable for the scalar Gaussian
/// source with density phi_s over n_channels parallel AWGN channels of unit
/// noise variance and total transmit power `snr`. Capacity is
/// n_channels * (1/2) log(1 + snr/n_channels) nats per sample (equal power
/// split across identical channels); the distortion-rate point comes from
/// reverse water-filling,
///   D(theta) = (1/2pi) int min(theta, phi_s),
///   R(theta) = (1/2pi) int max(0, (1/2) log(phi_s/theta)),
/// with theta bisected over [min phi_s * 1e-12, max phi_s] until
/// |R(theta) - C| <= 1e-10.
/// Throws InvalidInputError for snr <= 0, n_channels < 1, or a non-scalar
/// density.
double opta_distortion(const SpectralDensity& source_spectrum, double snr,
                       int n_channels = 1);

struct OptaPoint {
  double snr = 0.0;
  double capacity = 0.0;     // nats per sample
  double water_level = 0.0;  // theta at R(theta) = C
  double d_min = 0.0;
};

/// Distortion floor as a function of snr. Points are sorted by snr; d_min is
/// strictly decreasing and never exceeds the source variance.
struct OptaCurve {
  std::vector<OptaPoint> points;
};

OptaCurve opta_curve(const SpectralDensity& source_spectrum,
                     std::vector<double> snr_list, int n_channels = 1);

struct SweepRow {
  double snr = 0.0;
  int delay = 0;
  double distortion_linear = 0.0;  // phi(K) of the solved design
  double distortion_opta = 0.0;
  int iterations = 0;
  bool converged = false;
  bool synthesized = false;
  std::string note;  // empty on success; failure text otherwise
};

/// One row per (snr, delay) cell, sorted by (snr, delay).
struct SweepTable {
  std::vector<SweepRow> rows;
};

/// Distortion-vs-snr sweep over delay constraints: each cell copies the
/// scalar template, sets snr and P = z^{-d}, solves for the optimal K,
/// records phi(K) next to the OPTA floor of the template's source spectrum,
/// and synthesizes (C, D) best-effort. A failed solve or synthesis is
/// recorded in the row's note and the sweep continues. Cells are
/// independent; `jobs` > 1 runs them on that many threads with the same
/// deterministic output.
SweepTable sweep(const ProblemSpec& spec_template,
                 std::vector<double> snr_list, std::vector<int> delay_list,
                 const SolverOptions& solver = {}, int jobs = 1);

}  // namespace jscc
