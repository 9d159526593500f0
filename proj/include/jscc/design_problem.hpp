#pragma once

#include "jscc/spectral_factorization.hpp"
#include "jscc/transfer_function.hpp"

namespace jscc {

/// Full design problem: estimate P(z)*source from a channel observation,
/// through a causal encoder C and decoder D, under channel power snr.
///
/// Model dimensions: the source shaping filter S is n_s x n_s, the
/// observation noise shaping M is n_s x n_m (possibly zero), the target map
/// P is n_e x n_s, the error weight W is n_e x n_e, and the channel noise
/// shaping N is scalar. The channel carries n_t streams.
struct ProblemSpec {
  TransferFunction s = TransferFunction::identity();
  TransferFunction m = TransferFunction::zero();
  TransferFunction n = TransferFunction::identity();
  TransferFunction w = TransferFunction::identity();
  TransferFunction p = TransferFunction::identity();
  double snr = 1.0;  // sigma^2, channel power over unit noise variance
  int n_s = 1, n_t = 1, n_e = 1;
  FrequencyGrid grid{4096};
  int fir_order = 60;

  bool is_vector() const { return n_s > 1 || n_e > 1 || n_t > 1; }
};

/// Checks the standing assumptions: dimensions consistent, fir_order
/// resolvable on the grid, snr > 0, SS* + MM* uniformly positive on the
/// grid, N and W invertible in H-infinity for the scalar case (no zeros on
/// or inside the unit z^{-1} circle), and N = W = I with
/// n_t >= min(n_s, n_e) for the vector case.
void validate(const ProblemSpec& spec);

/// The equivalent unconstrained convex problem after completing squares:
/// minimize psi(X) = ||R - X||_2^2 + (1/sigma_sq) ||X N||_1^2 over causal X,
/// with total distortion psi + eta.
struct ReducedProblem {
  GridSamples r;    // R = W P S S* H^{-*}
  GridSamples n;    // channel noise shaping on the grid (scalar)
  GridSamples h;    // outer factor, H H* = S S* + M M*
  double eta = 0.0;
  double sigma_sq = 1.0;
};

/// Builds the reduced problem. eta = ||WPS||_2^2 - ||R||_2^2 is nonnegative
/// up to quadrature error and vanishes when M = 0 and S is outer.
ReducedProblem reduce(const ProblemSpec& spec);

/// psi by direct quadrature: ||R - X||_2^2 + (1/sigma_sq) ||X N||_1^2.
double psi_cost(const GridSamples& x_samples, const ReducedProblem& rp);
double psi_cost(const TransferFunction& x, const ReducedProblem& rp);

/// The original objective phi(K) = ||W(P-K)S||_2^2 + ||WKM||_2^2
/// + (1/snr) ||W K [S M] N||_1^2 by direct quadrature of the three terms.
/// Cross-check identity: phi(K) = psi(WKH) + eta to quadrature accuracy.
double phi_cost(const GridSamples& k, const ProblemSpec& spec);

/// Optimality certificate for scalar problems, from the stationarity
/// condition (||XN||_1 / sigma_sq) P_+(|N| X / |X|) + X - P_+(R) = 0.
/// Returns the grid L2 norm of the left side. With N = 1 and causal R this
/// is the textbook form ||(||X||_1/sigma_sq) P_+(X/|X|) - (R - X)||_2.
/// Returns NaN (certificate skipped) when |X| dips below 1e-10 anywhere.
/// X identically zero has no phase: undefined-certificate error.
double el_residual(const TransferFunction& x, const ReducedProblem& rp);

}  // namespace jscc
