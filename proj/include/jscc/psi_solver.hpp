#pragma once

#include "jscc/design_problem.hpp"

namespace jscc {

struct SolverOptions {
  double tol = 1e-7;     // relative primal change per iteration
  int max_iter = 50000;
};

struct SolveReport {
  TransferFunction x_opt = TransferFunction::zero();
  double psi_value = 0.0;
  double el_residual = 0.0;  // NaN when the certificate does not apply
  int iterations = 0;
  bool converged = false;
};

/// Minimizes the discretized psi over real-coefficient causal FIR X with
/// `fir_order` taps by an accelerated primal-dual (Chambolle-Pock) scheme.
///
/// The quadratic term collapses to ||x - rho||^2 + const because the
/// coefficient-to-weighted-samples map is an isometry; that makes the primal
/// objective 2-strongly convex, so the accelerated step-size schedule
/// applies. The nonsmooth term (1/sigma_sq) g(Bx)^2 with
/// g(y) = sum_k sqrt(w) ||y_k||_* is handled through its prox:
/// prox of a squared norm reduces to norm-prox at a level s found by
/// bisection on s = 2 lambda c g(prox_{s g}(u)), and the norm-prox is
/// per-frequency (complex or singular-value) soft thresholding.
///
/// Stops when the relative primal change drops below opts.tol; otherwise
/// returns the best iterate seen with converged = false.
SolveReport minimize_psi(const ReducedProblem& rp, int fir_order,
                         const SolverOptions& opts = {});

}  // namespace jscc
