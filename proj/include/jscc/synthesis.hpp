#pragma once

#include "jscc/design_problem.hpp"

namespace jscc {

/// Grid-evaluated optimality certificates for a synthesized pair.
struct DesignCertificates {
  double power_gap = 0.0;          // | ||C [S M]||_2^2 - sigma^2 | of the
                                   // truncated pair, before the final rescale
  double factorization_gap = 0.0;  // ||DC - K||_2 / ||K||_2, 0 when K = 0
  double dd_star_gap = 0.0;        // relative gap of DD* to its optimal profile
  double lemma2_value_gap = 0.0;   // relative gap of ||WDN||_2^2 to the
                                   // closed form ||WKHN||_1^2 / sigma^2
};

/// Encoder C and decoder D recovered from an optimal product K = DC, all
/// truncated to FIR (4 * fir_order taps; relative energy dropped by each
/// truncation is reported). After truncation C is rescaled to meet the
/// power budget exactly and D absorbs the inverse factor, which leaves the
/// product unchanged.
struct DesignResult {
  TransferFunction k = TransferFunction::zero();
  TransferFunction c = TransferFunction::zero();
  TransferFunction d = TransferFunction::zero();
  double predicted_distortion = 0.0;  // phi(K) of the input samples
  double predicted_power = 0.0;       // ||C [S M]||_2^2 of the returned C
  DesignCertificates certificates;
  double k_truncation = 0.0;
  double c_truncation = 0.0;
  double d_truncation = 0.0;
};

/// Scalar synthesis. If ||K||_2 <= 1e-8 ||R||_2 the degenerate branch
/// returns D = 0 with C = sigma H^{-1} (power met with equality). Otherwise
/// |C|^2 = sigma^2 |WKN| / (||WKN [S M]||_1 |H|) on the grid (a relative
/// floor of 1e-9 is added before factorization to keep the log integrable
/// near zeros of K), C is its outer factor, and D = K / C. D must come out
/// causal: anticausal energy above 1e-6 of its total raises SynthesisError.
DesignResult synthesize_scalar(const GridSamples& k, const ProblemSpec& spec);

/// Vector synthesis (requires N = W = I; degenerate 1x1 dimensions are
/// allowed and reproduce the scalar result). Pipeline: K = K_i K_o,
/// SVD K_o H = U_o Sigma V^*, target B = (||K [S M]||_1 / sigma^2)
/// U_o Sigma U_o^*, least-squares fit of A(w) = A_0 + sum_j A_j
/// (e^{ijw} + e^{-ijw}) to B over the grid (j <= N_c = fir_order; on the
/// uniform grid this is Fourier cosine truncation), spectral factorization
/// A = D_o D_o^*, then D = K_i D_o, C = D_o^{-1} K_o, padded with zero
/// columns / rows up to n_t. If the fitted A dips below -1e-8 of its top
/// eigenvalue the fit retries with N_c doubled, then raises FitError.
DesignResult synthesize_vector(const GridSamples& k, const ProblemSpec& spec);

/// Quadrature evaluation of the full objective for a candidate pair.
struct ValidationReport {
  double j_value = 0.0;    // J(C,D), the three-term objective
  double phi_value = 0.0;  // phi(K) for K from the result
  double power = 0.0;      // ||C [S M]||_2^2
  double duality_gap = 0.0;   // (j_value - phi_value) / max(phi_value, eps)
  double power_slack = 0.0;   // sigma^2 - power; negative means infeasible
  bool feasible = false;      // power <= sigma^2 (1 + 1e-6) + 1e-12
};

ValidationReport validate_design(const DesignResult& result,
                                 const ProblemSpec& spec);

}  // namespace jscc
