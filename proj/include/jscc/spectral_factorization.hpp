#pragma once

#include "jscc/transfer_function.hpp"

namespace jscc {

/// Hermitian positive (semi)definite samples with a claimed eigenvalue floor.
struct SpectralDensity {
  GridSamples samples;
  double floor = 0.0;

  /// Validates per-bin Hermitian symmetry (defect <= herm_tol * scale) and,
  /// when floor > 0, the eigenvalue floor at every grid point.
  static SpectralDensity from_samples(GridSamples s, double floor = 0.0,
                                      double herm_tol = 1e-12);

  int dim() const { return samples.rows(); }
};

/// Outer (minimum-phase) scalar factor H with |H|^2 == phi exactly on the
/// grid and H's zeroth impulse coefficient positive. Cepstral construction:
/// take log(phi), keep the causal half of its DFT coefficients (zeroth and
/// Nyquist halved), exponentiate.
GridSamples scalar_spectral_factor(const SpectralDensity& phi);

struct MatrixFactorOptions {
  double tol = 1e-8;  // relative residual ||HH* - phi|| / ||phi||
  int max_iter = 200;
};

/// Causal outer H with H H^* == phi on the grid, by Wilson's Newton
/// iteration started from the Cholesky factor of phi's zeroth Fourier
/// coefficient. The constant unitary freedom is fixed so the zeroth impulse
/// coefficient is lower triangular with positive diagonal.
GridSamples matrix_spectral_factor(const SpectralDensity& phi,
                                   const MatrixFactorOptions& opts = {});

struct InnerOuterPair {
  GridSamples inner;  // K_i, n_e x m, K_i^* K_i = I_m
  GridSamples outer;  // K_o, m x n_s, row outer
  int rank = 0;       // m
};

/// Inner-outer factorization K = K_i K_o of full-rank K with
/// m = min(n_e, n_s). Scalars go through FIR root reflection (zeros outside
/// the unit circle are reflected inside; K_i becomes the Blaschke product
/// times the delay). The vector case factorizes K^*K = K_o^* K_o through
/// matrix_spectral_factor and sets K_i = K K_o^{-1}; it needs n_s <= n_e,
/// since a wide outer factor would require a non-square spectral
/// factorization (out of scope).
InnerOuterPair inner_outer_factorize(const GridSamples& k,
                                     double tol_rank = 1e-8);

struct GridSvd {
  GridSamples u;      // r x m, orthonormal columns
  GridSamples sigma;  // m x m real diagonal, descending
  GridSamples v;      // c x m, orthonormal columns
  int rank = 0;       // m = min(r, c)

  Eigen::VectorXd sigma_values(int k) const {
    return sigma.at(k).diagonal().real();
  }
};

/// Per-frequency SVD X = U Sigma V^*, singular values descending. The free
/// phases are pinned per column: the first entry of each V column whose
/// modulus exceeds 1e-12 of the column peak is rotated real nonnegative.
GridSvd svd_on_grid(const GridSamples& x);

/// min over singular-value index j of sum_k weight * log sigma_j(omega_k).
/// Values below about -30 signal near rank loss; an exact zero yields
/// -infinity.
double log_sigma_diagnostic(const GridSvd& svd);

}  // namespace jscc
