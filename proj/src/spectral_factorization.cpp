#include "jscc/spectral_factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jscc/fft.hpp"
#include "jscc/poly.hpp"

namespace jscc {

namespace {

/// Causal half of a Hermitian-valued grid function: DFT coefficients at
/// 1..n/2-1 are kept, the zeroth and the Nyquist one are halved, the
/// anticausal half is zeroed. For Hermitian input G this returns Y with
/// Y + Y^* = G on the grid.
GridSamples causal_half(const GridSamples& g) {
  const int n = g.grid.n;
  GridSamples out(g.grid, g.rows(), g.cols());
  Fft fft(n);
  std::vector<cd> freq(n), coef(n);
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      for (int k = 0; k < n; ++k) freq[k] = g.at(k)(i, j);
      fft.inverse(freq.data(), coef.data());
      coef[0] *= 0.5;
      coef[n / 2] *= 0.5;
      std::fill(coef.begin() + n / 2 + 1, coef.end(), cd(0.0, 0.0));
      fft.forward(coef.data(), freq.data());
      for (int k = 0; k < n; ++k) out.at(k)(i, j) = freq[k];
    }
  }
  return out;
}

double relative_factor_residual(const GridSamples& h, const GridSamples& phi) {
  double num = 0.0, den = 0.0;
  for (int k = 0; k < phi.size(); ++k) {
    num += (h.at(k) * h.at(k).adjoint() - phi.at(k)).squaredNorm();
    den += phi.at(k).squaredNorm();
  }
  return std::sqrt(num / den);
}

}  // namespace

SpectralDensity SpectralDensity::from_samples(GridSamples s, double floor,
                                              double herm_tol) {
  if (s.rows() != s.cols())
    throw InvalidInputError("SpectralDensity: samples must be square");
  if (floor < 0.0)
    throw InvalidInputError("SpectralDensity: floor must be >= 0");
  double scale = 0.0;
  for (const auto& m : s.v) scale = std::max(scale, m.norm());
  for (auto& m : s.v) {
    if ((m - m.adjoint().eval()).norm() > herm_tol * std::max(scale, 1.0))
      throw InvalidInputError("SpectralDensity: samples are not Hermitian");
    m = 0.5 * (m + m.adjoint().eval());  // exact symmetrization
  }
  if (floor > 0.0) {
    for (const auto& m : s.v) {
      const double lmin =
          s.rows() == 1
              ? m(0, 0).real()
              : Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m)
                    .eigenvalues()
                    .minCoeff();
      if (lmin < floor * (1.0 - 1e-9) - 1e-300)
        throw IllConditionedDensityError(
            "SpectralDensity: eigenvalue floor violated");
    }
  }
  SpectralDensity d;
  d.samples = std::move(s);
  d.floor = floor;
  return d;
}

GridSamples scalar_spectral_factor(const SpectralDensity& phi) {
  if (phi.dim() != 1)
    throw InvalidInputError("scalar_spectral_factor: density is not scalar");
  const int n = phi.samples.grid.n;
  double pmin = std::numeric_limits<double>::infinity(), pmax = 0.0;
  for (int k = 0; k < n; ++k) {
    const double p = phi.samples.scalar(k).real();
    pmin = std::min(pmin, p);
    pmax = std::max(pmax, p);
  }
  if (!(pmin > 0.0) || pmin / pmax < 1e-10)
    throw IllConditionedDensityError(
        "scalar_spectral_factor: density non-positive or dynamic range "
        "exceeds 1e10");

  GridSamples logphi(phi.samples.grid, 1, 1);
  for (int k = 0; k < n; ++k)
    logphi.at(k)(0, 0) = std::log(phi.samples.scalar(k).real());
  // log H = causal half of log phi; then |H|^2 = exp(Re 2 log H) = phi.
  const auto logh = causal_half(logphi);
  GridSamples h(phi.samples.grid, 1, 1);
  for (int k = 0; k < n; ++k) h.at(k)(0, 0) = std::exp(logh.scalar(k));
  return h;
}

GridSamples matrix_spectral_factor(const SpectralDensity& phi,
                                   const MatrixFactorOptions& opts) {
  const int n = phi.samples.grid.n;
  const int m = phi.dim();

  // Init: Cholesky factor of the zeroth Fourier coefficient (grid mean).
  Eigen::MatrixXcd phi0 = Eigen::MatrixXcd::Zero(m, m);
  for (const auto& mk : phi.samples.v) phi0 += mk;
  phi0 /= static_cast<double>(n);
  Eigen::LLT<Eigen::MatrixXcd> llt(phi0);
  if (llt.info() != Eigen::Success)
    throw IllConditionedDensityError(
        "matrix_spectral_factor: mean density is not positive definite");
  GridSamples h = GridSamples::constant(phi.samples.grid,
                                        Eigen::MatrixXcd(llt.matrixL()));

  double resid = relative_factor_residual(h, phi.samples);
  int iter = 0;
  GridSamples g(phi.samples.grid, m, m);
  while (resid > opts.tol) {
    if (++iter > opts.max_iter)
      throw NonConvergenceError(
          "matrix_spectral_factor: Newton iteration stalled", resid);
    for (int k = 0; k < n; ++k) {
      const auto hinv = h.at(k).partialPivLu();
      g.at(k) = hinv.solve(phi.samples.at(k)) * hinv.inverse().adjoint() -
                Eigen::MatrixXcd::Identity(m, m);
    }
    const auto y = causal_half(g);
    // Damped Newton step H <- H (I + t Y); t = 1 is the Wilson step.
    double t = 1.0;
    for (;;) {
      GridSamples trial(h.grid, m, m);
      for (int k = 0; k < n; ++k)
        trial.at(k) =
            h.at(k) * (Eigen::MatrixXcd::Identity(m, m) + t * y.at(k));
      const double trial_resid = relative_factor_residual(trial, phi.samples);
      if (trial_resid < resid || t < 1.0 / 1024.0) {
        h = std::move(trial);
        resid = trial_resid;
        break;
      }
      t *= 0.5;
    }
  }

  // Pin the constant unitary freedom: zeroth coefficient lower triangular
  // with positive diagonal (matches Cholesky on constant densities).
  Eigen::MatrixXcd h0 = Eigen::MatrixXcd::Zero(m, m);
  for (const auto& mk : h.v) h0 += mk;
  h0 /= static_cast<double>(n);
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(h0.adjoint().eval());
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r =
      qr.matrixQR().triangularView<Eigen::Upper>();
  Eigen::VectorXcd d(m);
  for (int i = 0; i < m; ++i) {
    const cd rii = r(i, i);
    d(i) = std::abs(rii) > 0.0 ? rii / std::abs(rii) : cd(1.0, 0.0);
  }
  const Eigen::MatrixXcd u = q * d.asDiagonal();
  for (auto& mk : h.v) mk = mk * u;
  return h;
}

InnerOuterPair inner_outer_factorize(const GridSamples& k, double tol_rank) {
  const int n = k.grid.n;
  const int n_e = k.rows(), n_s = k.cols();

  double smin = std::numeric_limits<double>::infinity(), smax = 0.0;
  for (int i = 0; i < n; ++i) {
    if (k.is_scalar()) {
      const double s = std::abs(k.scalar(i));
      smin = std::min(smin, s);
      smax = std::max(smax, s);
    } else {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k.at(i));
      smin = std::min(smin, svd.singularValues().minCoeff());
      smax = std::max(smax, svd.singularValues().maxCoeff());
    }
  }
  if (!(smin > tol_rank * smax) || smax == 0.0)
    throw RankDeficiencyError(
        "inner_outer_factorize: K loses rank on the grid");

  InnerOuterPair out;

  if (k.is_scalar()) {
    // FIR root reflection. Recover the coefficient polynomial first.
    const auto coef = fourier_coefficients(k);
    double cmax = 0.0;
    for (const auto& c : coef) cmax = std::max(cmax, std::abs(c(0, 0)));
    int deg_end = n - 1;
    while (deg_end > 0 && std::abs(coef[deg_end](0, 0)) <= 1e-13 * cmax)
      --deg_end;
    if (deg_end > n / 2)
      throw InvalidInputError(
          "inner_outer_factorize: scalar input does not look like a causal "
          "FIR resolved by this grid");
    int lead = 0;
    while (lead < deg_end && std::abs(coef[lead](0, 0)) <= 1e-13 * cmax)
      ++lead;
    std::vector<double> p;
    for (int t = lead; t <= deg_end; ++t) p.push_back(coef[t](0, 0).real());

    // Zeros of the z^{-1}-polynomial strictly inside the unit disk are the
    // non-outer ones; reflect them across the circle on the grid.
    std::vector<cd> reflected;
    for (const cd& root : poly_roots(p, 1e-13)) {
      if (std::abs(root) < 1.0 - 1e-9) reflected.push_back(root);
    }
    GridSamples k_o(k.grid, 1, 1), k_i(k.grid, 1, 1);
    for (int i = 0; i < n; ++i) {
      const cd x = std::exp(cd(0.0, -k.grid.omega(i)));
      cd corr(1.0, 0.0);
      for (const cd& r : reflected)
        corr *= std::abs(r) * (x - 1.0 / std::conj(r)) / (x - r);
      // Strip the delay z^{-lead} as well: it belongs to the inner part.
      const cd zlead = std::exp(cd(0.0, lead * k.grid.omega(i)));
      k_o.at(i)(0, 0) = k.scalar(i) * zlead * corr;
      k_i.at(i)(0, 0) = k.scalar(i) / k_o.scalar(i);
    }
    out.inner = std::move(k_i);
    out.outer = std::move(k_o);
    out.rank = 1;
    return out;
  }

  if (n_e < n_s)
    throw InvalidInputError(
        "inner_outer_factorize: wide K (n_e < n_s) would need a non-square "
        "outer factor; unsupported");

  // K^* K = K_o^* K_o. Transposing coefficientwise turns the left-sided
  // factorization into the H H^* form Wilson solves: with G G^* = (K^*K)^T,
  // K_o = G^T satisfies K_o^* K_o = K^*K and stays causal and outer.
  const int m = n_s;
  GridSamples gram_t(k.grid, m, m);
  for (int i = 0; i < n; ++i)
    gram_t.at(i) = (k.at(i).adjoint() * k.at(i)).transpose().eval();
  const auto g = matrix_spectral_factor(
      SpectralDensity::from_samples(std::move(gram_t), 0.0, 1e-9));
  GridSamples k_o(k.grid, m, n_s), k_i(k.grid, n_e, m);
  for (int i = 0; i < n; ++i) {
    k_o.at(i) = g.at(i).transpose().eval();
    k_i.at(i) = k.at(i) * k_o.at(i).partialPivLu().inverse();
  }
  out.inner = std::move(k_i);
  out.outer = std::move(k_o);
  out.rank = m;
  return out;
}

GridSvd svd_on_grid(const GridSamples& x) {
  const int n = x.grid.n;
  const int r = x.rows(), c = x.cols();
  const int m = std::min(r, c);
  GridSvd out;
  out.u = GridSamples(x.grid, r, m);
  out.sigma = GridSamples(x.grid, m, m);
  out.v = GridSamples(x.grid, c, m);
  out.rank = m;
  for (int k = 0; k < n; ++k) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        x.at(k), Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::MatrixXcd u = svd.matrixU();
    Eigen::MatrixXcd v = svd.matrixV();
    // Phase convention: first significant entry of each V column made real
    // nonnegative (the same rotation is applied to the U column).
    for (int j = 0; j < m; ++j) {
      const double peak = v.col(j).cwiseAbs().maxCoeff();
      for (int i = 0; i < c; ++i) {
        if (std::abs(v(i, j)) > 1e-12 * peak) {
          const cd ph = std::conj(v(i, j)) / std::abs(v(i, j));
          v.col(j) *= ph;
          u.col(j) *= ph;
          break;
        }
      }
    }
    out.u.at(k) = u;
    out.v.at(k) = v;
    out.sigma.at(k) = svd.singularValues().cast<cd>().asDiagonal();
  }
  return out;
}

double log_sigma_diagnostic(const GridSvd& svd) {
  const int n = svd.sigma.grid.n;
  const int m = svd.rank;
  double worst = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const double s = svd.sigma.at(k)(j, j).real();
      if (s == 0.0) return -std::numeric_limits<double>::infinity();
      acc += std::log(s);
    }
    worst = std::min(worst, acc / n);
  }
  return worst;
}

}  // namespace jscc
