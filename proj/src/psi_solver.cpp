#include "jscc/psi_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jscc/fft.hpp"

namespace jscc {

namespace {

/// Fixed point of s = coef * alpha * sum_j max(0, m_j - s*alpha), the
/// threshold level for the prox of coef/2 * (alpha * sum_j |.|)^2 evaluated
/// at a point whose norm components are m_j. The right side is nonincreasing
/// in s, so bisection brackets the unique solution.
double threshold_level(const std::vector<double>& m, double alpha,
                       double coef) {
  double total = 0.0;
  for (double v : m) total += v;
  double lo = 0.0, hi = coef * alpha * total;
  if (hi <= 0.0) return 0.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    double g = 0.0;
    for (double v : m) g += std::max(0.0, v - mid * alpha);
    if (mid < coef * alpha * g)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct BestIterate {
  std::vector<Eigen::MatrixXd> x;
  double psi = std::numeric_limits<double>::infinity();
};

}  // namespace

SolveReport minimize_psi(const ReducedProblem& rp, int fir_order,
                         const SolverOptions& opts) {
  const FrequencyGrid grid = rp.r.grid;
  const int n = grid.n;
  const int ne = rp.r.rows(), ns = rp.r.cols();
  if (fir_order < 1) throw InvalidInputError("fir_order must be >= 1");
  if (n < 2 * fir_order)
    throw InvalidInputError("grid must have at least 2 * fir_order points");

  const int taps = fir_order;
  const double alpha = std::sqrt(grid.weight());
  const double c = 1.0 / rp.sigma_sq;
  const bool scalar = ne == 1 && ns == 1;

  std::vector<double> nabs(n);
  double lip = 0.0;
  for (int k = 0; k < n; ++k) {
    nabs[k] = std::abs(rp.n.scalar(k));
    lip = std::max(lip, nabs[k]);
  }
  lip = std::max(lip, 1e-300);

  // rho: the first `taps` real Fourier coefficients of R. The map from
  // coefficients to weighted samples is an isometry, so the quadratic term
  // is ||x - rho||^2 plus a constant.
  const auto rcoef = fourier_coefficients(rp.r);
  std::vector<Eigen::MatrixXd> rho(taps);
  for (int t = 0; t < taps; ++t) rho[t] = rcoef[t].real();

  std::vector<Eigen::MatrixXd> x = rho, x_old = rho, x_bar = rho;
  std::vector<Eigen::MatrixXcd> y(n, Eigen::MatrixXcd::Zero(ne, ns));
  std::vector<Eigen::MatrixXcd> xbar_s(n), ytilde(n);

  Fft fft(n);
  std::vector<cd> buf(n), out(n);

  const auto grid_transform = [&](const std::vector<Eigen::MatrixXd>& coefs,
                                  std::vector<Eigen::MatrixXcd>& samples) {
    for (int k = 0; k < n; ++k) samples[k].resize(ne, ns);
    for (int i = 0; i < ne; ++i)
      for (int j = 0; j < ns; ++j) {
        for (int t = 0; t < n; ++t)
          buf[t] = t < taps ? cd(coefs[t](i, j), 0.0) : cd(0.0, 0.0);
        fft.forward(buf.data(), out.data());
        for (int k = 0; k < n; ++k) samples[k](i, j) = out[k];
      }
  };

  const auto psi_at = [&](const std::vector<Eigen::MatrixXd>& coefs) {
    GridSamples xs(grid, ne, ns);
    grid_transform(coefs, xs.v);
    return psi_cost(xs, rp);
  };

  double tau = 1.0 / lip, sgm = 1.0 / lip;
  BestIterate best;
  std::vector<double> pool(scalar ? n : n * std::min(ne, ns));
  std::vector<Eigen::JacobiSVD<Eigen::MatrixXcd>> svds;
  if (!scalar)
    svds.assign(n, Eigen::JacobiSVD<Eigen::MatrixXcd>(
                       ne, ns, Eigen::ComputeThinU | Eigen::ComputeThinV));

  int it = 0;
  bool converged = false;
  while (it < opts.max_iter) {
    ++it;

    // Dual ascent on y with the prox of the squared weighted nuclear norm.
    grid_transform(x_bar, xbar_s);
    const double lam_coef = 2.0 * c / sgm;  // 2 * lambda * c, lambda = 1/sgm
    if (scalar) {
      for (int k = 0; k < n; ++k) {
        ytilde[k] = y[k] + sgm * alpha * rp.n.scalar(k) * xbar_s[k];
        pool[k] = std::abs(ytilde[k](0, 0)) / sgm;
      }
      const double s = threshold_level(pool, alpha, lam_coef);
      for (int k = 0; k < n; ++k) {
        const double keep =
            pool[k] > 0.0 ? std::max(0.0, 1.0 - s * alpha / pool[k]) : 0.0;
        y[k] = ytilde[k] - keep * ytilde[k];  // ytilde - sgm * prox(v)
      }
    } else {
      const int mm = std::min(ne, ns);
      for (int k = 0; k < n; ++k) {
        ytilde[k] = y[k] + sgm * alpha * rp.n.scalar(k) * xbar_s[k];
        svds[k].compute(ytilde[k] / sgm,
                        Eigen::ComputeThinU | Eigen::ComputeThinV);
        for (int j = 0; j < mm; ++j)
          pool[k * mm + j] = svds[k].singularValues()(j);
      }
      const double s = threshold_level(pool, alpha, lam_coef);
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXd sv = svds[k].singularValues();
        for (int j = 0; j < mm; ++j)
          sv(j) = std::max(0.0, sv(j) - s * alpha);
        y[k] = ytilde[k] - sgm * (svds[k].matrixU() * sv.asDiagonal() *
                                  svds[k].matrixV().adjoint());
      }
    }

    // Primal descent on x through the prox of ||x - rho||^2.
    std::swap(x, x_old);
    for (int i = 0; i < ne; ++i)
      for (int j = 0; j < ns; ++j) {
        for (int k = 0; k < n; ++k)
          buf[k] = alpha * std::conj(rp.n.scalar(k)) * y[k](i, j);
        fft.inverse(buf.data(), out.data());
        for (int t = 0; t < taps; ++t) {
          const double bty = n * out[t].real();
          x[t](i, j) = (x_old[t](i, j) - tau * bty + 2.0 * tau * rho[t](i, j)) /
                       (1.0 + 2.0 * tau);
        }
      }

    const double theta = 1.0 / std::sqrt(1.0 + 4.0 * tau);
    tau *= theta;
    sgm /= theta;

    double diff = 0.0, norm = 0.0;
    for (int t = 0; t < taps; ++t) {
      diff += (x[t] - x_old[t]).squaredNorm();
      norm += x[t].squaredNorm();
      x_bar[t] = x[t] + theta * (x[t] - x_old[t]);
    }
    const double rel = std::sqrt(diff) / (std::sqrt(norm) + 1e-300);

    if (it % 100 == 0) {
      const double value = psi_at(x);
      if (value < best.psi) {
        best.psi = value;
        best.x = x;
      }
    }
    if (rel <= opts.tol) {
      converged = true;
      break;
    }
  }

  const double final_psi = psi_at(x);
  if (final_psi <= best.psi) {
    best.psi = final_psi;
    best.x = x;
  }

  SolveReport report;
  if (scalar) {
    std::vector<double> coefs(taps);
    for (int t = 0; t < taps; ++t) coefs[t] = best.x[t](0, 0);
    report.x_opt = TransferFunction::fir(coefs);
  } else {
    report.x_opt = TransferFunction::fir(best.x);
  }
  report.psi_value = best.psi;
  report.iterations = it;
  report.converged = converged;
  report.el_residual = std::numeric_limits<double>::quiet_NaN();
  if (scalar && !report.x_opt.is_zero())
    report.el_residual = el_residual(report.x_opt, rp);
  return report;
}

}  // namespace jscc
