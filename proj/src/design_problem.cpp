#include "jscc/design_problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jscc/poly.hpp"

namespace jscc {

namespace {

/// z^{-1}-domain zeros on or inside the closed unit disk make 1/X acausal
/// or unstable; reject them (with a small margin for root roundoff).
void check_h_inf_invertible(const TransferFunction& x, const char* name) {
  const std::string who(name);
  if (x.is_zero())
    throw InvalidInputError(who + " must be invertible in H-infinity");
  std::vector<double> coeffs;
  switch (x.kind()) {
    case TransferFunction::Kind::PureDelay:
      if (x.delay_amount() > 0)
        throw InvalidInputError(who + " is a delay, not invertible");
      return;
    case TransferFunction::Kind::ScalarRational:
      coeffs = x.num();  // poles are already constrained at construction
      break;
    case TransferFunction::Kind::Fir:
      for (const auto& m : x.fir_coeffs()) coeffs.push_back(m(0, 0));
      break;
  }
  for (const cd& root : poly_roots(coeffs)) {
    if (std::abs(root) <= 1.0 + 1e-9)
      throw InvalidInputError(who +
                              " has a zero on or inside the unit circle");
  }
}

bool is_identity_tf(const TransferFunction& x) {
  if (x.kind() == TransferFunction::Kind::PureDelay)
    return x.delay_amount() == 0;
  if (x.kind() == TransferFunction::Kind::Fir)
    return x.fir_length() == 1 &&
           (x.fir_coeffs()[0] -
            Eigen::MatrixXd::Identity(x.rows(), x.cols()))
                   .norm() <= 1e-14;
  return x.num() == std::vector<double>{1.0} &&
         x.den() == std::vector<double>{1.0};
}

GridSamples hconcat(const GridSamples& a, const GridSamples& b) {
  if (a.rows() != b.rows() || !(a.grid == b.grid))
    throw InvalidInputError("hconcat: incompatible blocks");
  GridSamples out(a.grid, a.rows(), a.cols() + b.cols());
  for (int k = 0; k < a.size(); ++k) {
    out.at(k).leftCols(a.cols()) = a.at(k);
    out.at(k).rightCols(b.cols()) = b.at(k);
  }
  return out;
}

GridSamples source_density(const GridSamples& ss, const GridSamples& mm) {
  GridSamples phi(ss.grid, ss.rows(), ss.rows());
  for (int k = 0; k < ss.size(); ++k)
    phi.at(k) = ss.at(k) * ss.at(k).adjoint() + mm.at(k) * mm.at(k).adjoint();
  return phi;
}

}  // namespace

void validate(const ProblemSpec& spec) {
  if (spec.n_s < 1 || spec.n_t < 1 || spec.n_e < 1)
    throw InvalidInputError("dimensions must be positive");
  if (spec.fir_order < 1)
    throw InvalidInputError("fir_order must be at least 1");
  if (spec.grid.n < 2 * spec.fir_order)
    throw InvalidInputError("grid must have at least 2 * fir_order points");
  if (!(spec.snr > 0.0)) throw InvalidInputError("snr must be positive");

  if (spec.s.rows() != spec.n_s || spec.s.cols() != spec.n_s)
    throw InvalidInputError("S must be n_s x n_s");
  if (spec.m.rows() != spec.n_s)
    throw InvalidInputError("M must have n_s rows");
  if (spec.w.rows() != spec.n_e || spec.w.cols() != spec.n_e)
    throw InvalidInputError("W must be n_e x n_e");
  if (spec.p.rows() != spec.n_e || spec.p.cols() != spec.n_s)
    throw InvalidInputError("P must be n_e x n_s");
  if (!spec.n.is_scalar())
    throw InvalidInputError("N must be scalar");

  if (spec.is_vector()) {
    if (spec.n_t < std::min(spec.n_s, spec.n_e))
      throw InvalidInputError("need n_t >= min(n_s, n_e)");
    if (!is_identity_tf(spec.n) || !is_identity_tf(spec.w))
      throw InvalidInputError("vector problems require N = W = I");
  } else {
    check_h_inf_invertible(spec.n, "N");
    check_h_inf_invertible(spec.w, "W");
  }

  // SS* + MM* >= epsilon > 0 uniformly on the grid.
  const auto phi = source_density(evaluate_on_grid(spec.s, spec.grid),
                                  evaluate_on_grid(spec.m, spec.grid));
  double lmin = std::numeric_limits<double>::infinity(), lmax = 0.0;
  for (int k = 0; k < phi.size(); ++k) {
    if (phi.is_scalar()) {
      lmin = std::min(lmin, phi.scalar(k).real());
      lmax = std::max(lmax, phi.scalar(k).real());
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(phi.at(k));
      lmin = std::min(lmin, es.eigenvalues().minCoeff());
      lmax = std::max(lmax, es.eigenvalues().maxCoeff());
    }
  }
  if (!(lmin > 1e-10 * lmax) || lmax == 0.0)
    throw InvalidInputError(
        "SS* + MM* is not uniformly positive on the grid");
}

ReducedProblem reduce(const ProblemSpec& spec) {
  validate(spec);
  const auto ss = evaluate_on_grid(spec.s, spec.grid);
  const auto ms = evaluate_on_grid(spec.m, spec.grid);
  const auto ws = evaluate_on_grid(spec.w, spec.grid);
  const auto ps = evaluate_on_grid(spec.p, spec.grid);

  const auto phi = SpectralDensity::from_samples(source_density(ss, ms));
  ReducedProblem rp;
  rp.h = spec.n_s == 1 ? scalar_spectral_factor(phi)
                       : matrix_spectral_factor(phi);
  const auto wps = multiply(ws, multiply(ps, ss));
  rp.r = multiply(wps, multiply(adjoint(ss), inverse(adjoint(rp.h))));
  rp.eta = h2_norm_sq(wps) - h2_norm_sq(rp.r);
  rp.n = evaluate_on_grid(spec.n, spec.grid);
  rp.sigma_sq = spec.snr;
  return rp;
}

double psi_cost(const GridSamples& x_samples, const ReducedProblem& rp) {
  if (x_samples.rows() != rp.r.rows() || x_samples.cols() != rp.r.cols() ||
      !(x_samples.grid == rp.r.grid))
    throw InvalidInputError("psi_cost: X does not match R");
  const double quad = h2_norm_sq(subtract(rp.r, x_samples));
  const double l1 = l1_norm(multiply(x_samples, rp.n));
  return quad + l1 * l1 / rp.sigma_sq;
}

double psi_cost(const TransferFunction& x, const ReducedProblem& rp) {
  return psi_cost(evaluate_on_grid(x, rp.r.grid), rp);
}

double phi_cost(const GridSamples& k, const ProblemSpec& spec) {
  const auto ss = evaluate_on_grid(spec.s, spec.grid);
  const auto ms = evaluate_on_grid(spec.m, spec.grid);
  const auto ws = evaluate_on_grid(spec.w, spec.grid);
  const auto ps = evaluate_on_grid(spec.p, spec.grid);
  const auto ns = evaluate_on_grid(spec.n, spec.grid);

  const double track = h2_norm_sq(multiply(ws, multiply(subtract(ps, k), ss)));
  const double leak = h2_norm_sq(multiply(ws, multiply(k, ms)));
  const double power_coupling =
      l1_norm(multiply(multiply(ws, k), multiply(hconcat(ss, ms), ns)));
  return track + leak + power_coupling * power_coupling / spec.snr;
}

double el_residual(const TransferFunction& x, const ReducedProblem& rp) {
  if (!rp.r.is_scalar())
    throw InvalidInputError("el_residual: scalar problems only");
  if (x.is_zero())
    throw InvalidInputError("el_residual: certificate undefined for X = 0");
  const auto xs = evaluate_on_grid(x, rp.r.grid);

  GridSamples phase(rp.r.grid, 1, 1);
  for (int k = 0; k < xs.size(); ++k) {
    const cd xv = xs.scalar(k);
    if (std::abs(xv) < 1e-10)
      return std::numeric_limits<double>::quiet_NaN();
    phase.at(k)(0, 0) = std::abs(rp.n.scalar(k)) * xv / std::abs(xv);
  }
  const double l1w = l1_norm(multiply(xs, rp.n));
  const auto lhs =
      add(scale(causal_projection(phase), cd(l1w / rp.sigma_sq, 0.0)),
          subtract(xs, causal_projection(rp.r)));
  return std::sqrt(h2_norm_sq(lhs));
}

}  // namespace jscc
