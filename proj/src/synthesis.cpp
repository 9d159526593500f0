#include "jscc/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jscc/spectral_factorization.hpp"

namespace jscc {

namespace {

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

TransferFunction scale_fir(const TransferFunction& x, double factor) {
  auto coeffs = x.fir_coeffs();
  for (auto& m : coeffs) m *= factor;
  return TransferFunction::fir(std::move(coeffs));
}

/// Grow the coefficient matrices with zero rows / columns (padding the
/// synthesized factors up to the channel dimension n_t).
TransferFunction pad_fir(const TransferFunction& x, int rows, int cols) {
  std::vector<Eigen::MatrixXd> coeffs(x.fir_length());
  for (int t = 0; t < x.fir_length(); ++t) {
    coeffs[t] = Eigen::MatrixXd::Zero(rows, cols);
    coeffs[t].topLeftCorner(x.rows(), x.cols()) = x.fir_coeffs()[t];
  }
  return TransferFunction::fir(std::move(coeffs));
}

/// Energy in strictly anticausal impulse coefficients (indices above n/2;
/// n/2 itself counts as causal) relative to the total.
double anticausal_ratio(const GridSamples& x) {
  const auto coef = fourier_coefficients(x);
  const int n = x.grid.n;
  double total = 0.0, anti = 0.0;
  for (int t = 0; t < n; ++t) {
    const double e = coef[t].squaredNorm();
    total += e;
    if (t > n / 2) anti += e;
  }
  return total > 0.0 ? anti / total : 0.0;
}

int truncation_taps(const ProblemSpec& spec) {
  return std::max(1, std::min(4 * spec.fir_order, spec.grid.n / 2));
}

/// Shared tail of both synthesis paths: truncate the factors, rescale the
/// pair so the power budget is met with equality (the product is
/// invariant), and evaluate the certificates on what is actually returned.
void finalize(DesignResult& out, const GridSamples& k,
              const ProblemSpec& spec, const GridSamples& sm,
              const GridSamples& ws, const GridSamples& ns,
              const GridSamples& dd_target, double l1) {
  auto ce = evaluate_on_grid(out.c, spec.grid);
  auto de = evaluate_on_grid(out.d, spec.grid);

  const double power_raw = h2_norm_sq(multiply(ce, sm));
  out.certificates.power_gap = std::abs(power_raw - spec.snr);
  if (power_raw > 0.0) {
    const double factor = std::sqrt(spec.snr / power_raw);
    // A factor far from 1 means the truncation mangled the design; leave
    // the result alone so the gap stays visible.
    if (std::abs(factor - 1.0) < 0.1) {
      out.c = scale_fir(out.c, factor);
      out.d = scale_fir(out.d, 1.0 / factor);
      ce = evaluate_on_grid(out.c, spec.grid);
      de = evaluate_on_grid(out.d, spec.grid);
    }
  }
  out.predicted_power = h2_norm_sq(multiply(ce, sm));
  out.predicted_distortion = phi_cost(k, spec);

  const double k_l2 = std::sqrt(h2_norm_sq(k));
  out.certificates.factorization_gap =
      std::sqrt(h2_norm_sq(subtract(multiply(de, ce), k))) / k_l2;

  const auto dd = multiply(de, adjoint(de));
  out.certificates.dd_star_gap =
      std::sqrt(h2_norm_sq(subtract(dd, dd_target))) /
      std::sqrt(h2_norm_sq(dd_target));

  const double lhs = h2_norm_sq(multiply(ws, multiply(de, ns)));
  const double rhs = l1 * l1 / spec.snr;
  out.certificates.lemma2_value_gap = std::abs(lhs - rhs) / rhs;
}

/// D = 0 with C a scaled slice of H^{-1}: feasible, meets the power budget
/// with equality, and optimal whenever K = 0 is optimal.
DesignResult degenerate_design(const GridSamples& k, const ProblemSpec& spec,
                               const ReducedProblem& rp,
                               const GridSamples& sm) {
  DesignResult out;
  const int m = std::min(spec.n_t, spec.n_s);
  const auto hinv = inverse(rp.h);
  GridSamples c0(spec.grid, m, spec.n_s);
  for (int kk = 0; kk < c0.size(); ++kk)
    c0.at(kk) = hinv.at(kk).topRows(m);
  const double p0 = h2_norm_sq(multiply(c0, sm));
  const auto c_scaled = scale(c0, cd(std::sqrt(spec.snr / p0), 0.0));
  auto c_fir =
      truncate_to_fir(c_scaled, truncation_taps(spec), &out.c_truncation);
  if (spec.n_t > m) c_fir = pad_fir(c_fir, spec.n_t, spec.n_s);

  out.k = TransferFunction::zero(spec.n_e, spec.n_s);
  out.c = c_fir;
  out.d = TransferFunction::zero(spec.n_e, spec.n_t);
  out.predicted_distortion = phi_cost(k, spec);

  auto ce = evaluate_on_grid(out.c, spec.grid);
  const double power_raw = h2_norm_sq(multiply(ce, sm));
  out.certificates.power_gap = std::abs(power_raw - spec.snr);
  if (power_raw > 0.0) {
    out.c = scale_fir(out.c, std::sqrt(spec.snr / power_raw));
    ce = evaluate_on_grid(out.c, spec.grid);
  }
  out.predicted_power = h2_norm_sq(multiply(ce, sm));
  return out;
}

}  // namespace

DesignResult synthesize_scalar(const GridSamples& k, const ProblemSpec& spec) {
  validate(spec);
  if (spec.is_vector())
    throw InvalidInputError("synthesize_scalar: scalar problems only");
  if (!k.is_scalar() || !(k.grid == spec.grid))
    throw InvalidInputError("synthesize_scalar: K does not match the problem dimensions");

  const auto rp = reduce(spec);
  const auto ss = evaluate_on_grid(spec.s, spec.grid);
  const auto ms = evaluate_on_grid(spec.m, spec.grid);
  const auto ns = evaluate_on_grid(spec.n, spec.grid);
  const auto ws = evaluate_on_grid(spec.w, spec.grid);
  const auto sm = hconcat(ss, ms);

  if (std::sqrt(h2_norm_sq(k)) <= 1e-8 * std::sqrt(h2_norm_sq(rp.r)))
    return degenerate_design(k, spec, rp, sm);

  const auto wkn = multiply(ws, multiply(k, ns));
  const double l1 = l1_norm(multiply(wkn, sm));

  // |C|^2 from the optimality condition, floored so the outer factor stays
  // well conditioned where K nearly vanishes.
  GridSamples c2(spec.grid, 1, 1);
  double peak = 0.0;
  for (int kk = 0; kk < c2.size(); ++kk) {
    const double v = spec.snr * std::abs(wkn.scalar(kk)) /
                     (l1 * std::abs(rp.h.scalar(kk)));
    c2.at(kk)(0, 0) = v;
    peak = std::max(peak, v);
  }
  for (int kk = 0; kk < c2.size(); ++kk) c2.at(kk)(0, 0) += 1e-9 * peak;

  const auto c_samples =
      scalar_spectral_factor(SpectralDensity::from_samples(c2));

  GridSamples d_samples(spec.grid, 1, 1);
  for (int kk = 0; kk < d_samples.size(); ++kk)
    d_samples.at(kk)(0, 0) = k.scalar(kk) / c_samples.scalar(kk);

  const double anti = anticausal_ratio(d_samples);
  if (anti > 1e-6)
    throw SynthesisError(
        "synthesize_scalar: decoder is not causal (anticausal energy ratio " +
        std::to_string(anti) + "); K is not accurately causal");

  DesignResult out;
  const int taps = truncation_taps(spec);
  out.k = truncate_to_fir(k, taps, &out.k_truncation);
  out.c = truncate_to_fir(c_samples, taps, &out.c_truncation);
  out.d = truncate_to_fir(d_samples, taps, &out.d_truncation);

  // Optimal |D|^2 profile for the certificate.
  GridSamples dd_target(spec.grid, 1, 1);
  for (int kk = 0; kk < dd_target.size(); ++kk) {
    const cd wn = ws.scalar(kk) * ns.scalar(kk);
    dd_target.at(kk)(0, 0) = l1 / spec.snr *
                             std::abs(k.scalar(kk) * rp.h.scalar(kk)) /
                             std::abs(wn);
  }
  finalize(out, k, spec, sm, ws, ns, dd_target, l1);
  return out;
}

DesignResult synthesize_vector(const GridSamples& k, const ProblemSpec& spec) {
  validate(spec);
  if (!is_identity_tf(spec.n) || !is_identity_tf(spec.w))
    throw InvalidInputError("synthesize_vector: requires N = W = I");
  if (k.rows() != spec.n_e || k.cols() != spec.n_s || !(k.grid == spec.grid))
    throw InvalidInputError("synthesize_vector: K does not match the problem dimensions");

  const auto rp = reduce(spec);
  const auto ss = evaluate_on_grid(spec.s, spec.grid);
  const auto ms = evaluate_on_grid(spec.m, spec.grid);
  const auto ns = evaluate_on_grid(spec.n, spec.grid);
  const auto ws = evaluate_on_grid(spec.w, spec.grid);
  const auto sm = hconcat(ss, ms);

  if (std::sqrt(h2_norm_sq(k)) <= 1e-8 * std::sqrt(h2_norm_sq(rp.r)))
    return degenerate_design(k, spec, rp, sm);

  const auto io = inner_outer_factorize(k);
  const int m = io.rank;
  const auto svd = svd_on_grid(multiply(io.outer, rp.h));
  const double l1 = l1_norm(multiply(k, sm));
  const double lam = l1 / spec.snr;

  GridSamples b(spec.grid, m, m);
  for (int kk = 0; kk < b.size(); ++kk)
    b.at(kk) = lam * svd.u.at(kk) * svd.sigma.at(kk) * svd.u.at(kk).adjoint();

  // Least-squares fit of A_0 + sum_j A_j (e^{ijw} + e^{-ijw}) over the
  // uniform grid: orthogonality reduces it to pairing the +j and -j Fourier
  // coefficients of B. Retry with a denser basis if positivity is lost.
  const auto bcoef = fourier_coefficients(b);
  const int n = spec.grid.n;
  GridSamples a(spec.grid, m, m);
  int n_c = std::min(spec.fir_order, n / 2 - 1);
  for (int attempt = 0;; ++attempt) {
    std::vector<Eigen::MatrixXd> basis(n_c + 1);
    basis[0] = bcoef[0].real();
    basis[0] = 0.5 * (basis[0] + basis[0].transpose()).eval();
    for (int j = 1; j <= n_c; ++j)
      basis[j] = 0.5 * (bcoef[j].real() + bcoef[n - j].real());

    double min_eig = std::numeric_limits<double>::infinity(), max_eig = 0.0;
    for (int kk = 0; kk < n; ++kk) {
      Eigen::MatrixXd acc = basis[0];
      for (int j = 1; j <= n_c; ++j)
        acc += 2.0 * std::cos(j * spec.grid.omega(kk)) * basis[j];
      a.at(kk) = acc.cast<cd>();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(acc);
      min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
      max_eig = std::max(max_eig, es.eigenvalues().maxCoeff());
    }
    if (min_eig >= -1e-8 * max_eig) {
      if (min_eig < 0.0) {
        // Ridge within the accepted defect so the factorization sees a
        // positive density.
        const double delta = -min_eig + 1e-14 * max_eig;
        for (int kk = 0; kk < n; ++kk)
          a.at(kk) += delta * Eigen::MatrixXcd::Identity(m, m);
      }
      break;
    }
    if (n_c >= n / 2 - 1 || attempt >= 3)
      throw FitError(
          "synthesize_vector: DD* basis fit lost positive semidefiniteness");
    n_c = std::min(2 * n_c, n / 2 - 1);
  }

  const auto d_o =
      matrix_spectral_factor(SpectralDensity::from_samples(a, 0.0, 1e-9));
  const auto d_samples = multiply(io.inner, d_o);
  const auto c_samples = multiply(inverse(d_o), io.outer);

  DesignResult out;
  const int taps = truncation_taps(spec);
  out.k = truncate_to_fir(k, taps, &out.k_truncation);
  auto c_fir = truncate_to_fir(c_samples, taps, &out.c_truncation);
  auto d_fir = truncate_to_fir(d_samples, taps, &out.d_truncation);
  if (spec.n_t > m) {
    c_fir = pad_fir(c_fir, spec.n_t, spec.n_s);
    std::vector<Eigen::MatrixXd> dpad(d_fir.fir_length());
    for (int t = 0; t < d_fir.fir_length(); ++t) {
      dpad[t] = Eigen::MatrixXd::Zero(spec.n_e, spec.n_t);
      dpad[t].leftCols(m) = d_fir.fir_coeffs()[t];
    }
    d_fir = TransferFunction::fir(std::move(dpad));
  }
  out.c = c_fir;
  out.d = d_fir;

  GridSamples dd_target(spec.grid, spec.n_e, spec.n_e);
  for (int kk = 0; kk < n; ++kk) {
    const Eigen::MatrixXcd core =
        svd.u.at(kk) * svd.sigma.at(kk) * svd.u.at(kk).adjoint();
    dd_target.at(kk) = lam * io.inner.at(kk) * core * io.inner.at(kk).adjoint();
  }
  finalize(out, k, spec, sm, ws, ns, dd_target, l1);
  return out;
}

ValidationReport validate_design(const DesignResult& result,
                                 const ProblemSpec& spec) {
  validate(spec);
  const auto ss = evaluate_on_grid(spec.s, spec.grid);
  const auto ms = evaluate_on_grid(spec.m, spec.grid);
  const auto ns = evaluate_on_grid(spec.n, spec.grid);
  const auto ws = evaluate_on_grid(spec.w, spec.grid);
  const auto ps = evaluate_on_grid(spec.p, spec.grid);
  const auto ce = evaluate_on_grid(result.c, spec.grid);
  const auto de = evaluate_on_grid(result.d, spec.grid);
  const auto dc = multiply(de, ce);

  ValidationReport rep;
  rep.j_value = h2_norm_sq(multiply(ws, multiply(subtract(ps, dc), ss))) +
                h2_norm_sq(multiply(ws, multiply(dc, ms))) +
                h2_norm_sq(multiply(ws, multiply(de, ns)));
  rep.phi_value = phi_cost(evaluate_on_grid(result.k, spec.grid), spec);
  rep.power = h2_norm_sq(multiply(ce, hconcat(ss, ms)));
  rep.duality_gap =
      (rep.j_value - rep.phi_value) / std::max(rep.phi_value, 1e-300);
  rep.power_slack = spec.snr - rep.power;
  rep.feasible = rep.power <= spec.snr * (1.0 + 1e-6) + 1e-12;
  return rep;
}

}  // namespace jscc
