#include "jscc/transfer_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jscc/fft.hpp"
#include "jscc/poly.hpp"

namespace jscc {

namespace {

constexpr double kSingularEvalTol = 1e-12;

void check_same_grid(const GridSamples& a, const GridSamples& b,
                     const char* who) {
  if (!(a.grid == b.grid))
    throw InvalidInputError(std::string(who) + ": grid mismatch");
}

}  // namespace

FrequencyGrid::FrequencyGrid(int n_points) : n(n_points) {
  if (n < 2 || n % 2 != 0)
    throw InvalidInputError("FrequencyGrid: n_points must be even and >= 2");
}

double FrequencyGrid::omega(int k) const {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / n;
}

GridSamples::GridSamples(FrequencyGrid g, int rows, int cols) : grid(g) {
  if (rows < 1 || cols < 1)
    throw InvalidInputError("GridSamples: dimensions must be positive");
  v.assign(grid.n, Eigen::MatrixXcd::Zero(rows, cols));
}

GridSamples GridSamples::constant(FrequencyGrid g, const Eigen::MatrixXcd& m) {
  GridSamples out(g, static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (auto& mk : out.v) mk = m;
  return out;
}

GridSamples GridSamples::identity(FrequencyGrid g, int dim) {
  return constant(g, Eigen::MatrixXcd::Identity(dim, dim));
}

TransferFunction TransferFunction::fir(std::vector<double> coeffs) {
  std::vector<Eigen::MatrixXd> m(coeffs.size());
  for (size_t t = 0; t < coeffs.size(); ++t) {
    m[t] = Eigen::MatrixXd::Constant(1, 1, coeffs[t]);
  }
  return fir(std::move(m));
}

TransferFunction TransferFunction::fir(std::initializer_list<double> coeffs) {
  return fir(std::vector<double>(coeffs));
}

TransferFunction TransferFunction::fir(std::vector<Eigen::MatrixXd> coeffs) {
  if (coeffs.empty())
    throw InvalidInputError("TransferFunction: FIR needs >= 1 coefficient");
  const auto r = coeffs.front().rows(), c = coeffs.front().cols();
  if (r < 1 || c < 1)
    throw InvalidInputError("TransferFunction: empty FIR coefficient matrix");
  for (const auto& m : coeffs)
    if (m.rows() != r || m.cols() != c)
      throw InvalidInputError(
          "TransferFunction: inconsistent FIR coefficient shapes");
  TransferFunction tf;
  tf.kind_ = Kind::Fir;
  tf.rows_ = static_cast<int>(r);
  tf.cols_ = static_cast<int>(c);
  tf.fir_ = std::move(coeffs);
  return tf;
}

TransferFunction TransferFunction::rational(std::vector<double> num,
                                            std::vector<double> den) {
  if (num.empty() || den.empty())
    throw InvalidInputError("TransferFunction: rational needs num and den");
  double den_max = 0.0;
  for (double d : den) den_max = std::max(den_max, std::abs(d));
  if (den_max == 0.0)
    throw InvalidInputError("TransferFunction: zero denominator");
  if (std::abs(den.front()) <= 1e-14 * den_max)
    throw InvalidInputError(
        "TransferFunction: den[0] must be nonzero (causal filter)");
  // Poles are 1/x over roots x of den(z^{-1}); stability requires every root
  // to sit strictly outside the closed unit disk.
  for (const auto& root : poly_roots(den)) {
    if (std::abs(root) <= 1.0 + 1e-12)
      throw InvalidInputError(
          "TransferFunction: rational filter is not stable/causal (pole on or "
          "outside the unit circle)");
  }
  TransferFunction tf;
  tf.kind_ = Kind::ScalarRational;
  tf.num_ = std::move(num);
  tf.den_ = std::move(den);
  return tf;
}

TransferFunction TransferFunction::delay(int d, int dim) {
  if (d < 0) throw InvalidInputError("TransferFunction: delay must be >= 0");
  if (dim < 1) throw InvalidInputError("TransferFunction: delay dim >= 1");
  TransferFunction tf;
  tf.kind_ = Kind::PureDelay;
  tf.rows_ = tf.cols_ = dim;
  tf.delay_ = d;
  return tf;
}

TransferFunction TransferFunction::zero(int rows, int cols) {
  return fir({Eigen::MatrixXd::Zero(rows, cols)});
}

TransferFunction TransferFunction::identity(int dim) {
  return fir({Eigen::MatrixXd::Identity(dim, dim)});
}

int TransferFunction::fir_length() const {
  if (kind_ != Kind::Fir)
    throw InvalidInputError("TransferFunction: not an FIR");
  return static_cast<int>(fir_.size());
}

const std::vector<Eigen::MatrixXd>& TransferFunction::fir_coeffs() const {
  if (kind_ != Kind::Fir)
    throw InvalidInputError("TransferFunction: not an FIR");
  return fir_;
}

const std::vector<double>& TransferFunction::num() const {
  if (kind_ != Kind::ScalarRational)
    throw InvalidInputError("TransferFunction: not rational");
  return num_;
}

const std::vector<double>& TransferFunction::den() const {
  if (kind_ != Kind::ScalarRational)
    throw InvalidInputError("TransferFunction: not rational");
  return den_;
}

int TransferFunction::delay_amount() const {
  if (kind_ != Kind::PureDelay)
    throw InvalidInputError("TransferFunction: not a delay");
  return delay_;
}

bool TransferFunction::is_zero() const {
  switch (kind_) {
    case Kind::Fir:
      return std::all_of(fir_.begin(), fir_.end(),
                         [](const auto& m) { return m.isZero(0.0); });
    case Kind::ScalarRational:
      return std::all_of(num_.begin(), num_.end(),
                         [](double x) { return x == 0.0; });
    case Kind::PureDelay:
      return false;
  }
  return false;
}

int TransferFunction::max_lag_hint() const {
  switch (kind_) {
    case Kind::Fir:
      return static_cast<int>(fir_.size()) - 1;
    case Kind::PureDelay:
      return delay_;
    case Kind::ScalarRational: {
      // Slowest pole radius sets the decay; aim at a 1e-14 amplitude floor.
      double r = 0.0;
      for (const auto& root : poly_roots(den_))
        r = std::max(r, 1.0 / std::abs(root));
      const int num_lag = static_cast<int>(num_.size()) - 1;
      if (r <= 1e-6) return num_lag;
      return num_lag + static_cast<int>(std::ceil(-32.0 * std::numbers::ln10 /
                                                  (2.0 * std::log(r)))) + 1;
    }
  }
  return 0;
}

GridSamples evaluate_on_grid(const TransferFunction& x,
                             const FrequencyGrid& g) {
  GridSamples out(g, x.rows(), x.cols());
  switch (x.kind()) {
    case TransferFunction::Kind::Fir: {
      const auto& c = x.fir_coeffs();
      if (static_cast<int>(c.size()) > g.n)
        throw InvalidInputError(
            "evaluate_on_grid: FIR longer than the frequency grid");
      Fft fft(g.n);
      std::vector<cd> in(g.n), buf(g.n);
      for (int i = 0; i < x.rows(); ++i) {
        for (int j = 0; j < x.cols(); ++j) {
          std::fill(in.begin(), in.end(), cd(0.0, 0.0));
          for (size_t t = 0; t < c.size(); ++t) in[t] = c[t](i, j);
          fft.forward(in.data(), buf.data());
          for (int k = 0; k < g.n; ++k) out.v[k](i, j) = buf[k];
        }
      }
      break;
    }
    case TransferFunction::Kind::ScalarRational: {
      for (int k = 0; k < g.n; ++k) {
        const cd zi = std::exp(cd(0.0, -g.omega(k)));
        const cd den = poly_eval(x.den(), zi);
        if (std::abs(den) < kSingularEvalTol)
          throw SingularEvaluationError(
              "evaluate_on_grid: rational filter singular on the grid");
        out.v[k](0, 0) = poly_eval(x.num(), zi) / den;
      }
      break;
    }
    case TransferFunction::Kind::PureDelay: {
      const int dim = x.rows();
      for (int k = 0; k < g.n; ++k) {
        out.v[k] = std::exp(cd(0.0, -x.delay_amount() * g.omega(k))) *
                   Eigen::MatrixXcd::Identity(dim, dim);
      }
      break;
    }
  }
  return out;
}

double h2_norm_sq(const GridSamples& x) {
  double acc = 0.0;
  for (const auto& m : x.v) acc += m.squaredNorm();
  return acc * x.grid.weight();
}

double l1_norm(const GridSamples& x) {
  double acc = 0.0;
  if (x.is_scalar()) {
    for (const auto& m : x.v) acc += std::abs(m(0, 0));
  } else {
    for (const auto& m : x.v) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
      acc += svd.singularValues().sum();
    }
  }
  return acc * x.grid.weight();
}

double inner_product_re(const GridSamples& a, const GridSamples& b) {
  check_same_grid(a, b, "inner_product_re");
  double acc = 0.0;
  for (int k = 0; k < a.size(); ++k)
    acc += (a.v[k].adjoint() * b.v[k]).trace().real();
  return acc * a.grid.weight();
}

GridSamples causal_projection(const GridSamples& x, double* tail_ratio_out) {
  const int n = x.grid.n;
  GridSamples out(x.grid, x.rows(), x.cols());
  Fft fft(n);
  std::vector<cd> freq(n), coef(n);
  double total_energy = 0.0, tail_energy = 0.0;
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      for (int k = 0; k < n; ++k) freq[k] = x.v[k](i, j);
      fft.inverse(freq.data(), coef.data());
      for (int t = 0; t < n; ++t) {
        const double e = std::norm(coef[t]);
        total_energy += e;
        if (t >= 3 * n / 4) tail_energy += e;
      }
      // Indices in (n/2, n) are anticausal; n/2 itself stays causal.
      std::fill(coef.begin() + n / 2 + 1, coef.end(), cd(0.0, 0.0));
      fft.forward(coef.data(), freq.data());
      for (int k = 0; k < n; ++k) out.v[k](i, j) = freq[k];
    }
  }
  if (tail_ratio_out)
    *tail_ratio_out = total_energy > 0.0 ? tail_energy / total_energy : 0.0;
  return out;
}

GridSamples adjoint(const GridSamples& x) {
  GridSamples out(x.grid, x.cols(), x.rows());
  for (int k = 0; k < x.size(); ++k) out.v[k] = x.v[k].adjoint();
  return out;
}

GridSamples multiply(const GridSamples& a, const GridSamples& b) {
  check_same_grid(a, b, "multiply");
  if (a.cols() != b.rows()) {
    if (a.is_scalar()) {  // scalar * matrix broadcast
      GridSamples out(b.grid, b.rows(), b.cols());
      for (int k = 0; k < b.size(); ++k) out.v[k] = a.scalar(k) * b.v[k];
      return out;
    }
    if (b.is_scalar()) {
      GridSamples out(a.grid, a.rows(), a.cols());
      for (int k = 0; k < a.size(); ++k) out.v[k] = b.scalar(k) * a.v[k];
      return out;
    }
    throw InvalidInputError("multiply: dimension mismatch");
  }
  GridSamples out(a.grid, a.rows(), b.cols());
  for (int k = 0; k < a.size(); ++k) out.v[k] = a.v[k] * b.v[k];
  return out;
}

GridSamples add(const GridSamples& a, const GridSamples& b) {
  check_same_grid(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidInputError("add: dimension mismatch");
  GridSamples out(a.grid, a.rows(), a.cols());
  for (int k = 0; k < a.size(); ++k) out.v[k] = a.v[k] + b.v[k];
  return out;
}

GridSamples subtract(const GridSamples& a, const GridSamples& b) {
  check_same_grid(a, b, "subtract");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidInputError("subtract: dimension mismatch");
  GridSamples out(a.grid, a.rows(), a.cols());
  for (int k = 0; k < a.size(); ++k) out.v[k] = a.v[k] - b.v[k];
  return out;
}

GridSamples scale(const GridSamples& a, cd s) {
  GridSamples out(a.grid, a.rows(), a.cols());
  for (int k = 0; k < a.size(); ++k) out.v[k] = s * a.v[k];
  return out;
}

GridSamples inverse(const GridSamples& a, double sing_tol) {
  if (a.rows() != a.cols())
    throw InvalidInputError("inverse: samples must be square");
  double smin = std::numeric_limits<double>::infinity(), smax = 0.0;
  if (a.is_scalar()) {
    for (const auto& m : a.v) {
      const double s = std::abs(m(0, 0));
      smin = std::min(smin, s);
      smax = std::max(smax, s);
    }
  } else {
    for (const auto& m : a.v) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
      smin = std::min(smin, svd.singularValues().minCoeff());
      smax = std::max(smax, svd.singularValues().maxCoeff());
    }
  }
  if (!(smin > sing_tol * smax) || smax == 0.0)
    throw RankDeficiencyError("inverse: samples are singular on the grid");
  GridSamples out(a.grid, a.rows(), a.cols());
  for (int k = 0; k < a.size(); ++k) {
    if (a.is_scalar())
      out.v[k](0, 0) = 1.0 / a.v[k](0, 0);
    else
      out.v[k] = a.v[k].partialPivLu().inverse();
  }
  return out;
}

double conj_symmetry_defect(const GridSamples& x) {
  const int n = x.grid.n;
  double max_norm = 0.0, max_defect = 0.0;
  for (int k = 0; k < n; ++k) max_norm = std::max(max_norm, x.v[k].norm());
  if (max_norm == 0.0) return 0.0;
  for (int k = 0; k < n; ++k) {
    const int km = (n - k) % n;
    max_defect =
        std::max(max_defect, (x.v[km] - x.v[k].conjugate()).norm());
  }
  return max_defect / max_norm;
}

std::vector<Eigen::MatrixXcd> fourier_coefficients(const GridSamples& x) {
  const int n = x.grid.n;
  std::vector<Eigen::MatrixXcd> c(n, Eigen::MatrixXcd::Zero(x.rows(), x.cols()));
  Fft fft(n);
  std::vector<cd> freq(n), coef(n);
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      for (int k = 0; k < n; ++k) freq[k] = x.v[k](i, j);
      fft.inverse(freq.data(), coef.data());
      for (int t = 0; t < n; ++t) c[t](i, j) = coef[t];
    }
  }
  return c;
}

GridSamples samples_from_coefficients(
    const FrequencyGrid& g, const std::vector<Eigen::MatrixXcd>& c) {
  if (c.empty()) throw InvalidInputError("samples_from_coefficients: empty");
  if (static_cast<int>(c.size()) > g.n)
    throw InvalidInputError(
        "samples_from_coefficients: more coefficients than grid points");
  const int rows = static_cast<int>(c.front().rows());
  const int cols = static_cast<int>(c.front().cols());
  GridSamples out(g, rows, cols);
  Fft fft(g.n);
  std::vector<cd> in(g.n), freq(g.n);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      std::fill(in.begin(), in.end(), cd(0.0, 0.0));
      for (size_t t = 0; t < c.size(); ++t) in[t] = c[t](i, j);
      fft.forward(in.data(), freq.data());
      for (int k = 0; k < g.n; ++k) out.v[k](i, j) = freq[k];
    }
  }
  return out;
}

TransferFunction truncate_to_fir(const GridSamples& x, int taps,
                                 double* residual_out) {
  if (taps < 1) throw InvalidInputError("truncate_to_fir: taps must be >= 1");
  if (taps > x.grid.n)
    throw InvalidInputError("truncate_to_fir: taps exceed grid size");
  const auto c = fourier_coefficients(x);
  std::vector<Eigen::MatrixXd> fir(taps);
  for (int t = 0; t < taps; ++t) fir[t] = c[t].real();
  auto tf = TransferFunction::fir(std::move(fir));
  if (residual_out) {
    const auto back = evaluate_on_grid(tf, x.grid);
    const double denom = std::sqrt(h2_norm_sq(x));
    *residual_out =
        denom > 0.0 ? std::sqrt(h2_norm_sq(subtract(x, back))) / denom : 0.0;
  }
  return tf;
}

}  // namespace jscc
