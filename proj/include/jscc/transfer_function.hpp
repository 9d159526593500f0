#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "jscc/errors.hpp"

namespace jscc {

using cd = std::complex<double>;

/// Uniform frequency grid omega_k = 2*pi*k/n for k = 0..n-1, n even.
/// Quadrature weight is 1/n, so weighted sums over the grid approximate
/// (1/2pi) * integrals over [0, 2pi).
struct FrequencyGrid {
  explicit FrequencyGrid(int n_points);

  int n = 2;
  double omega(int k) const;
  double weight() const { return 1.0 / n; }
  bool operator==(const FrequencyGrid& other) const { return n == other.n; }
};

/// Matrix-valued samples on a FrequencyGrid; scalars are stored as 1x1.
struct GridSamples {
  GridSamples() = default;
  GridSamples(FrequencyGrid g, int rows, int cols);

  FrequencyGrid grid{2};
  std::vector<Eigen::MatrixXcd> v;

  int size() const { return grid.n; }
  int rows() const { return v.empty() ? 0 : static_cast<int>(v.front().rows()); }
  int cols() const { return v.empty() ? 0 : static_cast<int>(v.front().cols()); }
  bool is_scalar() const { return rows() == 1 && cols() == 1; }

  Eigen::MatrixXcd& at(int k) { return v[k]; }
  const Eigen::MatrixXcd& at(int k) const { return v[k]; }
  cd scalar(int k) const { return v[k](0, 0); }

  static GridSamples constant(FrequencyGrid g, const Eigen::MatrixXcd& m);
  static GridSamples identity(FrequencyGrid g, int dim);
};

/// Causal LTI filter in powers of z^{-1}: an FIR with real matrix
/// coefficients, a scalar rational num/den pair, or a pure delay z^{-d} I.
class TransferFunction {
 public:
  enum class Kind { Fir, ScalarRational, PureDelay };

  /// Scalar FIR: coeffs[t] multiplies z^{-t}.
  static TransferFunction fir(std::vector<double> coeffs);
  static TransferFunction fir(std::initializer_list<double> coeffs);
  /// Matrix FIR: coeffs[t] is the (rows x cols) coefficient of z^{-t}.
  static TransferFunction fir(std::vector<Eigen::MatrixXd> coeffs);
  /// Scalar rational num(z^{-1})/den(z^{-1}); poles must lie strictly inside
  /// the unit circle of the z plane (stable and causal).
  static TransferFunction rational(std::vector<double> num,
                                   std::vector<double> den);
  /// z^{-d} * I_dim.
  static TransferFunction delay(int d, int dim = 1);
  static TransferFunction zero(int rows = 1, int cols = 1);
  static TransferFunction identity(int dim = 1);

  Kind kind() const { return kind_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_scalar() const { return rows_ == 1 && cols_ == 1; }

  int fir_length() const;
  const std::vector<Eigen::MatrixXd>& fir_coeffs() const;
  const std::vector<double>& num() const;
  const std::vector<double>& den() const;
  int delay_amount() const;

  /// True when every coefficient is exactly zero (FIR/rational numerator).
  bool is_zero() const;

  /// Longest lag that carries any coefficient; delays report d, rationals
  /// report the denominator-driven effective length (see impulse_response).
  int max_lag_hint() const;

 private:
  TransferFunction() = default;

  Kind kind_ = Kind::Fir;
  int rows_ = 1, cols_ = 1;
  std::vector<Eigen::MatrixXd> fir_;
  std::vector<double> num_, den_;
  int delay_ = 0;
};

/// Exact samples X(e^{i omega_k}). FIRs must satisfy length <= grid.n;
/// rational evaluation raises SingularEvaluationError when |den| < 1e-12.
GridSamples evaluate_on_grid(const TransferFunction& x, const FrequencyGrid& g);

/// Quadrature of the squared H2 norm: sum_k w ||X_k||_F^2.
double h2_norm_sq(const GridSamples& x);

/// Quadrature of the L1 norm: sum_k w * (sum of singular values of X_k);
/// |X_k| for scalars.
double l1_norm(const GridSamples& x);

/// Re <A, B> = sum_k w Re tr(A_k^* B_k).
double inner_product_re(const GridSamples& a, const GridSamples& b);

/// Projection onto causal grid series. DFT coefficients with index in
/// (n/2, n) are the anticausal half (they stand for positive powers of z)
/// and are zeroed; index n/2 is kept as causal. If tail_ratio_out is given
/// it receives the input's energy fraction at indices [3n/4, n), a
/// wrap-around aliasing diagnostic (worth a warning above 1e-6).
GridSamples causal_projection(const GridSamples& x,
                              double* tail_ratio_out = nullptr);

/// Pointwise conjugate transpose X(e^{i omega})^*.
GridSamples adjoint(const GridSamples& x);

GridSamples multiply(const GridSamples& a, const GridSamples& b);
GridSamples add(const GridSamples& a, const GridSamples& b);
GridSamples subtract(const GridSamples& a, const GridSamples& b);
GridSamples scale(const GridSamples& a, cd s);

/// Per-frequency inverse of square samples. Raises RankDeficiencyError when
/// the smallest singular value anywhere on the grid drops below
/// sing_tol * (largest singular value anywhere).
GridSamples inverse(const GridSamples& a, double sing_tol = 1e-12);

/// Max relative defect of X(-omega) == conj(X(omega)); zero for filters with
/// real coefficients.
double conj_symmetry_defect(const GridSamples& x);

/// Full-length DFT coefficient sequence c_0..c_{n-1} (entrywise inverse DFT).
std::vector<Eigen::MatrixXcd> fourier_coefficients(const GridSamples& x);

/// Rebuild samples from a (possibly shorter) causal coefficient sequence.
GridSamples samples_from_coefficients(const FrequencyGrid& g,
                                      const std::vector<Eigen::MatrixXcd>& c);

/// Keep the first `taps` causal coefficients (real parts) as an FIR.
/// residual_out (optional) receives ||X - X_fir||_2 / ||X||_2 on the grid.
TransferFunction truncate_to_fir(const GridSamples& x, int taps,
                                 double* residual_out = nullptr);

}  // namespace jscc
