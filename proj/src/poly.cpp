#include "jscc/poly.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace jscc {

std::vector<std::complex<double>> poly_roots(const std::vector<double>& c,
                                             double trim_tol) {
  if (c.empty()) throw std::invalid_argument("poly_roots: empty coefficients");
  double cmax = 0.0;
  for (double v : c) cmax = std::max(cmax, std::abs(v));
  if (cmax == 0.0) throw std::invalid_argument("poly_roots: zero polynomial");

  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && std::abs(c[d]) <= trim_tol * cmax) --d;
  if (d == 0) return {};

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;

  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

std::complex<double> poly_eval(const std::vector<double>& c,
                               std::complex<double> x) {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace jscc
