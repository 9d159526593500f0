#pragma once

#include <complex>
#include <vector>

namespace jscc {

/// Roots of p(x) = c[0] + c[1] x + ... + c[d] x^d via the companion matrix.
/// Leading coefficients below `trim_tol` * max|c| are trimmed first.
/// Degree-0 polynomials have no roots.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& c,
                                             double trim_tol = 1e-14);

/// Horner evaluation of p(x) with real coefficients at complex x.
std::complex<double> poly_eval(const std::vector<double>& c,
                               std::complex<double> x);

}  // namespace jscc
