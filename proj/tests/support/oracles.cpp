#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracles {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<cd> companion_roots(const std::vector<double>& c) {
  int d = static_cast<int>(c.size()) - 1;
  double cmax = 0.0;
  for (double v : c) cmax = std::max(cmax, std::abs(v));
  while (d > 0 && std::abs(c[d]) <= 1e-14 * cmax) --d;
  if (d <= 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<cd> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

std::vector<cd> poly_from_roots(const std::vector<cd>& roots) {
  std::vector<cd> p{cd(1.0, 0.0)};
  for (const cd& r : roots) {
    std::vector<cd> q(p.size() + 1, cd(0.0, 0.0));
    for (size_t i = 0; i < p.size(); ++i) {
      q[i] += -r * p[i];
      q[i + 1] += p[i];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

double quadrature(const std::function<double(double)>& f, int n) {
  double acc = 0.0;
  for (int k = 0; k < n; ++k) acc += f(kTwoPi * k / n);
  return acc / n;
}

std::vector<double> spectral_factor_by_roots(const std::vector<double>& a) {
  const int m = static_cast<int>(a.size()) - 1;
  if (m == 0) {
    if (a[0] <= 0.0) throw std::invalid_argument("density not positive");
    return {std::sqrt(a[0])};
  }
  // Laurent polynomial x^m * phi(x): coefficient of x^k is a[|k-m|].
  std::vector<double> laurent(2 * m + 1);
  for (int k = 0; k <= 2 * m; ++k) laurent[k] = a[std::abs(k - m)];
  const auto roots = companion_roots(laurent);
  std::vector<cd> outer_side;
  for (const cd& r : roots)
    if (std::abs(r) > 1.0) outer_side.push_back(r);
  if (static_cast<int>(outer_side.size()) != m)
    throw std::runtime_error("spectral_factor_by_roots: root pairing failed");

  // H(x) = g * prod (1 - x / x_i); fix g > 0 by matching phi at omega = 0.
  std::vector<cd> inv_scaled(outer_side.size());
  for (size_t i = 0; i < outer_side.size(); ++i)
    inv_scaled[i] = 1.0 / outer_side[i];
  // prod (1 - x/x_i) = poly with roots x_i, normalized to value 1 at x=0.
  auto p = poly_from_roots(outer_side);
  const cd p0 = p[0];
  for (auto& v : p) v /= p0;

  double phi0 = a[0];
  for (int j = 1; j <= m; ++j) phi0 += 2.0 * a[j];
  cd h1(0.0, 0.0);
  for (const auto& v : p) h1 += v;  // H(1)/g
  const double g = std::sqrt(phi0 / std::norm(h1));

  std::vector<double> h(p.size());
  for (size_t i = 0; i < p.size(); ++i) h[i] = g * p[i].real();
  return h;
}

std::vector<double> outer_part_by_roots(const std::vector<double>& c) {
  double cmax = 0.0;
  for (double v : c) cmax = std::max(cmax, std::abs(v));
  if (cmax == 0.0) throw std::invalid_argument("outer_part: zero input");
  size_t lead = 0;
  while (lead < c.size() && std::abs(c[lead]) <= 1e-14 * cmax) ++lead;
  std::vector<double> p(c.begin() + lead, c.end());
  while (p.size() > 1 && std::abs(p.back()) <= 1e-14 * cmax) p.pop_back();

  const auto roots = companion_roots(p);
  std::vector<cd> kept;
  double gain = p.back();
  for (const cd& r : roots) {
    if (std::abs(r) < 1.0 - 1e-9) {
      kept.push_back(1.0 / std::conj(r));  // reflect across the circle
      gain *= std::abs(r);
    } else {
      kept.push_back(r);
    }
  }
  auto q = poly_from_roots(kept);
  std::vector<double> out(q.size());
  for (size_t i = 0; i < q.size(); ++i) out[i] = gain * q[i].real();
  return out;
}

std::vector<double> autocorrelation(const std::vector<double>& c) {
  std::vector<double> a(c.size(), 0.0);
  for (size_t j = 0; j < c.size(); ++j)
    for (size_t t = 0; t + j < c.size(); ++t) a[j] += c[t] * c[t + j];
  return a;
}

double water_filling_distortion(const std::function<double(double)>& phi_s,
                                double capacity_nats, int n) {
  std::vector<double> phi(n);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int k = 0; k < n; ++k) {
    phi[k] = phi_s(kTwoPi * k / n);
    lo = std::min(lo, phi[k]);
    hi = std::max(hi, phi[k]);
  }
  const auto rate = [&](double theta) {
    double acc = 0.0;
    for (double p : phi)
      if (p > theta) acc += 0.5 * std::log(p / theta);
    return acc / n;
  };
  double a = lo * 1e-12, b = hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (rate(mid) > capacity_nats)
      a = mid;
    else
      b = mid;
  }
  const double theta = 0.5 * (a + b);
  double dist = 0.0;
  for (double p : phi) dist += std::min(theta, p);
  return dist / n;
}

double Gaussian::operator()() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 =
      (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

std::vector<double> random_fir_away_from_circle(std::mt19937_64& rng,
                                                int max_degree,
                                                double circle_margin) {
  std::uniform_int_distribution<int> deg_dist(1, max_degree);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int d = deg_dist(rng);
    std::vector<double> c(d + 1);
    for (auto& v : c) v = coef(rng);
    if (std::abs(c.front()) < 0.1 || std::abs(c.back()) < 0.1) continue;
    bool ok = true;
    for (const cd& r : companion_roots(c)) {
      if (std::abs(std::abs(r) - 1.0) < circle_margin) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  throw std::runtime_error("random_fir_away_from_circle: rejection stalled");
}

double psi_direct(const std::vector<double>& x, const std::vector<cd>& r,
                  const std::vector<cd>& n, double sigma2) {
  const int grid_n = static_cast<int>(r.size());
  double quad = 0.0, l1 = 0.0;
  for (int k = 0; k < grid_n; ++k) {
    const double w = kTwoPi * k / grid_n;
    cd xk(0.0, 0.0);
    for (size_t t = 0; t < x.size(); ++t)
      xk += x[t] * std::exp(cd(0.0, -w * static_cast<double>(t)));
    quad += std::norm(r[k] - xk);
    l1 += std::abs(xk * n[k]);
  }
  quad /= grid_n;
  l1 /= grid_n;
  return quad + l1 * l1 / sigma2;
}

SubgradientResult subgradient_minimize(const std::vector<cd>& r_samples,
                                       const std::vector<cd>& n_samples,
                                       double sigma2, int taps,
                                       long iterations) {
  const int grid_n = static_cast<int>(r_samples.size());
  std::vector<double> x(taps, 0.0), grad(taps, 0.0);
  std::vector<cd> xs(grid_n);
  SubgradientResult best;
  best.x = x;
  best.value = std::numeric_limits<double>::infinity();

  for (long it = 1; it <= iterations; ++it) {
    double quad = 0.0, l1 = 0.0;
    for (int k = 0; k < grid_n; ++k) {
      const double w = kTwoPi * k / grid_n;
      cd xk(0.0, 0.0);
      for (int t = 0; t < taps; ++t)
        xk += x[t] * std::exp(cd(0.0, -w * static_cast<double>(t)));
      xs[k] = xk;
      quad += std::norm(r_samples[k] - xk);
      l1 += std::abs(xk * n_samples[k]);
    }
    quad /= grid_n;
    l1 /= grid_n;
    const double value = quad + l1 * l1 / sigma2;
    if (value < best.value) {
      best.value = value;
      best.x = x;
    }

    for (int t = 0; t < taps; ++t) {
      double g = 0.0;
      for (int k = 0; k < grid_n; ++k) {
        const double w = kTwoPi * k / grid_n;
        const cd e = std::exp(cd(0.0, -w * static_cast<double>(t)));
        const cd y = xs[k] * n_samples[k];
        const double ay = std::abs(y);
        g += -2.0 * (std::conj(r_samples[k] - xs[k]) * e).real();
        if (ay > 0.0)
          g += (2.0 * l1 / sigma2) *
               (std::conj(y) / ay * n_samples[k] * e).real();
      }
      grad[t] = g / grid_n;
    }
    const double step = 1.0 / static_cast<double>(it + 1);
    for (int t = 0; t < taps; ++t) x[t] -= step * grad[t];
  }
  return best;
}

}  // namespace oracles
