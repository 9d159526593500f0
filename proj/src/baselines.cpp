#include "jscc/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <utility>

#include "jscc/synthesis.hpp"

namespace jscc {

namespace {

std::vector<double> scalar_density_values(const SpectralDensity& src) {
  if (src.dim() != 1)
    throw InvalidInputError("opta: source spectrum must be scalar");
  const int n = src.samples.size();
  std::vector<double> phi(n);
  // Hermitian 1x1 samples are real; roundoff can leave a tiny negative part.
  for (int k = 0; k < n; ++k)
    phi[k] = std::max(0.0, src.samples.scalar(k).real());
  return phi;
}

struct WaterFillPoint {
  double theta = 0.0;
  double d_min = 0.0;
};

// Reverse water filling at a fixed capacity. R(theta) is continuous and
// strictly decreasing until it hits zero at theta = max phi, so bisection
// over [min phi * 1e-12, max phi] converges; if the capacity exceeds
// R(lower bracket) the iteration collapses onto the lower end, which is the
// right limit (distortion ~ theta -> 0).
WaterFillPoint reverse_water_fill(const std::vector<double>& phi,
                                  double capacity_nats) {
  const double lo_phi = *std::min_element(phi.begin(), phi.end());
  const double hi_phi = *std::max_element(phi.begin(), phi.end());
  if (!(hi_phi > 0.0))
    throw InvalidInputError("opta: source spectrum is identically zero");
  const double w = 1.0 / static_cast<double>(phi.size());
  const auto rate = [&](double theta) {
    double acc = 0.0;
    for (double p : phi)
      if (p > theta) acc += 0.5 * std::log(p / theta);
    return acc * w;
  };
  double a = lo_phi * 1e-12, b = hi_phi;
  double theta = b;
  for (int it = 0; it < 200; ++it) {
    theta = 0.5 * (a + b);
    const double r = rate(theta);
    if (std::abs(r - capacity_nats) <= 1e-10) break;
    if (r > capacity_nats)
      a = theta;
    else
      b = theta;
  }
  WaterFillPoint out;
  out.theta = theta;
  double d = 0.0;
  for (double p : phi) d += std::min(theta, p);
  out.d_min = d * w;
  return out;
}

double channel_capacity_nats(double snr, int n_channels) {
  if (!(snr > 0.0)) throw InvalidInputError("opta: snr must be positive");
  if (n_channels < 1)
    throw InvalidInputError("opta: n_channels must be at least 1");
  return n_channels * 0.5 * std::log1p(snr / n_channels);
}

}  // namespace

double wiener_cost(const ProblemSpec& spec) {
  if (spec.is_vector())
    throw InvalidInputError("wiener_cost: scalar specs only");
  const ReducedProblem rp = reduce(spec);
  const GridSamples tail = subtract(rp.r, causal_projection(rp.r));
  return h2_norm_sq(tail) + rp.eta;
}

double opta_distortion(const SpectralDensity& source_spectrum, double snr,
                       int n_channels) {
  const double capacity = channel_capacity_nats(snr, n_channels);
  return reverse_water_fill(scalar_density_values(source_spectrum), capacity)
      .d_min;
}

OptaCurve opta_curve(const SpectralDensity& source_spectrum,
                     std::vector<double> snr_list, int n_channels) {
  const std::vector<double> phi = scalar_density_values(source_spectrum);
  std::sort(snr_list.begin(), snr_list.end());
  snr_list.erase(std::unique(snr_list.begin(), snr_list.end()),
                 snr_list.end());
  OptaCurve curve;
  curve.points.reserve(snr_list.size());
  for (double snr : snr_list) {
    OptaPoint pt;
    pt.snr = snr;
    pt.capacity = channel_capacity_nats(snr, n_channels);
    const WaterFillPoint wf = reverse_water_fill(phi, pt.capacity);
    pt.water_level = wf.theta;
    pt.d_min = wf.d_min;
    curve.points.push_back(pt);
  }
  return curve;
}

SweepTable sweep(const ProblemSpec& spec_template,
                 std::vector<double> snr_list, std::vector<int> delay_list,
                 const SolverOptions& solver, int jobs) {
  if (spec_template.is_vector())
    throw InvalidInputError("sweep: template must be scalar");
  if (snr_list.empty()) throw InvalidInputError("sweep: empty snr list");
  if (delay_list.empty()) throw InvalidInputError("sweep: empty delay list");
  for (double s : snr_list)
    if (!(s > 0.0))
      throw InvalidInputError("sweep: snr entries must be positive");
  for (int d : delay_list)
    if (d < 0) throw InvalidInputError("sweep: delays must be nonnegative");
  std::sort(snr_list.begin(), snr_list.end());
  std::sort(delay_list.begin(), delay_list.end());

  // The OPTA floor depends only on the source spectrum and snr, so it is
  // computed once per snr, not per cell.
  const GridSamples s_samples =
      evaluate_on_grid(spec_template.s, spec_template.grid);
  GridSamples phi_s(spec_template.grid, 1, 1);
  for (int k = 0; k < phi_s.size(); ++k)
    phi_s.at(k)(0, 0) = std::norm(s_samples.scalar(k));
  const SpectralDensity src = SpectralDensity::from_samples(phi_s);
  std::vector<double> opta(snr_list.size());
  for (size_t i = 0; i < snr_list.size(); ++i)
    opta[i] = opta_distortion(src, snr_list[i]);

  const int n_delays = static_cast<int>(delay_list.size());
  const int n_cells = static_cast<int>(snr_list.size()) * n_delays;
  SweepTable table;
  table.rows.resize(n_cells);

  const auto run_cell = [&](int idx) {
    const int si = idx / n_delays, di = idx % n_delays;
    SweepRow row;
    row.snr = snr_list[si];
    row.delay = delay_list[di];
    row.distortion_opta = opta[si];
    row.distortion_linear = std::numeric_limits<double>::quiet_NaN();
    try {
      ProblemSpec spec = spec_template;
      spec.snr = row.snr;
      spec.p = TransferFunction::delay(row.delay);
      const ReducedProblem rp = reduce(spec);
      const SolveReport rep = minimize_psi(rp, spec.fir_order, solver);
      row.iterations = rep.iterations;
      row.converged = rep.converged;
      // K = W^{-1} X H^{-1}, then phi(K) by direct quadrature.
      const GridSamples x_s = evaluate_on_grid(rep.x_opt, spec.grid);
      const GridSamples w_s = evaluate_on_grid(spec.w, spec.grid);
      const GridSamples k = multiply(x_s, inverse(multiply(w_s, rp.h)));
      row.distortion_linear = phi_cost(k, spec);
      try {
        (void)synthesize_scalar(k, spec);
        row.synthesized = true;
      } catch (const std::exception& e) {
        row.note = std::string("synthesis: ") + e.what();
      }
    } catch (const std::exception& e) {
      row.note = std::string("solve: ") + e.what();
    }
    table.rows[idx] = std::move(row);
  };

  jobs = std::max(1, std::min(jobs, n_cells));
  if (jobs == 1) {
    for (int idx = 0; idx < n_cells; ++idx) run_cell(idx);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (int idx = t; idx < n_cells; idx += jobs) run_cell(idx);
      });
    for (auto& th : pool) th.join();
  }
  return table;
}

}  // namespace jscc
