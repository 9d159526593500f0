#include "jscc/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace jscc {

namespace {

using MatSeq = std::vector<Eigen::MatrixXd>;

// drop trailing all-zero coefficients so chains stay as short as they are
MatSeq trimmed(MatSeq seq) {
  int last = -1;
  for (int t = 0; t < static_cast<int>(seq.size()); ++t)
    if (seq[t].squaredNorm() > 0.0) last = t;
  seq.resize(last + 1);
  return seq;
}

MatSeq conv(const MatSeq& a, const MatSeq& b) {
  if (a.empty() || b.empty()) return {};
  MatSeq out(a.size() + b.size() - 1,
             Eigen::MatrixXd::Zero(a.front().rows(), b.front().cols()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

MatSeq subtract_seq(MatSeq a, const MatSeq& b) {
  if (b.empty()) return a;
  if (a.empty())
    a.assign(b.size(),
             Eigen::MatrixXd::Zero(b.front().rows(), b.front().cols()));
  if (a.size() < b.size())
    a.resize(b.size(),
             Eigen::MatrixXd::Zero(a.front().rows(), a.front().cols()));
  for (size_t t = 0; t < b.size(); ++t) a[t] -= b[t];
  return a;
}

// One filter chain flattened to scalar tap arrays per (output, input) pair;
// the per-sample work is then plain fused multiply-adds over ring buffers.
struct Chain {
  int rows = 0, cols = 0, len = 0;
  bool zero = true;
  std::vector<std::vector<double>> taps;  // [i * cols + j][t]

  Chain(const MatSeq& seq, double sign) {
    const MatSeq t = trimmed(seq);
    if (t.empty()) return;
    rows = static_cast<int>(t.front().rows());
    cols = static_cast<int>(t.front().cols());
    len = static_cast<int>(t.size());
    zero = false;
    taps.assign(static_cast<size_t>(rows) * cols, std::vector<double>(len));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        for (int k = 0; k < len; ++k)
          taps[static_cast<size_t>(i) * cols + j][k] = sign * t[k](i, j);
  }

  double out(int i, const std::vector<std::vector<double>>& rings, long k,
             long mask) const {
    double acc = 0.0;
    for (int j = 0; j < cols; ++j) {
      const std::vector<double>& tp = taps[static_cast<size_t>(i) * cols + j];
      const std::vector<double>& rb = rings[j];
      for (int t = 0; t < len; ++t) acc += tp[t] * rb[(k - t) & mask];
    }
    return acc;
  }
};

uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Box-Muller over mt19937_64; u1 lands in (0, 1] so the log is finite.
class GaussianStream {
 public:
  explicit GaussianStream(uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    const double u1 = ((rng_() >> 11) + 1) * (1.0 / 9007199254740992.0);
    const double u2 = (rng_() >> 11) * (1.0 / 9007199254740992.0);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_ = false;
};

struct BatchStats {
  double mean = 0.0;
  double stderr_ = 0.0;
};

BatchStats summarize(const std::vector<double>& batch_sums, long batch_len) {
  const int b = static_cast<int>(batch_sums.size());
  std::vector<double> means(b);
  for (int i = 0; i < b; ++i) means[i] = batch_sums[i] / batch_len;
  BatchStats st;
  for (double m : means) st.mean += m;
  st.mean /= b;
  double var = 0.0;
  for (double m : means) var += (m - st.mean) * (m - st.mean);
  var /= (b - 1);
  st.stderr_ = std::sqrt(var / b);
  return st;
}

}  // namespace

std::vector<Eigen::MatrixXd> impulse_response(const TransferFunction& tf,
                                              int length,
                                              double* tail_ratio_out) {
  if (length < 1)
    throw InvalidInputError("impulse_response: length must be positive");
  MatSeq out(length, Eigen::MatrixXd::Zero(tf.rows(), tf.cols()));
  double total = 0.0, tail = 0.0;

  switch (tf.kind()) {
    case TransferFunction::Kind::Fir: {
      const auto& c = tf.fir_coeffs();
      for (int t = 0; t < static_cast<int>(c.size()); ++t) {
        const double e = c[t].squaredNorm();
        total += e;
        if (t < length)
          out[t] = c[t];
        else
          tail += e;
      }
      break;
    }
    case TransferFunction::Kind::PureDelay: {
      const int d = tf.delay_amount();
      total = tf.rows();
      if (d < length)
        out[d] = Eigen::MatrixXd::Identity(tf.rows(), tf.cols());
      else
        tail = total;
      break;
    }
    case TransferFunction::Kind::ScalarRational: {
      const std::vector<double>& num = tf.num();
      const std::vector<double>& den = tf.den();
      // run well past `length` so the tail estimate sees the decay out
      const int extended = std::max(4 * length, length + 1024);
      std::vector<double> h(extended, 0.0);
      for (int k = 0; k < extended; ++k) {
        double v = k < static_cast<int>(num.size()) ? num[k] : 0.0;
        for (int j = 1; j < static_cast<int>(den.size()) && j <= k; ++j)
          v -= den[j] * h[k - j];
        h[k] = v / den[0];
        total += h[k] * h[k];
        if (k >= length) tail += h[k] * h[k];
      }
      for (int t = 0; t < length; ++t) out[t](0, 0) = h[t];
      break;
    }
  }
  if (tail_ratio_out) *tail_ratio_out = total > 0.0 ? tail / total : 0.0;
  return out;
}

SimReport run_simulation(const DesignResult& design, const ProblemSpec& spec,
                         const SimConfig& cfg) {
  validate(spec);
  if (cfg.truncation < 0)
    throw InvalidInputError("simulation: truncation must be >= 1");
  const int trunc = cfg.truncation > 0 ? cfg.truncation : 4 * spec.fir_order;

  SimReport rep;
  const ValidationReport val = validate_design(design, spec);
  rep.predicted_mse = val.j_value;
  rep.predicted_power = val.power;

  double worst_tail = 0.0;
  const auto ir = [&](const TransferFunction& tf) {
    double tail = 0.0;
    MatSeq seq = impulse_response(tf, trunc, &tail);
    worst_tail = std::max(worst_tail, tail);
    return trimmed(std::move(seq));
  };
  const MatSeq s_ir = ir(spec.s), m_ir = ir(spec.m), n_ir = ir(spec.n);
  const MatSeq w_ir = ir(spec.w), p_ir = ir(spec.p);
  const MatSeq c_ir = ir(design.c), d_ir = ir(design.d);
  rep.max_tail_ratio = worst_tail;
  rep.truncation_warning = worst_tail > 1e-6;

  const MatSeq cs = conv(c_ir, s_ir);
  const MatSeq cm = conv(c_ir, m_ir);
  const Chain ch_err_s(conv(w_ir, subtract_seq(conv(p_ir, s_ir),
                                               conv(d_ir, cs))), 1.0);
  const Chain ch_err_m(conv(w_ir, conv(d_ir, cm)), -1.0);
  const Chain ch_err_n(conv(w_ir, conv(d_ir, n_ir)), -1.0);
  const Chain ch_pow_s(cs, 1.0);
  const Chain ch_pow_m(cm, 1.0);

  const int n_s = spec.n_s, n_e = spec.n_e, n_t = spec.n_t;
  const int n_m = static_cast<int>(spec.m.cols());
  const int longest =
      std::max({ch_err_s.len, ch_err_m.len, ch_err_n.len, ch_pow_s.len,
                ch_pow_m.len, 1});
  const long burn = cfg.burn_in > 0 ? cfg.burn_in : 10L * longest;

  constexpr int kBatches = 32;
  if (cfg.n_samples <= burn)
    throw InvalidInputError("simulation: n_samples must exceed burn_in");
  const long batch_len = (cfg.n_samples - burn) / kBatches;
  if (batch_len < 1)
    throw InvalidInputError(
        "simulation: n_samples leaves less than one sample per batch");
  const long total_steps = burn + batch_len * kBatches;

  long ring_n = 1;
  while (ring_n < 2L * longest) ring_n <<= 1;
  const long mask = ring_n - 1;
  const auto make_rings = [&](int dim) {
    return std::vector<std::vector<double>>(
        dim, std::vector<double>(ring_n, 0.0));
  };
  auto rings_s = make_rings(n_s);
  auto rings_m = make_rings(n_m);
  auto rings_n = make_rings(n_t);

  uint64_t seed_state = cfg.seed;
  GaussianStream src(splitmix64(seed_state));
  GaussianStream obs(splitmix64(seed_state));
  GaussianStream chan(splitmix64(seed_state));
  const bool use_m = !(ch_err_m.zero && ch_pow_m.zero);
  const bool use_n = !ch_err_n.zero;

  std::vector<double> mse_batches(kBatches, 0.0), pow_batches(kBatches, 0.0);
  for (long k = 0; k < total_steps; ++k) {
    const long pos = k & mask;
    for (int c = 0; c < n_s; ++c) rings_s[c][pos] = src.next();
    if (use_m)
      for (int c = 0; c < n_m; ++c) rings_m[c][pos] = obs.next();
    if (use_n)
      for (int c = 0; c < n_t; ++c) rings_n[c][pos] = chan.next();

    double err_sq = 0.0, pow_sq = 0.0, peak = 0.0;
    for (int i = 0; i < n_e; ++i) {
      double e = ch_err_s.zero ? 0.0 : ch_err_s.out(i, rings_s, k, mask);
      if (!ch_err_m.zero) e += ch_err_m.out(i, rings_m, k, mask);
      if (!ch_err_n.zero) e += ch_err_n.out(i, rings_n, k, mask);
      err_sq += e * e;
      peak = std::max(peak, std::abs(e));
    }
    for (int j = 0; j < n_t; ++j) {
      double t = ch_pow_s.zero ? 0.0 : ch_pow_s.out(j, rings_s, k, mask);
      if (!ch_pow_m.zero) t += ch_pow_m.out(j, rings_m, k, mask);
      pow_sq += t * t;
      peak = std::max(peak, std::abs(t));
    }
    if (peak > 1e12)
      throw DivergenceError("simulation: signal magnitude exceeded 1e12");

    if (k >= burn) {
      const int b = static_cast<int>((k - burn) / batch_len);
      mse_batches[b] += err_sq;
      pow_batches[b] += pow_sq;
    }
  }

  const BatchStats mse = summarize(mse_batches, batch_len);
  const BatchStats pwr = summarize(pow_batches, batch_len);
  rep.empirical_mse = mse.mean;
  rep.mse_stderr = mse.stderr_;
  rep.empirical_power = pwr.mean;
  rep.power_stderr = pwr.stderr_;
  return rep;
}

}  // namespace jscc
