#include "jscc/config_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "jscc/errors.hpp"

namespace jscc {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path, what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) fail(path + "." + item.key(), "unknown key");
  }
}

double get_num(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

long long get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

std::vector<double> get_num_list(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array");
  std::vector<double> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(get_num(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

TransferFunction parse_matrix_fir(const json& f, const std::string& path) {
  std::vector<Eigen::MatrixXd> taps;
  taps.reserve(f.size());
  for (size_t t = 0; t < f.size(); ++t) {
    const std::string tp = path + "[" + std::to_string(t) + "]";
    const json& m = f[t];
    if (!m.is_array() || m.empty()) fail(tp, "expected a matrix (array of rows)");
    const size_t cols = m[0].is_array() ? m[0].size() : 0;
    if (cols == 0) fail(tp, "expected a matrix (array of rows)");
    Eigen::MatrixXd tap(static_cast<int>(m.size()), static_cast<int>(cols));
    for (size_t r = 0; r < m.size(); ++r) {
      const std::string rp = tp + "[" + std::to_string(r) + "]";
      if (!m[r].is_array() || m[r].size() != cols)
        fail(rp, "rows must all have the same length");
      for (size_t c = 0; c < cols; ++c)
        tap(static_cast<int>(r), static_cast<int>(c)) =
            get_num(m[r][c], rp + "[" + std::to_string(c) + "]");
    }
    taps.push_back(std::move(tap));
  }
  for (const auto& tap : taps)
    if (tap.rows() != taps[0].rows() || tap.cols() != taps[0].cols())
      fail(path, "taps must all have the same dimensions");
  return TransferFunction::fir(taps);
}

TransferFunction parse_tf(const json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1)
    fail(path, "expected exactly one of {fir, rational, delay}");
  if (j.contains("fir")) {
    const json& f = j["fir"];
    const std::string fp = path + ".fir";
    if (!f.is_array() || f.empty()) fail(fp, "expected a nonempty array");
    if (f[0].is_number()) {
      // scalar form: flat list of coefficients
      return TransferFunction::fir(get_num_list(f, fp));
    }
    return parse_matrix_fir(f, fp);
  }
  if (j.contains("rational")) {
    const json& r = j["rational"];
    const std::string rp = path + ".rational";
    if (!r.is_object()) fail(rp, "expected an object {num, den}");
    check_keys(r, rp, {"num", "den"});
    if (!r.contains("num") || !r.contains("den"))
      fail(rp, "both num and den are required");
    const auto num = get_num_list(r["num"], rp + ".num");
    const auto den = get_num_list(r["den"], rp + ".den");
    try {
      return TransferFunction::rational(num, den);
    } catch (const std::exception& e) {
      fail(rp, e.what());
    }
  }
  if (j.contains("delay")) {
    const long long d = get_int(j["delay"], path + ".delay");
    if (d < 0) fail(path + ".delay", "delay must be nonnegative");
    return TransferFunction::delay(static_cast<int>(d));
  }
  fail(path, "expected exactly one of {fir, rational, delay}");
}

std::vector<double> log_spaced(double start_exp, double stop_exp, int points) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double e =
        points == 1 ? start_exp
                    : start_exp + (stop_exp - start_exp) * k / (points - 1);
    out.push_back(std::pow(10.0, e));
  }
  return out;
}

void parse_problem(const json& p, RunConfig& cfg) {
  check_keys(p, "problem", {"s", "m", "n", "w", "p", "snr", "dims", "grid"});
  if (p.contains("s")) cfg.spec.s = parse_tf(p["s"], "problem.s");
  if (p.contains("m")) cfg.spec.m = parse_tf(p["m"], "problem.m");
  if (p.contains("n")) cfg.spec.n = parse_tf(p["n"], "problem.n");
  if (p.contains("w")) cfg.spec.w = parse_tf(p["w"], "problem.w");
  if (p.contains("p")) cfg.spec.p = parse_tf(p["p"], "problem.p");
  if (p.contains("snr")) {
    cfg.spec.snr = get_num(p["snr"], "problem.snr");
    if (!(cfg.spec.snr > 0)) fail("problem.snr", "snr must be positive");
  }
  if (p.contains("dims")) {
    const json& d = p["dims"];
    if (!d.is_object()) fail("problem.dims", "expected an object");
    check_keys(d, "problem.dims", {"n_s", "n_t", "n_e"});
    const auto dim = [&](const char* key, int fallback) {
      if (!d.contains(key)) return fallback;
      const std::string dp = std::string("problem.dims.") + key;
      const long long v = get_int(d[key], dp);
      if (v < 1) fail(dp, "dimensions must be at least 1");
      return static_cast<int>(v);
    };
    cfg.spec.n_s = dim("n_s", cfg.spec.n_s);
    cfg.spec.n_t = dim("n_t", cfg.spec.n_t);
    cfg.spec.n_e = dim("n_e", cfg.spec.n_e);
  }
  if (p.contains("grid")) {
    const json& g = p["grid"];
    if (!g.is_object()) fail("problem.grid", "expected an object");
    check_keys(g, "problem.grid", {"n_points"});
    if (g.contains("n_points")) {
      const long long n = get_int(g["n_points"], "problem.grid.n_points");
      try {
        cfg.spec.grid = FrequencyGrid(static_cast<int>(n));
      } catch (const std::exception& e) {
        fail("problem.grid.n_points", e.what());
      }
    }
  }
}

void parse_solver(const json& s, RunConfig& cfg) {
  check_keys(s, "solver", {"fir_order", "tol", "max_iter"});
  if (s.contains("fir_order")) {
    const long long v = get_int(s["fir_order"], "solver.fir_order");
    if (v < 1) fail("solver.fir_order", "fir_order must be at least 1");
    cfg.spec.fir_order = static_cast<int>(v);
  }
  if (s.contains("tol")) {
    cfg.solver.tol = get_num(s["tol"], "solver.tol");
    if (!(cfg.solver.tol > 0)) fail("solver.tol", "tol must be positive");
  }
  if (s.contains("max_iter")) {
    const long long v = get_int(s["max_iter"], "solver.max_iter");
    if (v < 1) fail("solver.max_iter", "max_iter must be at least 1");
    cfg.solver.max_iter = static_cast<int>(v);
  }
}

void parse_sim(const json& s, RunConfig& cfg) {
  check_keys(s, "sim", {"seed", "n_samples", "burn_in", "truncation"});
  if (s.contains("seed")) {
    if (!s["seed"].is_number_integer() || get_int(s["seed"], "sim.seed") < 0)
      fail("sim.seed", "expected a nonnegative integer");
    cfg.sim.seed = s["seed"].get<std::uint64_t>();
  }
  if (s.contains("n_samples")) {
    const long long v = get_int(s["n_samples"], "sim.n_samples");
    if (v < 1) fail("sim.n_samples", "n_samples must be at least 1");
    cfg.sim.n_samples = v;
  }
  if (s.contains("burn_in")) {
    const long long v = get_int(s["burn_in"], "sim.burn_in");
    if (v < 0) fail("sim.burn_in", "burn_in must be nonnegative");
    cfg.sim.burn_in = v;
  }
  if (s.contains("truncation")) {
    const long long v = get_int(s["truncation"], "sim.truncation");
    if (v < 0) fail("sim.truncation", "truncation must be nonnegative");
    cfg.sim.truncation = static_cast<int>(v);
  }
}

void parse_sweep(const json& s, RunConfig& cfg) {
  check_keys(s, "sweep", {"snr_list", "delay_list"});
  if (s.contains("snr_list")) {
    const json& l = s["snr_list"];
    if (!l.is_object())
      fail("sweep.snr_list", "expected {start_exp, stop_exp, points}");
    check_keys(l, "sweep.snr_list", {"start_exp", "stop_exp", "points"});
    if (!l.contains("start_exp") || !l.contains("stop_exp") ||
        !l.contains("points"))
      fail("sweep.snr_list", "start_exp, stop_exp and points are all required");
    const double a = get_num(l["start_exp"], "sweep.snr_list.start_exp");
    const double b = get_num(l["stop_exp"], "sweep.snr_list.stop_exp");
    const long long n = get_int(l["points"], "sweep.snr_list.points");
    if (n < 1) fail("sweep.snr_list.points", "points must be at least 1");
    if (!(std::isfinite(a) && std::isfinite(b)))
      fail("sweep.snr_list", "exponents must be finite");
    cfg.sweep_snrs = log_spaced(a, b, static_cast<int>(n));
  }
  if (s.contains("delay_list")) {
    const json& l = s["delay_list"];
    if (!l.is_array() || l.empty())
      fail("sweep.delay_list", "expected a nonempty array");
    cfg.sweep_delays.clear();
    for (size_t i = 0; i < l.size(); ++i) {
      const std::string ip = "sweep.delay_list[" + std::to_string(i) + "]";
      const long long d = get_int(l[i], ip);
      if (d < 0) fail(ip, "delay must be nonnegative");
      cfg.sweep_delays.push_back(static_cast<int>(d));
    }
  }
}

void parse_opta(const json& o, RunConfig& cfg) {
  check_keys(o, "opta", {"n_channels"});
  if (o.contains("n_channels")) {
    const long long v = get_int(o["n_channels"], "opta.n_channels");
    if (v < 1) fail("opta.n_channels", "n_channels must be at least 1");
    cfg.opta_channels = static_cast<int>(v);
  }
}

// ---- deterministic writers ------------------------------------------------

std::string json_num(double v) {
  if (!std::isfinite(v)) return "null";
  return format_double(v);
}

std::string json_str(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

// Serializes an FIR transfer function as {"fir": ...}: a flat coefficient
// list when scalar, one matrix per tap otherwise.
std::string tf_json(const TransferFunction& tf) {
  if (tf.kind() != TransferFunction::Kind::Fir)
    throw InvalidInputError("only FIR transfer functions are serializable");
  const auto& taps = tf.fir_coeffs();
  std::string out = "{\"fir\": [";
  if (tf.rows() == 1 && tf.cols() == 1) {
    for (size_t t = 0; t < taps.size(); ++t) {
      if (t) out += ", ";
      out += json_num(taps[t](0, 0));
    }
  } else {
    for (size_t t = 0; t < taps.size(); ++t) {
      if (t) out += ", ";
      out += "[";
      for (int r = 0; r < taps[t].rows(); ++r) {
        if (r) out += ", ";
        out += "[";
        for (int c = 0; c < taps[t].cols(); ++c) {
          if (c) out += ", ";
          out += json_num(taps[t](r, c));
        }
        out += "]";
      }
      out += "]";
    }
  }
  return out + "]}";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF on any host
  if (!out) throw ConfigError(path, "cannot open for writing");
  out << text;
  if (!out) throw ConfigError(path, "write failed");
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open config file");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path, e.what());
  }
  if (!root.is_object()) fail("$", "top level must be an object");
  check_keys(root, "$", {"problem", "solver", "sim", "sweep", "opta"});

  RunConfig cfg;
  cfg.sweep_snrs = log_spaced(-3.0, 4.0, 25);
  if (root.contains("problem")) {
    if (!root["problem"].is_object()) fail("problem", "expected an object");
    parse_problem(root["problem"], cfg);
  }
  if (root.contains("solver")) {
    if (!root["solver"].is_object()) fail("solver", "expected an object");
    parse_solver(root["solver"], cfg);
  }
  if (root.contains("sim")) {
    if (!root["sim"].is_object()) fail("sim", "expected an object");
    parse_sim(root["sim"], cfg);
  }
  if (root.contains("sweep")) {
    if (!root["sweep"].is_object()) fail("sweep", "expected an object");
    parse_sweep(root["sweep"], cfg);
  }
  if (root.contains("opta")) {
    if (!root["opta"].is_object()) fail("opta", "expected an object");
    parse_opta(root["opta"], cfg);
  }
  return cfg;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_design_json(const std::string& path, const DesignDocument& doc) {
  std::ostringstream o;
  o << "{\n";
  o << "  \"c\": " << tf_json(doc.result.c) << ",\n";
  o << "  \"certificates\": {\n";
  o << "    \"dd_star_gap\": " << json_num(doc.result.certificates.dd_star_gap)
    << ",\n";
  o << "    \"factorization_gap\": "
    << json_num(doc.result.certificates.factorization_gap) << ",\n";
  o << "    \"lemma2_value_gap\": "
    << json_num(doc.result.certificates.lemma2_value_gap) << ",\n";
  o << "    \"power_gap\": " << json_num(doc.result.certificates.power_gap)
    << "\n  },\n";
  o << "  \"converged\": " << (doc.converged ? "true" : "false") << ",\n";
  o << "  \"d\": " << tf_json(doc.result.d) << ",\n";
  o << "  \"el_residual\": " << json_num(doc.el_residual) << ",\n";
  o << "  \"error\": " << json_str(doc.error) << ",\n";
  o << "  \"iterations\": " << doc.iterations << ",\n";
  o << "  \"k\": " << tf_json(doc.result.k) << ",\n";
  o << "  \"predicted_distortion\": "
    << json_num(doc.result.predicted_distortion) << ",\n";
  o << "  \"predicted_power\": " << json_num(doc.result.predicted_power)
    << ",\n";
  o << "  \"truncation\": {\n";
  o << "    \"c\": " << json_num(doc.result.c_truncation) << ",\n";
  o << "    \"d\": " << json_num(doc.result.d_truncation) << ",\n";
  o << "    \"k\": " << json_num(doc.result.k_truncation) << "\n  },\n";
  o << "  \"validation\": {\n";
  o << "    \"duality_gap\": " << json_num(doc.validation.duality_gap)
    << ",\n";
  o << "    \"feasible\": " << (doc.validation.feasible ? "true" : "false")
    << ",\n";
  o << "    \"j_value\": " << json_num(doc.validation.j_value) << ",\n";
  o << "    \"phi_value\": " << json_num(doc.validation.phi_value) << ",\n";
  o << "    \"power\": " << json_num(doc.validation.power) << ",\n";
  o << "    \"power_slack\": " << json_num(doc.validation.power_slack)
    << "\n  }\n";
  o << "}\n";
  write_text(path, o.str());
}

DesignResult read_design_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open design file");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path, e.what());
  }
  if (!root.is_object()) fail(path, "top level must be an object");
  for (const char* key : {"k", "c", "d"})
    if (!root.contains(key))
      fail(path, std::string("missing transfer function \"") + key + "\"");
  DesignResult out;
  out.k = parse_tf(root["k"], "k");
  out.c = parse_tf(root["c"], "c");
  out.d = parse_tf(root["d"], "d");
  return out;
}

void write_sweep_csv(const std::string& path, const SweepTable& table) {
  std::ostringstream o;
  o << "snr,delay,distortion_linear,distortion_opta,converged\n";
  for (const auto& row : table.rows) {
    o << format_double(row.snr) << ',' << row.delay << ','
      << format_double(row.distortion_linear) << ','
      << format_double(row.distortion_opta) << ','
      << (row.converged && row.note.empty() ? 1 : 0) << '\n';
  }
  write_text(path, o.str());
}

void write_opta_csv(const std::string& path, const OptaCurve& curve) {
  std::ostringstream o;
  o << "snr,capacity_nats,d_min\n";
  for (const auto& pt : curve.points) {
    o << format_double(pt.snr) << ',' << format_double(pt.capacity) << ','
      << format_double(pt.d_min) << '\n';
  }
  write_text(path, o.str());
}

void write_sim_json(const std::string& path, const SimReport& report) {
  std::ostringstream o;
  o << "{\n";
  o << "  \"empirical_mse\": " << json_num(report.empirical_mse) << ",\n";
  o << "  \"empirical_power\": " << json_num(report.empirical_power) << ",\n";
  o << "  \"max_tail_ratio\": " << json_num(report.max_tail_ratio) << ",\n";
  o << "  \"mse_stderr\": " << json_num(report.mse_stderr) << ",\n";
  o << "  \"power_stderr\": " << json_num(report.power_stderr) << ",\n";
  o << "  \"predicted_mse\": " << json_num(report.predicted_mse) << ",\n";
  o << "  \"predicted_power\": " << json_num(report.predicted_power) << ",\n";
  o << "  \"rng_algorithm\": " << json_str(report.rng_algorithm) << ",\n";
  o << "  \"truncation_warning\": "
    << (report.truncation_warning ? "true" : "false") << "\n";
  o << "}\n";
  write_text(path, o.str());
}

}  // namespace jscc
