#pragma once

#include <stdexcept>
#include <string>

namespace jscc {

/// Invalid user input: malformed filters, inconsistent dimensions, bad options.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational transfer function was evaluated too close to a pole.
class SingularEvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spectral density is not safely factorizable (non-positive or huge dynamic range).
class IllConditionedDensityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix lost rank somewhere on the frequency grid.
class RankDeficiencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative routine exhausted its iteration budget.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

/// A finite-basis fit failed a quality gate (e.g. lost positive semidefiniteness).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A synthesized factor failed a structural gate (e.g. the decoder picked up
/// non-causal energy, meaning the product was not accurately causal).
class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simulated signal blew past the sanity bound, meaning a filter chain is
/// effectively unstable.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration file problems; `path` points at the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace jscc
