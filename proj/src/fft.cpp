#include "jscc/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace jscc {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Fft: size must be positive");
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_UNALIGNED lets the plans run on plain std::vector storage.
  fwd_ = fftw_plan_dft_1d(n, nullptr, nullptr, FFTW_FORWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
  inv_ = fftw_plan_dft_1d(n, nullptr, nullptr, FFTW_BACKWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!fwd_ || !inv_) throw std::runtime_error("Fft: planning failed");
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  if (inv_) fftw_destroy_plan(static_cast<fftw_plan>(inv_));
}

void Fft::forward(const cd* in, cd* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(fwd_),
                   reinterpret_cast<fftw_complex*>(const_cast<cd*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void Fft::inverse(const cd* in, cd* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(inv_),
                   reinterpret_cast<fftw_complex*>(const_cast<cd*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
  const double scale = 1.0 / n_;
  for (int t = 0; t < n_; ++t) out[t] *= scale;
}

std::vector<Fft::cd> Fft::forward(const std::vector<cd>& in) const {
  if (static_cast<int>(in.size()) != n_)
    throw std::invalid_argument("Fft::forward: size mismatch");
  std::vector<cd> out(n_);
  forward(in.data(), out.data());
  return out;
}

std::vector<Fft::cd> Fft::inverse(const std::vector<cd>& in) const {
  if (static_cast<int>(in.size()) != n_)
    throw std::invalid_argument("Fft::inverse: size mismatch");
  std::vector<cd> out(n_);
  inverse(in.data(), out.data());
  return out;
}

}  // namespace jscc
