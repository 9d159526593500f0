#pragma once

#include <complex>
#include <vector>

namespace jscc {

/// Thin RAII wrapper around FFTW double-precision complex transforms of a
/// fixed size. Plan creation is serialized internally (FFTW planning is not
/// thread safe); execution is reentrant, so distinct instances can be used
/// from distinct threads.
class Fft {
 public:
  using cd = std::complex<double>;

  explicit Fft(int n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  int size() const { return n_; }

  /// out[k] = sum_t in[t] exp(-i 2 pi k t / n).
  void forward(const cd* in, cd* out) const;
  /// out[t] = (1/n) sum_k in[k] exp(+i 2 pi k t / n).
  void inverse(const cd* in, cd* out) const;

  std::vector<cd> forward(const std::vector<cd>& in) const;
  std::vector<cd> inverse(const std::vector<cd>& in) const;

 private:
  int n_ = 0;
  void* fwd_ = nullptr;  // fftw_plan
  void* inv_ = nullptr;  // fftw_plan
};

}  // namespace jscc
