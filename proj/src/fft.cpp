#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace coag::detail {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// Plans are created once per size with FFTW_ESTIMATE (deterministic plan
// choice) and FFTW_UNALIGNED so the new-array execute functions accept
// caller-owned buffers. Plan creation is serialized; execution is thread-safe.
PlanPair plans_for(int m) {
  static std::map<int, PlanPair> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  double* re = fftw_alloc_real(m);
  fftw_complex* cx = fftw_alloc_complex(m / 2 + 1);
  PlanPair p;
  p.fwd = fftw_plan_dft_r2c_1d(m, re, cx, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_c2r_1d(m, cx, re, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(re);
  fftw_free(cx);
  cache[m] = p;
  return p;
}

}  // namespace

int fft_size_for(int data_len) {
  int m = 1;
  while (m < data_len) m <<= 1;
  return m;
}

std::vector<double> fft_forward(std::span<const double> in) {
  const int m = static_cast<int>(in.size());
  PlanPair p = plans_for(m);
  std::vector<double> buf(in.begin(), in.end());
  std::vector<double> out(2 * (m / 2 + 1));
  fftw_execute_dft_r2c(p.fwd, buf.data(), reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

std::vector<double> fft_backward(std::span<const double> spectrum, int fft_size) {
  PlanPair p = plans_for(fft_size);
  std::vector<double> spec(spectrum.begin(), spectrum.end());
  std::vector<double> out(fft_size);
  fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(spec.data()), out.data());
  const double scale = 1.0 / fft_size;
  for (double& x : out) x *= scale;
  return out;
}

std::vector<double> spectrum_product(std::span<const double> a, std::span<const double> b) {
  std::vector<double> c(a.size());
  for (size_t k = 0; k + 1 < a.size(); k += 2) {
    c[k] = a[k] * b[k] - a[k + 1] * b[k + 1];
    c[k + 1] = a[k] * b[k + 1] + a[k + 1] * b[k];
  }
  return c;
}

std::vector<double> linear_convolution_prefix(std::span<const double> a,
                                              std::span<const double> b, int want) {
  const int m = fft_size_for(static_cast<int>(a.size() + b.size()) - 1);
  std::vector<double> pa(m, 0.0), pb(m, 0.0);
  std::memcpy(pa.data(), a.data(), a.size() * sizeof(double));
  std::memcpy(pb.data(), b.data(), b.size() * sizeof(double));
  auto sa = fft_forward(pa);
  auto sb = fft_forward(pb);
  auto sc = spectrum_product(sa, sb);
  auto full = fft_backward(sc, m);
  full.resize(want);
  return full;
}

}  // namespace coag::detail
