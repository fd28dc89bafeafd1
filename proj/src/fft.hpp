#pragma once

#include <span>
#include <vector>

namespace coag::detail {

// Real forward transform of `in` (length = fft_size, power of two); output is
// the half spectrum as interleaved re/im pairs, (fft_size/2 + 1) bins.
std::vector<double> fft_forward(std::span<const double> in);

// Inverse of fft_forward including the 1/fft_size scaling.
std::vector<double> fft_backward(std::span<const double> spectrum, int fft_size);

// Pointwise product of two half spectra (interleaved re/im).
std::vector<double> spectrum_product(std::span<const double> a, std::span<const double> b);

int fft_size_for(int data_len);

// out[i] = sum_{j<=i} a[j] b[i-j] for i in [0, want); a and b need not have
// equal length.
std::vector<double> linear_convolution_prefix(std::span<const double> a,
                                              std::span<const double> b, int want);

}  // namespace coag::detail
