#pragma once

#include <vector>

namespace coag {

// Least-squares fit of log(value) against t over a window; rate = -slope.
struct RateFit {
  double rate = 0.0;
  double intercept = 0.0;  // log value extrapolated to t = 0
  double window_lo = 0.0;
  double window_hi = 0.0;
  double rms_residual = 0.0;
  int n_samples = 0;
  bool truncated_at_floor = false;  // window cut before a non-positive value
};

RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& value, double t_lo,
                 double t_hi);

}  // namespace coag
