#include "coagulab/fit.hpp"

#include <cmath>

#include "coagulab/error.hpp"

namespace coag {

RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& value, double t_lo,
                 double t_hi) {
  if (t.size() != value.size()) fail(errc::invalid_argument, "fit_rate: length mismatch");
  if (!(t_lo < t_hi)) fail(errc::invalid_argument, "fit_rate: empty window");

  RateFit fit;
  fit.window_lo = t_lo;
  fit.window_hi = t_hi;

  std::vector<double> ts, logs;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_lo || t[i] > t_hi) continue;
    if (!(value[i] > 0.0)) {
      // converged to the rounding floor: fit what precedes it and flag
      fit.truncated_at_floor = true;
      break;
    }
    ts.push_back(t[i]);
    logs.push_back(std::log(value[i]));
  }
  if (ts.size() < 10)
    fail(errc::invalid_argument,
         "fit_rate: fewer than 10 positive samples in the window (have " +
             std::to_string(ts.size()) + ")");

  const size_t n = ts.size();
  double mt = 0.0, ml = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mt += ts[i];
    ml += logs[i];
  }
  mt /= n;
  ml /= n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (ts[i] - mt) * (ts[i] - mt);
    sxy += (ts[i] - mt) * (logs[i] - ml);
  }
  const double slope = sxy / sxx;
  fit.rate = -slope;
  fit.intercept = ml - slope * mt;
  double rss = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double r = logs[i] - (fit.intercept + slope * ts[i]);
    rss += r * r;
  }
  fit.rms_residual = std::sqrt(rss / n);
  fit.n_samples = static_cast<int>(n);
  return fit;
}

}  // namespace coag
