#include "coagulab/coagulation.hpp"

#include <cmath>

namespace coag {

GridFunction coag_bilinear(const GridFunction& g, const GridFunction& h) {
  require_same_grid(g, h, "coag_bilinear");
  GridFunction c = convolve(g, h);
  const double ig = integrate(g);
  const double ih = integrate(h);
  for (int i = 0; i < c.n(); ++i) c[i] = 0.5 * (c[i] - g[i] * ih - h[i] * ig);
  return c;
}

GridFunction coag_primitive(const GridFunction& g, const GridFunction& h) {
  require_same_grid(g, h, "coag_primitive");
  GridFunction H = tail_primitive(h);
  GridFunction p = convolve(g, H);
  const double ig = integrate(g);
  for (int i = 0; i < p.n(); ++i) p[i] = 0.5 * (p[i] - H[i] * ig);
  return p;
}

GridFunction rhs(const GridFunction& state, Frame kind) {
  GridFunction c = coag_bilinear(state, state);
  if (kind == Frame::physical) return c;
  GridFunction d = derivative(state, 1);
  const Grid& grid = state.grid();
  for (int i = 0; i < c.n(); ++i) c[i] += 2.0 * state[i] + grid.node(i) * d[i];
  return c;
}

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

GridFunction power_times(const GridFunction& f, int m) {
  GridFunction out = f;
  for (int i = 0; i < f.n(); ++i) out[i] = std::pow(f.grid().node(i), m) * f[i];
  return out;
}

}  // namespace

LeibnizReport leibniz_convolution_identity_check(const GridFunction& g, const GridFunction& h,
                                                 int k) {
  require_same_grid(g, h, "leibniz_convolution_identity_check");
  if (k < 1 || k > 2) fail(errc::unsupported_order, "leibniz check supports k in {1, 2}");

  GridFunction lhs = derivative(power_times(convolve(g, h), k + 1), k);

  GridFunction acc = GridFunction::zero(g.grid());
  for (int i = 0; i <= k + 1; ++i) {
    GridFunction a = power_times(g, k + 1 - i);
    if (k + 1 - i > 0) a = derivative(a, k + 1 - i);
    GridFunction b = power_times(h, i);
    if (i == 0) {
      b = -1.0 * tail_primitive(h);
    } else if (i >= 2) {
      b = derivative(b, i - 1);
    }
    acc += binom(k + 1, i) * convolve(a, b);
  }
  // boundary term from shifting a derivative off the i = 0 factor
  const double ih = integrate(h);
  GridFunction corr = derivative(power_times(g, k + 1), k);
  acc += ih * corr;

  LeibnizReport rep;
  const int skip = 8;
  for (int i = skip; i < g.n() - skip; ++i) {
    rep.max_discrepancy = std::max(rep.max_discrepancy, std::fabs(lhs[i] - acc[i]));
    rep.scale = std::max(rep.scale, std::fabs(lhs[i]));
  }
  return rep;
}

}  // namespace coag
