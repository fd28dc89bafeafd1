#include "coagulab/inequalities.hpp"

#include <cmath>

#include "coagulab/coagulation.hpp"
#include "coagulab/observables.hpp"

namespace coag {

namespace {

GridFunction map_nodes(const GridFunction& f, const std::function<double(double, double)>& fn) {
  GridFunction out = GridFunction::zero(f.grid());
  for (int i = 0; i < f.n(); ++i) out[i] = fn(f.grid().node(i), f[i]);
  return out;
}

}  // namespace

InequalityCase check_aizenman_bak(const GridFunction& f) {
  InequalityCase c;
  c.name = "aizenman-bak";
  for (int i = 0; i < f.n(); ++i)
    if (!(f[i] > 0.0))
      fail(errc::invalid_argument,
           "aizenman-bak needs strictly positive values (node " + std::to_string(i + 1) + ")");
  GridFunction logf = map_nodes(f, [](double, double v) { return std::log(v); });
  GridFunction ff = convolve(f, f);
  std::vector<double> p(f.n());
  for (int i = 0; i < f.n(); ++i) p[i] = ff[i] * logf[i];
  c.lhs = integrate(GridFunction(f.grid(), std::move(p)));
  const double mass0 = integrate(f);
  std::vector<double> q(f.n());
  for (int i = 0; i < f.n(); ++i) q[i] = f[i] * logf[i];
  c.rhs = mass0 * integrate(GridFunction(f.grid(), std::move(q))) - mass0 * mass0;
  c.finish();
  return c;
}

double aizenman_bak_lhs_direct(const GridFunction& f) {
  // honest 2D trapezoid over the triangle x + y <= y_max; lands on grid nodes
  // because the grid is uniform
  const Grid& g = f.grid();
  const int n = g.n();
  const double dy = g.spacing();
  const double f0 = extrapolate_to_zero(f.values());
  std::vector<double> logf(n);
  for (int i = 0; i < n; ++i) logf[i] = std::log(f[i]);
  const double logf0 = std::log(f0 > 0.0 ? f0 : f[0]);

  double acc = 0.0;
  // interior and boundary weights of the product trapezoid rule
  for (int i = -1; i < n; ++i) {
    const double fi = (i < 0) ? f0 : f[i];
    const double wi = (i < 0 || i == n - 1) ? 0.5 : 1.0;
    for (int j = -1; j < n; ++j) {
      if (i + j + 2 > n) break;  // x + y beyond the grid: truncated
      const double fj = (j < 0) ? f0 : f[j];
      const double wj = (j < 0 || j == n - 1) ? 0.5 : 1.0;
      const int idx = i + j + 2;  // node index of x + y, 0-based grid storage + 2
      const double lf = (idx == 0) ? logf0 : logf[idx - 1];
      acc += wi * wj * fi * fj * lf;
    }
  }
  return acc * dy * dy;
}

InequalityCase check_linear_aizenman_bak(const GridFunction& h, double mu) {
  if (!(mu > 0.0)) fail(errc::invalid_argument, "linearized inequality needs mu > 0");
  InequalityCase c;
  c.name = "linear-aizenman-bak";
  c.parameters["mu"] = mu;
  GridFunction H = tail_primitive(h);
  const Grid& g = h.grid();
  std::vector<double> hh_e(h.n()), hh_ye(h.n()), hH_e(h.n());
  for (int i = 0; i < h.n(); ++i) {
    const double y = g.node(i);
    const double e = std::exp(mu * y);
    hH_e[i] = h[i] * H[i] * e;
    hh_ye[i] = h[i] * h[i] * y * e;
    hh_e[i] = h[i] * h[i] * e;
  }
  // truncation rule applies to the weighted quadratic terms
  {
    double peak = 0.0;
    for (double x : hh_e) peak = std::max(peak, std::fabs(x));
    if (peak > 0.0 && std::fabs(hh_e.back()) > 1e-8 * peak)
      fail(errc::truncation, "linear-aizenman-bak: weighted integrand not decayed at y_max");
  }
  const double ih = integrate(h);
  const double iyh = integrate(h, [](double y) { return y; });
  c.lhs = 4.0 * integrate(GridFunction(g, std::move(hH_e)));
  c.rhs = 2.0 * mu * ih * iyh + integrate(GridFunction(g, std::move(hh_ye))) +
          integrate(GridFunction(g, std::move(hh_e))) / mu;
  c.finish();
  return c;
}

InequalityCase check_hardy(const GridFunction& h, int n, double mu) {
  if (n < 0 || n > 2) fail(errc::invalid_argument, "hardy check supports n in {0,1,2}");
  if (mu < 0.0) fail(errc::invalid_argument, "hardy check needs mu >= 0");
  InequalityCase c;
  c.name = "hardy";
  c.parameters["n"] = n;
  c.parameters["mu"] = mu;
  GridFunction H = tail_primitive(h);
  const Grid& g = h.grid();
  std::vector<double> lhs(h.n()), rhs(h.n());
  for (int i = 0; i < h.n(); ++i) {
    const double y = g.node(i);
    const double e = std::exp(mu * y);
    lhs[i] = H[i] * H[i] * std::pow(y, 2 * n) * e;
    rhs[i] = h[i] * h[i] * std::pow(y, 2 * (n + 1)) * e;
  }
  {
    double peak = 0.0;
    for (double x : rhs) peak = std::max(peak, std::fabs(x));
    if (peak > 0.0 && std::fabs(rhs.back()) > 1e-8 * peak)
      fail(errc::truncation, "hardy: weighted integrand not decayed at y_max");
  }
  c.lhs = integrate(GridFunction(g, std::move(lhs)));
  c.rhs = 4.0 * integrate(GridFunction(g, std::move(rhs)));
  c.finish();
  return c;
}

InequalityCase check_weighted_poincare(const GridFunction& h, double mu) {
  if (!(mu > 0.0)) fail(errc::invalid_argument, "poincare check needs mu > 0");
  InequalityCase c;
  c.name = "weighted-poincare";
  c.parameters["mu"] = mu;
  GridFunction H = tail_primitive(h);
  const Grid& g = h.grid();
  std::vector<double> lhs(h.n()), rhs(h.n());
  for (int i = 0; i < h.n(); ++i) {
    const double e = std::exp(mu * g.node(i));
    lhs[i] = H[i] * H[i] * e;
    rhs[i] = h[i] * h[i] * e;
  }
  {
    double peak = 0.0;
    for (double x : rhs) peak = std::max(peak, std::fabs(x));
    if (peak > 0.0 && std::fabs(rhs.back()) > 1e-8 * peak)
      fail(errc::truncation, "poincare: weighted integrand not decayed at y_max");
  }
  c.lhs = integrate(GridFunction(g, std::move(lhs)));
  c.rhs = (4.0 / (mu * mu)) * integrate(GridFunction(g, std::move(rhs)));
  c.finish();
  return c;
}

InequalityCase check_bilinear_bound(const GridFunction& h, double rho, double mu) {
  if (!(mu > 0.0) || !(rho > 0.0))
    fail(errc::invalid_argument, "bilinear bound needs mu > 0 and rho > 0");
  if (!(mu < 4.0 / rho))
    fail(errc::invalid_argument, "bilinear bound needs mu < 4/rho");
  InequalityCase c;
  c.name = "bilinear-bound";
  c.parameters["mu"] = mu;
  c.parameters["rho"] = rho;
  c.parameters["K"] = 1.0;
  GridFunction P = coag_primitive(h, h);
  GridFunction H = tail_primitive(h);
  const Grid& g = h.grid();
  std::vector<double> pp(h.n()), hh(h.n());
  for (int i = 0; i < h.n(); ++i) {
    const double e = std::exp(mu * g.node(i));
    pp[i] = P[i] * P[i] * e;
    hh[i] = H[i] * H[i] * e;
  }
  {
    double peak = 0.0;
    for (double x : hh) peak = std::max(peak, std::fabs(x));
    if (peak > 0.0 && std::fabs(hh.back()) > 1e-8 * peak)
      fail(errc::truncation, "bilinear bound: weighted integrand not decayed at y_max");
  }
  c.lhs = std::sqrt(std::max(integrate(GridFunction(g, std::move(pp))), 0.0));
  const double norm_h = std::sqrt(std::max(integrate(GridFunction(g, std::move(hh))), 0.0));
  std::vector<double> habs(h.n());
  for (int i = 0; i < h.n(); ++i)
    habs[i] = std::fabs(h[i]) * std::exp(0.5 * mu * g.node(i));
  c.rhs = norm_h * integrate(GridFunction(g, std::move(habs)));
  c.finish();
  return c;
}

InequalityCase check_norm_equivalence(const std::function<double(double)>& h, const Grid& grid,
                                      int k, int a, int b, int n, int m, double mu) {
  if (k < 1 || k > 2) fail(errc::invalid_argument, "norm equivalence supports k in {1,2}");
  if (a + b != k + 1 || n + m != k + 1)
    fail(errc::invalid_argument, "norm equivalence needs a+b = n+m = k+1");
  auto ratio_on = [&](const Grid& g) {
    auto hv = GridFunction::sample(g, h);
    auto with_power = [&](const GridFunction& f, int pw) {
      GridFunction out = f;
      for (int i = 0; i < f.n(); ++i) out[i] = std::pow(g.node(i), pw) * f[i];
      return out;
    };
    auto weighted_l2 = [&](const GridFunction& f, int pw) {
      std::vector<double> p(f.n());
      for (int i = 0; i < f.n(); ++i) {
        const double y = g.node(i);
        const double v = std::pow(y, pw) * f[i];
        p[i] = v * v * std::exp(mu * y);
      }
      return std::sqrt(std::max(integrate(GridFunction(g, std::move(p))), 0.0));
    };
    const double lhs = weighted_l2(derivative(with_power(hv, b), k), a);
    const double rhs = weighted_l2(derivative(with_power(hv, m), k), n);
    return std::pair<double, double>(lhs, rhs);
  };

  InequalityCase c;
  c.name = "norm-equivalence";
  c.parameters = {{"k", double(k)}, {"a", double(a)}, {"b", double(b)},
                  {"n", double(n)}, {"m", double(m)}, {"mu", mu}};
  auto [lf, rf] = ratio_on(grid);
  Grid coarse(grid.n() / 2, grid.y_max());
  auto [lc, rc] = ratio_on(coarse);
  const double ratio_fine = (rf > 0.0) ? lf / rf : 0.0;
  const double ratio_coarse = (rc > 0.0) ? lc / rc : 0.0;
  c.lhs = ratio_fine;
  c.rhs = ratio_coarse;
  c.tolerance = 0.05;
  c.margin = (ratio_coarse > 0.0)
                 ? c.tolerance - std::fabs(ratio_fine / ratio_coarse - 1.0)
                 : ((ratio_fine == 0.0 && ratio_coarse == 0.0) ? 0.0 : -1.0);
  c.passed = c.margin >= 0.0 && std::isfinite(ratio_fine);
  return c;
}

}  // namespace coag
