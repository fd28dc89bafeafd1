#include "coagulab/observables.hpp"

#include <algorithm>
#include <cmath>

namespace coag {

std::string NormSpec::label() const {
  std::string s = "(" + std::to_string(k) + "," + std::to_string(mu) + ")";
  if (power == Power::alternative) s += "alt";
  return s;
}

double psi_convex(double y) { return (1.0 + y) * std::log1p(y) - y; }

namespace {

// Truncation rule: the weighted integrand must have decayed by the end of the
// grid, else the truncated integral misrepresents the moment.
void check_tail_decayed(std::span<const double> integrand, const char* what) {
  double peak = 0.0;
  for (double x : integrand) peak = std::max(peak, std::fabs(x));
  if (peak == 0.0) return;
  const double tail = std::fabs(integrand.back());
  if (tail > 1e-8 * peak)
    fail(errc::truncation, std::string(what) +
                               ": weighted integrand has not decayed at y_max (tail/peak = " +
                               std::to_string(tail / peak) + ")");
}

std::vector<double> weighted_integrand(const GridFunction& h, const NormSpec& spec) {
  if (spec.k < -1 || spec.k > 4)
    fail(errc::unsupported_order, "norm order k must be in -1..4");
  if (!(spec.mu > 0.0)) fail(errc::invalid_argument, "norm weight mu must be positive");
  const Grid& g = h.grid();
  std::vector<double> p(h.n());
  if (spec.k == -1) {
    GridFunction H = tail_primitive(h);
    for (int i = 0; i < h.n(); ++i) p[i] = H[i] * H[i] * std::exp(spec.mu * g.node(i));
    return p;
  }
  GridFunction d = (spec.k == 0) ? h : derivative(h, spec.k);
  const int pw = (spec.power == NormSpec::Power::standard) ? 2 * (spec.k + 1) : 2 * spec.k;
  for (int i = 0; i < h.n(); ++i) {
    const double y = g.node(i);
    p[i] = d[i] * d[i] * std::pow(y, pw) * std::exp(spec.mu * y);
  }
  return p;
}

double integrate_array(const GridFunction& ref, std::vector<double> p) {
  return integrate(GridFunction(ref.grid(), std::move(p)));
}

}  // namespace

double moment(const GridFunction& g, double k) {
  if (k <= -1.0) fail(errc::invalid_argument, "moment order must exceed -1");
  std::vector<double> p(g.n());
  for (int i = 0; i < g.n(); ++i) p[i] = std::pow(g.grid().node(i), k) * std::fabs(g[i]);
  return integrate_array(g, std::move(p));
}

double exp_moment_truncated(const GridFunction& g, double mu, bool* tail_converged) {
  std::vector<double> p(g.n());
  for (int i = 0; i < g.n(); ++i) p[i] = std::exp(mu * g.grid().node(i)) * std::fabs(g[i]);
  if (tail_converged) {
    double peak = 0.0;
    for (double x : p) peak = std::max(peak, x);
    *tail_converged = (peak == 0.0) || (p.back() <= 1e-8 * peak);
  }
  return integrate_array(g, std::move(p));
}

double exp_moment(const GridFunction& g, double mu) {
  std::vector<double> p(g.n());
  for (int i = 0; i < g.n(); ++i) p[i] = std::exp(mu * g.grid().node(i)) * std::fabs(g[i]);
  check_tail_decayed(p, "exp_moment");
  return integrate_array(g, std::move(p));
}

double weighted_norm(const GridFunction& h, const NormSpec& spec) {
  auto p = weighted_integrand(h, spec);
  check_tail_decayed(p, "weighted_norm");
  const double v = integrate_array(h, std::move(p));
  return std::sqrt(std::max(v, 0.0));
}

double weighted_inner(const GridFunction& h1, const GridFunction& h2, const NormSpec& spec) {
  require_same_grid(h1, h2, "weighted_inner");
  if (spec.k < -1 || spec.k > 4)
    fail(errc::unsupported_order, "norm order k must be in -1..4");
  if (!(spec.mu > 0.0)) fail(errc::invalid_argument, "norm weight mu must be positive");
  const Grid& g = h1.grid();
  std::vector<double> p(h1.n());
  if (spec.k == -1) {
    GridFunction H1 = tail_primitive(h1);
    GridFunction H2 = tail_primitive(h2);
    for (int i = 0; i < h1.n(); ++i) p[i] = H1[i] * H2[i] * std::exp(spec.mu * g.node(i));
  } else {
    GridFunction d1 = (spec.k == 0) ? h1 : derivative(h1, spec.k);
    GridFunction d2 = (spec.k == 0) ? h2 : derivative(h2, spec.k);
    const int pw = (spec.power == NormSpec::Power::standard) ? 2 * (spec.k + 1) : 2 * spec.k;
    for (int i = 0; i < h1.n(); ++i) {
      const double y = g.node(i);
      p[i] = d1[i] * d2[i] * std::pow(y, pw) * std::exp(spec.mu * y);
    }
  }
  check_tail_decayed(p, "weighted_inner");
  return integrate_array(h1, std::move(p));
}

double l2_norm(const GridFunction& h) {
  std::vector<double> p(h.n());
  for (int i = 0; i < h.n(); ++i) p[i] = h[i] * h[i];
  return std::sqrt(std::max(integrate_array(h, std::move(p)), 0.0));
}

double l2_distance(const GridFunction& a, const GridFunction& b) { return l2_norm(a - b); }

EntropyReport relative_entropy(const GridFunction& g, double rho, bool primitive_form) {
  if (!(rho > 0.0)) fail(errc::invalid_argument, "relative_entropy needs rho > 0");
  const Grid& grid = g.grid();
  const double clip_tol = 1e-10 * (1.0 + g.max_abs());
  if (g.min() < -clip_tol)
    fail(errc::invalid_argument, "relative_entropy: negative density beyond clipping tolerance");

  const double rate = 2.0 / rho;
  std::vector<double> a(g.n()), b(g.n());
  if (primitive_form) {
    GridFunction G = tail_primitive(g);
    for (int i = 0; i < g.n(); ++i) {
      a[i] = std::max(G[i], 0.0);
      b[i] = 2.0 * std::exp(-rate * grid.node(i));
    }
  } else {
    for (int i = 0; i < g.n(); ++i) {
      a[i] = std::max(g[i], 0.0);
      b[i] = (4.0 / rho) * std::exp(-rate * grid.node(i));
    }
  }

  std::vector<double> integrand(g.n()), absdiff(g.n());
  for (int i = 0; i < g.n(); ++i) {
    integrand[i] = (a[i] > 0.0) ? a[i] * (std::log(a[i] / b[i]) - 1.0) + b[i] : b[i];
    absdiff[i] = std::fabs(a[i] - b[i]);
  }
  EntropyReport rep;
  rep.entropy = integrate_array(g, std::move(integrand));
  rep.l1_distance = std::max(integrate_array(g, std::move(absdiff)), 0.0);
  const double ref_mass = primitive_form ? rho : 2.0;
  rep.csiszar_lower_bound = ref_mass * psi_convex(rep.l1_distance / ref_mass);
  return rep;
}

}  // namespace coag
