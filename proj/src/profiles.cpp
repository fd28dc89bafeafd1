#include "coagulab/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "coagulab/observables.hpp"

namespace coag {

double stationary_profile_at(double rho, double y) {
  return (4.0 / rho) * std::exp(-2.0 * y / rho);
}

GridFunction stationary_profile(double rho, const Grid& grid) {
  if (!(rho > 0.0)) fail(errc::invalid_argument, "stationary profile needs rho > 0");
  return GridFunction::sample(grid, [rho](double y) { return stationary_profile_at(rho, y); });
}

GridFunction stationary_profile_primitive(double rho, const Grid& grid) {
  if (!(rho > 0.0)) fail(errc::invalid_argument, "stationary profile needs rho > 0");
  return GridFunction::sample(grid, [rho](double y) { return 2.0 * std::exp(-2.0 * y / rho); });
}

GridFunction mass_direction(double rho, const Grid& grid) {
  if (!(rho > 0.0)) fail(errc::invalid_argument, "mass direction needs rho > 0");
  return GridFunction::sample(grid, [rho](double y) {
    return (4.0 / (rho * rho)) * (2.0 * y / rho - 1.0) * std::exp(-2.0 * y / rho);
  });
}

double oracle_m0_physical(double m0_initial, double t) {
  if (!(m0_initial > 0.0)) fail(errc::invalid_argument, "M0 oracle needs M0(0) > 0");
  if (t < 0.0) fail(errc::invalid_argument, "M0 oracle needs t >= 0");
  return 2.0 / (t + 2.0 / m0_initial);
}

double oracle_m0_selfsim(double m0_initial, double t) {
  if (!(m0_initial > 0.0)) fail(errc::invalid_argument, "M0 oracle needs M0(0) > 0");
  if (t < 0.0) fail(errc::invalid_argument, "M0 oracle needs t >= 0");
  const double et = std::exp(-t);
  return 2.0 / (1.0 - et + 2.0 * et / m0_initial);
}

double oracle_m2_physical(double m2_initial, double rho, double t) {
  return m2_initial + rho * rho * t;
}

double oracle_m2_selfsim(double m2_initial, double rho, double t) {
  const double et = std::exp(-t);
  return et * m2_initial + rho * rho * (1.0 - et);
}

double oracle_exp_moment_physical(const MomentOracleInput& in, double t) {
  if (!(in.m0_initial > 0.0)) fail(errc::invalid_argument, "exp-moment oracle needs M0(0) > 0");
  if (in.mu >= 0.0 && in.e_mu_initial < in.m0_initial * (1.0 - 1e-12))
    fail(errc::invalid_argument, "exp-moment oracle: E_mu(0) < M0(0) is inconsistent for mu >= 0");
  const double first = 2.0 / (t + 2.0 / in.m0_initial);
  const double excess = in.e_mu_initial - in.m0_initial;
  if (excess <= 0.0) return first;  // degenerate: the second term vanishes
  const double t_star = 2.0 / excess;
  if (t >= t_star * (1.0 - 1e-12))
    fail(errc::blow_up, "exp-moment oracle evaluated at or past the blow-up time t* = " +
                            std::to_string(t_star));
  return first + 2.0 / (t_star - t);
}

double oracle_exp_moment_selfsim(double m0_initial,
                                 const std::function<double(double)>& e0_of_theta, double mu,
                                 double t) {
  if (!(m0_initial > 0.0)) fail(errc::invalid_argument, "exp-moment oracle needs M0(0) > 0");
  if (t < 0.0) fail(errc::invalid_argument, "exp-moment oracle needs t >= 0");
  const double s = std::exp(t);
  const double first = 2.0 * s / (s - 1.0 + 2.0 / m0_initial);
  const double theta = mu / s;
  const double e0 = e0_of_theta(theta);
  const double excess = e0 - m0_initial;
  if (excess <= 0.0) return first;
  const double denom = 2.0 / excess - s + 1.0;
  if (denom <= 0.0)
    fail(errc::blow_up, "exp-moment oracle (self-similar): denominator crossed zero at t = " +
                            std::to_string(t) + " (blow-up at e^t = 1 + 2/(E0 - M0))");
  return first + 2.0 * s / denom;
}

double transform_moment(double value, double k, double t, FrameDirection dir) {
  if (t < 0.0) fail(errc::invalid_argument, "moment transform needs t >= 0");
  if (dir == FrameDirection::fw) return std::exp(t * (1.0 - k)) * value;
  return std::pow(t + 1.0, k - 1.0) * value;
}

double transform_exp_moment(double value, double t, FrameDirection dir) {
  if (t < 0.0) fail(errc::invalid_argument, "moment transform needs t >= 0");
  if (dir == FrameDirection::fw) return std::exp(t) * value;
  return value / (t + 1.0);
}

std::complex<double> fourier_equilibrium(double mu) {
  return 2.0 / std::complex<double>(1.0, mu);
}

std::complex<double> oracle_fourier(const std::function<std::complex<double>(double)>& phi0,
                                    double t, double mu) {
  if (t < 0.0) fail(errc::invalid_argument, "transform oracle needs t >= 0");
  const double tau = std::exp(t);
  const std::complex<double> p0 = phi0(mu / tau);
  const std::complex<double> denom = 2.0 + (tau - 1.0) * (2.0 - p0);
  if (std::abs(denom) < 1e-14)
    fail(errc::invalid_argument, "transform oracle: vanishing denominator at mu = " +
                                     std::to_string(mu) + ", t = " + std::to_string(t));
  return 2.0 * p0 / denom;
}

std::complex<double> fourier_transform(const GridFunction& g, double mu) {
  const double re = integrate(g, [mu](double y) { return std::cos(mu * y); });
  const double im = integrate(g, [mu](double y) { return -std::sin(mu * y); });
  return {re, im};
}

GridFunction normalize_mass2(const GridFunction& g) {
  const double a = moment(g, 0.0);
  const double rho = moment(g, 1.0);
  if (!(a > 0.0) || !(rho > 0.0))
    fail(errc::invalid_argument, "normalize_mass2 needs a datum with positive M0 and M1");
  const double beta = rho / a;        // argument dilation
  const double lam = 2.0 * rho / (a * a);  // amplitude
  GridFunction out = GridFunction::zero(g.grid());
  for (int i = 0; i < g.n(); ++i) out[i] = lam * sample_linear(g, beta * g.grid().node(i));
  return out;
}

ExpMomentConditionReport check_exp_moment_conditions(const GridFunction& g0, double mu) {
  if (g0.min() < -1e-12 * (1.0 + g0.max_abs()))
    fail(errc::invalid_argument, "exp-moment conditions need a nonnegative datum");
  ExpMomentConditionReport rep;
  if (mu <= 0.0) {  // empty theta range: vacuously true
    rep.finite_all_t = rep.uniformly_bounded = true;
    rep.nu_infimum = std::numeric_limits<double>::infinity();
    return rep;
  }
  const double m0 = moment(g0, 0.0);
  const int n = 200;
  const double lo = 1e-4 * mu, hi = mu * (1.0 - 1e-9);
  double worst = std::numeric_limits<double>::infinity();
  double nu_inf = std::numeric_limits<double>::infinity();
  bool all_positive = true, all_tail = true;
  for (int j = 0; j < n; ++j) {
    const double theta = lo * std::pow(hi / lo, static_cast<double>(j) / (n - 1));
    bool tail = true;
    const double e0 = exp_moment_truncated(g0, theta, &tail);
    all_tail = all_tail && tail;
    const double lhs = e0 - m0;
    const double rhs = 2.0 / (mu / theta - 1.0);
    const double margin = rhs - lhs;
    if (margin < worst) {
      worst = margin;
      rep.theta_at_worst = theta;
    }
    if (margin <= 0.0) all_positive = false;
    if (lhs > 0.0) nu_inf = std::min(nu_inf, theta * (1.0 + 2.0 / lhs));
  }
  rep.worst_margin = worst;
  rep.finite_all_t = all_positive;
  rep.uniformly_bounded = nu_inf > mu;
  rep.nu_infimum = nu_inf;
  rep.n_samples = n;
  rep.all_tail_converged = all_tail;
  return rep;
}

}  // namespace coag
