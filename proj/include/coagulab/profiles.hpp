#pragma once

#include <complex>
#include <functional>

#include "coagulab/grid.hpp"

namespace coag {

// Stationary profile of the rescaled equation with mass rho:
// g_rho(y) = (4/rho) e^{-2y/rho}; its tail primitive is G_rho(y) = 2 e^{-2y/rho}.
GridFunction stationary_profile(double rho, const Grid& grid);
GridFunction stationary_profile_primitive(double rho, const Grid& grid);
double stationary_profile_at(double rho, double y);

// Derivative of the stationary family in the mass direction; the linearized
// operator annihilates it. At rho = 2 this is (y-1) e^{-y}.
GridFunction mass_direction(double rho, const Grid& grid);

// Closed-form moment evolutions.
double oracle_m0_physical(double m0_initial, double t);
double oracle_m0_selfsim(double m0_initial, double t);
double oracle_m2_physical(double m2_initial, double rho, double t);
double oracle_m2_selfsim(double m2_initial, double rho, double t);

struct MomentOracleInput {
  double m0_initial;    // M_0 at t = 0
  double e_mu_initial;  // E_mu at t = 0
  double mu;            // exponential order (>= 0)
  double mass;          // conserved first moment rho
};

// Exponential-moment evolution in the physical frame. Errors past the blow-up
// time 2/(E_mu^0 - M_0^0) when the initial exponential moment exceeds M_0^0.
double oracle_exp_moment_physical(const MomentOracleInput& in, double t);

// Self-similar frame: needs the whole initial profile theta -> E_theta^0
// because the formula evaluates it at mu/e^t.
double oracle_exp_moment_selfsim(double m0_initial,
                                 const std::function<double(double)>& e0_of_theta, double mu,
                                 double t);

enum class FrameDirection { fw, bw };

// Power-moment transport between frames: fw takes M_k of the physical solution
// at time e^t - 1 to M_k of the rescaled solution at time t; bw inverts it
// (its t is the physical time).
double transform_moment(double value, double k, double t, FrameDirection dir);
// Exponential analogue; the frequency moves too (mu -> mu e^{-t}), the caller
// tracks which moment the value refers to.
double transform_exp_moment(double value, double t, FrameDirection dir);

// Explicit transform-side solution: phi_t(mu) = 2 phi0(mu/tau) /
// (2 + (tau-1)(2 - phi0(mu/tau))), tau = e^t, for data normalized to
// int g = int y g = 2. Errors on a vanishing denominator.
std::complex<double> oracle_fourier(const std::function<std::complex<double>(double)>& phi0,
                                    double t, double mu);
std::complex<double> fourier_equilibrium(double mu);  // 2/(1 + i mu)

// Quadrature transform of a grid function at frequency mu.
std::complex<double> fourier_transform(const GridFunction& g, double mu);

// Rescale a nonnegative datum to int g = int y g = 2 (the normalization the
// transform-side solution assumes). Resamples on the same grid.
GridFunction normalize_mass2(const GridFunction& g);

struct ExpMomentConditionReport {
  bool finite_all_t = false;
  bool uniformly_bounded = false;
  double worst_margin = 0.0;   // min over the theta sweep of rhs - lhs
  double theta_at_worst = 0.0;
  double nu_infimum = 0.0;     // inf over theta of the admissible nu
  int n_samples = 0;
  bool all_tail_converged = true;
  bool sampled = true;  // finitely sampled sweep, not a proof
};

// Sampled check of the finiteness / uniform-boundedness conditions for
// E_mu[g(t)]: E_theta^0 - M_0^0 vs 2/(mu/theta - 1) over a log sweep of
// theta in (1e-4 mu, mu).
ExpMomentConditionReport check_exp_moment_conditions(const GridFunction& g0, double mu);

}  // namespace coag
