#pragma once

#include <string>

#include "coagulab/grid.hpp"

namespace coag {

// Weighted-norm descriptor. The standard family carries the power weight
// y^{2(k+1)}; the alternative family carries y^{2k} for k >= 0. For k = -1
// both coincide: the integrand is H^2 e^{mu y} with H the tail primitive.
struct NormSpec {
  int k = 0;       // derivative order, -1..4
  double mu = 1.0; // exponential weight rate, > 0
  enum class Power { standard, alternative };
  Power power = Power::standard;

  std::string label() const;
};

struct EntropyReport {
  double entropy = 0.0;
  double l1_distance = 0.0;
  double csiszar_lower_bound = 0.0;
};

// Psi(y) = (1+y) log(1+y) - y, the convex function behind the Csiszar bound.
double psi_convex(double y);

// M_k[g] = int y^k |g|; defined with |g| so it is meaningful for signed
// perturbations as well.
double moment(const GridFunction& g, double k);

// E_mu[g] = int e^{mu y} |g|. The checked variant rejects integrands that have
// not decayed by y_max; the truncated variant reports what the grid holds and
// flags whether the tail had decayed.
double exp_moment(const GridFunction& g, double mu);
double exp_moment_truncated(const GridFunction& g, double mu, bool* tail_converged = nullptr);

double weighted_norm(const GridFunction& h, const NormSpec& spec);
double weighted_inner(const GridFunction& h1, const GridFunction& h2, const NormSpec& spec);

// Plain L2 norm on (0, y_max], used for the Fourier-route convergence runs.
double l2_norm(const GridFunction& h);
double l2_distance(const GridFunction& a, const GridFunction& b);

// Relative entropy of g against the stationary profile with mass rho,
// F[g|g_rho] = int (g (log(g/g_rho) - 1) + g_rho), with the integrand extended
// continuously by g_rho where g = 0. primitive_form compares the tail
// primitives G, G_rho instead. The Csiszar bound uses the actual reference
// mass of the compared pair, which is 2 in the density form.
EntropyReport relative_entropy(const GridFunction& g, double rho, bool primitive_form = false);

}  // namespace coag
