#pragma once

#include <functional>
#include <span>
#include <vector>

#include "coagulab/error.hpp"

namespace coag {

// Uniform size grid on (0, y_max]: nodes y_i = i*spacing for i = 1..n_points.
// y = 0 is not a node; where an endpoint value is needed (quadrature,
// convolution, interpolation) it is reconstructed by extrapolation from the
// first nodes. Two GridFunctions interoperate only on equal grids.
class Grid {
public:
  Grid(int n_points, double y_max);

  int n() const { return n_; }
  double y_max() const { return y_max_; }
  double spacing() const { return dy_; }
  // storage index i in [0, n) holds the value at y = (i+1)*spacing
  double node(int i) const { return dy_ * (i + 1); }
  std::vector<double> nodes() const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.y_max_ == b.y_max_;
  }

private:
  int n_;
  double y_max_;
  double dy_;
};

// Values of a real function at the grid nodes. Entries must be finite;
// nonnegativity is not an invariant (perturbations are signed).
class GridFunction {
public:
  GridFunction(Grid grid, std::vector<double> values);
  static GridFunction zero(const Grid& g);
  static GridFunction sample(const Grid& g, const std::function<double(double)>& f);

  const Grid& grid() const { return grid_; }
  int n() const { return static_cast<int>(v_.size()); }
  double operator[](int i) const { return v_[i]; }
  double& operator[](int i) { return v_[i]; }
  std::span<const double> values() const { return v_; }
  std::vector<double>& raw() { return v_; }

  double max_abs() const;
  double min() const;
  void check_finite(const char* what = "grid function") const;

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(double c);

private:
  Grid grid_;
  std::vector<double> v_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(double c, GridFunction a);

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* where);

// Phantom value at y = 0: quadratic extrapolation from the first three nodes,
// clipped to a finite value.
double extrapolate_to_zero(std::span<const double> v);

// Endpoint-corrected composite trapezoid over [0, y_max]. The y=0 value is the
// extrapolated phantom; corrections use the one-sided derivative stencils, so
// the rule is 4th order on smooth integrands.
double integrate(const GridFunction& f);
double integrate(const GridFunction& f, std::span<const double> weight);
double integrate(const GridFunction& f, const std::function<double(double)>& weight);

// Linear (non-circular) convolution restricted to [0, y_max]:
// (f*g)(y_i) ~ int_0^{y_i} f(x) g(y_i - x) dx, endpoint-corrected as above.
// convolve() runs through zero-padded FFTs; convolve_direct() evaluates the
// identical discrete rule by direct summation and is the oracle for it.
GridFunction convolve(const GridFunction& f, const GridFunction& g);
GridFunction convolve_direct(const GridFunction& f, const GridFunction& g);

// One convolution factor frozen and transformed once, for repeated use.
class FixedFactor {
public:
  explicit FixedFactor(const GridFunction& g);
  const GridFunction& function() const { return g_; }
  GridFunction convolve_with(const GridFunction& f) const;

private:
  GridFunction g_;
  std::vector<double> padded_;    // phantom + values, zero-padded
  std::vector<double> spectrum_;  // interleaved re/im, half spectrum
  int fft_size_;
};

// H(y_i) = int_{y_i}^{y_max} h dx by 4th-order cell integrals; H(y_max) = 0.
GridFunction tail_primitive(const GridFunction& h);

// k-th derivative, 4th-order central stencils inside, matching-order one-sided
// stencils at the boundaries. Supported orders k = 1..4.
GridFunction derivative(const GridFunction& h, int k);

// Derivative for the transport terms of the evolution operators: centered
// stencils are continued past y_max with zero ghost values. For functions
// that have decayed at y_max this is exact to the truncation level, and it
// gives the drift term its inflow data (the rescaled solutions vanish beyond
// the grid); the extrapolating one-sided closure is unstable there under RK
// time stepping. The left boundary keeps the one-sided rows.
GridFunction derivative_decaying_tail(const GridFunction& h, int k);

struct DerivativeStencil {
  int order;
  int accuracy;  // fixed at 4
  int interior_width;
  int boundary_width;
  std::vector<double> interior;            // centered row, offsets in units of spacing
  std::vector<std::vector<double>> left;   // rows for the first nodes
  std::vector<std::vector<double>> right;  // rows for the last nodes
};
const DerivativeStencil& derivative_stencil(int k);

// Fornberg finite-difference weights: weight of each node x[j] for the m-th
// derivative evaluated at x0.
std::vector<double> fd_weights(double x0, std::span<const double> x, int m);

// Piecewise-linear sample of f at arbitrary y: uses the phantom value below
// the first node and evaluates to 0 beyond y_max.
double sample_linear(const GridFunction& f, double y);

}  // namespace coag
