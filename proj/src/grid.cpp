#include "coagulab/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "fft.hpp"

namespace coag {

Grid::Grid(int n_points, double y_max) : n_(n_points), y_max_(y_max) {
  if (n_points <= 0) fail(errc::invalid_argument, "grid needs a positive node count");
  if (!(y_max > 0.0) || !std::isfinite(y_max))
    fail(errc::invalid_argument, "grid needs a positive finite y_max");
  dy_ = y_max_ / n_;
}

std::vector<double> Grid::nodes() const {
  std::vector<double> y(n_);
  for (int i = 0; i < n_; ++i) y[i] = node(i);
  return y;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != grid_.n())
    fail(errc::invalid_argument, "value array length does not match the grid");
  check_finite();
}

GridFunction GridFunction::zero(const Grid& g) {
  return GridFunction(g, std::vector<double>(g.n(), 0.0));
}

GridFunction GridFunction::sample(const Grid& g, const std::function<double(double)>& f) {
  std::vector<double> v(g.n());
  for (int i = 0; i < g.n(); ++i) v[i] = f(g.node(i));
  return GridFunction(g, std::move(v));
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::fabs(x));
  return m;
}

double GridFunction::min() const {
  double m = v_.empty() ? 0.0 : v_[0];
  for (double x : v_) m = std::min(m, x);
  return m;
}

void GridFunction::check_finite(const char* what) const {
  for (size_t i = 0; i < v_.size(); ++i)
    if (!std::isfinite(v_[i]))
      fail(errc::invalid_argument,
           std::string(what) + " has a non-finite entry at node " + std::to_string(i + 1));
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  require_same_grid(*this, o, "operator+=");
  for (int i = 0; i < n(); ++i) v_[i] += o.v_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  require_same_grid(*this, o, "operator-=");
  for (int i = 0; i < n(); ++i) v_[i] -= o.v_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(double c) {
  for (double& x : v_) x *= c;
  return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(double c, GridFunction a) { return a *= c; }

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* where) {
  if (!(a.grid() == b.grid()))
    fail(errc::grid_mismatch, std::string(where) + ": grid functions live on different grids");
}

double extrapolate_to_zero(std::span<const double> v) {
  double p0;
  if (v.size() >= 3)
    p0 = 3.0 * v[0] - 3.0 * v[1] + v[2];
  else if (v.size() == 2)
    p0 = 2.0 * v[0] - v[1];
  else
    p0 = v.empty() ? 0.0 : v[0];
  if (!std::isfinite(p0)) p0 = v.empty() ? 0.0 : v[0];
  return p0;
}

namespace {

// Composite trapezoid over [0, y_max] with the phantom value at 0 and
// Euler-Maclaurin endpoint corrections from one-sided derivative estimates.
double integrate_values(std::span<const double> v, double dy) {
  const int n = static_cast<int>(v.size());
  if (n == 0) return 0.0;
  const double p0 = extrapolate_to_zero(v);
  double sum = 0.5 * p0 + 0.5 * v[n - 1];
  for (int i = 0; i + 1 < n; ++i) sum += v[i];
  if (n < 8) return dy * sum;
  const double d0 =
      (-25.0 * p0 + 48.0 * v[0] - 36.0 * v[1] + 16.0 * v[2] - 3.0 * v[3]) / (12.0 * dy);
  const double dn =
      (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3] - 16.0 * v[n - 4] + 3.0 * v[n - 5]) /
      (12.0 * dy);
  return dy * sum - dy * dy / 12.0 * (dn - d0);
}

}  // namespace

double integrate(const GridFunction& f) { return integrate_values(f.values(), f.grid().spacing()); }

double integrate(const GridFunction& f, std::span<const double> weight) {
  if (static_cast<int>(weight.size()) != f.n())
    fail(errc::grid_mismatch, "integrate: weight array length does not match the grid");
  std::vector<double> p(f.n());
  for (int i = 0; i < f.n(); ++i) p[i] = f[i] * weight[i];
  return integrate_values(p, f.grid().spacing());
}

double integrate(const GridFunction& f, const std::function<double(double)>& weight) {
  std::vector<double> p(f.n());
  for (int i = 0; i < f.n(); ++i) p[i] = f[i] * weight(f.grid().node(i));
  return integrate_values(p, f.grid().spacing());
}

// ---------------------------------------------------------------------------
// Convolution

namespace {

constexpr double kGregory[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};

// Closed Newton-Cotes weights for the first few nodes, where the end-corrected
// template does not fit.
const std::vector<std::vector<double>>& nc_rows() {
  static const std::vector<std::vector<double>> rows = {
      {},
      {0.5, 0.5},
      {1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0},
      {3.0 / 8.0, 9.0 / 8.0, 9.0 / 8.0, 3.0 / 8.0},
      {14.0 / 45.0, 64.0 / 45.0, 24.0 / 45.0, 64.0 / 45.0, 14.0 / 45.0},
  };
  return rows;
}

std::vector<double> with_phantom(const GridFunction& f) {
  std::vector<double> a(f.n() + 1);
  a[0] = extrapolate_to_zero(f.values());
  std::copy(f.values().begin(), f.values().end(), a.begin() + 1);
  return a;
}

// Assemble the result at node m from the plain prefix sum S_m plus the
// Gregory end corrections (or the small-m Newton-Cotes rules).
GridFunction assemble_convolution(const Grid& grid, const std::vector<double>& a,
                                  const std::vector<double>& b, const std::vector<double>& s) {
  const int n = grid.n();
  const double dy = grid.spacing();
  std::vector<double> r(n);
  for (int m = 1; m <= n; ++m) {
    double val;
    if (m <= 4) {
      const auto& w = nc_rows()[m];
      val = 0.0;
      for (int j = 0; j <= m; ++j) val += w[j] * a[j] * b[m - j];
    } else {
      double corr = 0.0;
      for (int j = 0; j < 3; ++j)
        corr += (kGregory[j] - 1.0) * (a[j] * b[m - j] + a[m - j] * b[j]);
      val = s[m] + corr;
    }
    r[m - 1] = dy * val;
  }
  return GridFunction(grid, std::move(r));
}

}  // namespace

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "convolve");
  const int n = f.n();
  auto a = with_phantom(f);
  std::vector<double> b;
  const bool self = (&f == &g);
  if (!self) b = with_phantom(g);
  const auto& bb = self ? a : b;

  std::vector<double> s;
  if (self) {
    const int m = detail::fft_size_for(2 * (n + 1) - 1);
    std::vector<double> pa(m, 0.0);
    std::copy(a.begin(), a.end(), pa.begin());
    auto sa = detail::fft_forward(pa);
    auto sc = detail::spectrum_product(sa, sa);
    s = detail::fft_backward(sc, m);
    s.resize(n + 1);
  } else {
    s = detail::linear_convolution_prefix(a, bb, n + 1);
  }
  return assemble_convolution(f.grid(), a, bb, s);
}

GridFunction convolve_direct(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "convolve_direct");
  const int n = f.n();
  auto a = with_phantom(f);
  auto b = with_phantom(g);
  std::vector<double> s(n + 1, 0.0);
  for (int m = 0; m <= n; ++m) {
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) acc += a[j] * b[m - j];
    s[m] = acc;
  }
  return assemble_convolution(f.grid(), a, b, s);
}

FixedFactor::FixedFactor(const GridFunction& g) : g_(g) {
  const int n = g.n();
  fft_size_ = detail::fft_size_for(2 * (n + 1) - 1);
  padded_ = with_phantom(g);
  std::vector<double> p(fft_size_, 0.0);
  std::copy(padded_.begin(), padded_.end(), p.begin());
  spectrum_ = detail::fft_forward(p);
}

GridFunction FixedFactor::convolve_with(const GridFunction& f) const {
  require_same_grid(f, g_, "FixedFactor::convolve_with");
  const int n = f.n();
  auto a = with_phantom(f);
  std::vector<double> pa(fft_size_, 0.0);
  std::copy(a.begin(), a.end(), pa.begin());
  auto sa = detail::fft_forward(pa);
  auto sc = detail::spectrum_product(sa, spectrum_);
  auto s = detail::fft_backward(sc, fft_size_);
  s.resize(n + 1);
  return assemble_convolution(f.grid(), a, padded_, s);
}

// ---------------------------------------------------------------------------
// Tail primitive

GridFunction tail_primitive(const GridFunction& h) {
  const int n = h.n();
  const double dy = h.grid().spacing();
  auto v = h.values();
  std::vector<double> H(n, 0.0);
  if (n < 4) {
    for (int i = n - 2; i >= 0; --i) H[i] = H[i + 1] + 0.5 * dy * (v[i] + v[i + 1]);
    return GridFunction(h.grid(), std::move(H));
  }
  // cell integral over [y_{i+1}, y_{i+2}] from the cubic through four nodes
  auto cell = [&](int i) {
    if (i == 0) return dy * (9.0 * v[0] + 19.0 * v[1] - 5.0 * v[2] + v[3]) / 24.0;
    if (i == n - 2)
      return dy * (9.0 * v[n - 1] + 19.0 * v[n - 2] - 5.0 * v[n - 3] + v[n - 4]) / 24.0;
    return dy * (-v[i - 1] + 13.0 * v[i] + 13.0 * v[i + 1] - v[i + 2]) / 24.0;
  };
  for (int i = n - 2; i >= 0; --i) H[i] = H[i + 1] + cell(i);
  return GridFunction(h.grid(), std::move(H));
}

// ---------------------------------------------------------------------------
// Derivatives

std::vector<double> fd_weights(double x0, std::span<const double> x, int m) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = c[j][m];
  return w;
}

namespace {

DerivativeStencil build_stencil(int k) {
  DerivativeStencil s;
  s.order = k;
  s.accuracy = 4;
  s.interior_width = (k % 2 == 1) ? k + 4 : k + 3;
  s.boundary_width = k + 4;
  const int half = s.interior_width / 2;

  std::vector<double> xc(s.interior_width);
  for (int j = 0; j < s.interior_width; ++j) xc[j] = j - half;
  s.interior = fd_weights(0.0, xc, k);

  std::vector<double> xb(s.boundary_width);
  for (int j = 0; j < s.boundary_width; ++j) xb[j] = j;
  for (int r = 0; r < half; ++r) s.left.push_back(fd_weights(r, xb, k));
  for (int r = 0; r < half; ++r)
    s.right.push_back(fd_weights(s.boundary_width - half + r, xb, k));
  return s;
}

}  // namespace

const DerivativeStencil& derivative_stencil(int k) {
  if (k < 1 || k > 4) fail(errc::unsupported_order, "derivative order must be in 1..4");
  static const std::array<DerivativeStencil, 4> tables = {
      build_stencil(1), build_stencil(2), build_stencil(3), build_stencil(4)};
  return tables[k - 1];
}

GridFunction derivative(const GridFunction& h, int k) {
  const DerivativeStencil& st = derivative_stencil(k);
  const int n = h.n();
  const int half = st.interior_width / 2;
  if (n < st.boundary_width + half)
    fail(errc::invalid_argument, "grid too small for the derivative stencil");
  const double dy = h.grid().spacing();
  double scale = 1.0;
  for (int i = 0; i < k; ++i) scale /= dy;
  auto v = h.values();
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    if (i < half) {
      const auto& w = st.left[i];
      for (int j = 0; j < st.boundary_width; ++j) acc += w[j] * v[j];
    } else if (i >= n - half) {
      const auto& w = st.right[i - (n - half)];
      const int base = n - st.boundary_width;
      for (int j = 0; j < st.boundary_width; ++j) acc += w[j] * v[base + j];
    } else {
      for (int j = 0; j < st.interior_width; ++j) acc += st.interior[j] * v[i - half + j];
    }
    d[i] = scale * acc;
  }
  return GridFunction(h.grid(), std::move(d));
}

double sample_linear(const GridFunction& f, double y) {
  const Grid& g = f.grid();
  const double dy = g.spacing();
  if (y >= g.y_max()) {
    // the last node itself still counts; anything beyond is 0 by truncation
    return (y <= g.y_max() * (1.0 + 1e-12)) ? f[g.n() - 1] : 0.0;
  }
  if (y <= 0.0) return extrapolate_to_zero(f.values());
  const double pos = y / dy;  // node i+1 sits at pos = i+1
  const int cell = static_cast<int>(pos);
  const double frac = pos - cell;
  const double lo = (cell == 0) ? extrapolate_to_zero(f.values()) : f[cell - 1];
  const double hi = f[cell];
  return lo + frac * (hi - lo);
}

}  // namespace coag
