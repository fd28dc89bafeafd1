#include <cmath>
#include <random>

#include "coagulab/grid.hpp"
#include "doctest.h"

using namespace coag;

namespace {

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// random smooth decaying test function: a few Gaussian bumps
GridFunction random_smooth(const Grid& g, std::mt19937_64& rng) {
  struct Bump {
    double a, c, w;
    int p;
  };
  std::vector<Bump> bumps;
  const int nb = 2 + static_cast<int>(rng() % 3);
  for (int i = 0; i < nb; ++i) {
    Bump b;
    b.a = 2.0 * uniform01(rng) - 1.0;
    b.c = 0.5 + 6.0 * uniform01(rng);
    b.w = 0.4 + 1.6 * uniform01(rng);
    b.p = static_cast<int>(rng() % 3);
    bumps.push_back(b);
  }
  return GridFunction::sample(g, [bumps](double y) {
    double v = 0.0;
    for (const auto& b : bumps) {
      double t = (y - b.c) / b.w;
      v += b.a * std::pow(y, b.p) * std::exp(-0.5 * t * t);
    }
    return v;
  });
}

}  // namespace

TEST_CASE("quadrature: constant integrand is exact") {
  Grid g(1000, 10.0);
  auto f = GridFunction::sample(g, [](double) { return 1.0; });
  CHECK(integrate(f) == doctest::Approx(10.0).epsilon(0.0).scale(1.0).epsilon(1e-12));
  CHECK(std::fabs(integrate(f) - 10.0) < 1e-9);
}

TEST_CASE("quadrature: exponential integrands at stated resolution") {
  Grid g(4000, 40.0);
  auto f = GridFunction::sample(g, [](double y) { return std::exp(-y); });
  CHECK(std::fabs(integrate(f) - 1.0) < 1e-6);
  auto h = GridFunction::sample(g, [](double y) { return y * std::exp(-y); });
  CHECK(std::fabs(integrate(h) - 1.0) < 1e-6);
}

TEST_CASE("quadrature: linearity") {
  Grid g(512, 20.0);
  std::mt19937_64 rng(7);
  auto f = random_smooth(g, rng);
  auto h = random_smooth(g, rng);
  const double a = 1.7, b = -0.3;
  GridFunction combo = a * f + b * h;
  CHECK(std::fabs(integrate(combo) - (a * integrate(f) + b * integrate(h))) < 1e-12);
}

TEST_CASE("quadrature: halving the spacing cuts the error by 8x or better") {
  auto err = [](int n) {
    Grid g(n, 40.0);
    auto f = GridFunction::sample(g, [](double y) { return y * std::exp(-y); });
    return std::fabs(integrate(f) - 1.0);
  };
  const double e1 = err(500), e2 = err(1000), e3 = err(2000);
  CHECK(e1 / e2 >= 8.0);
  CHECK(e2 / e3 >= 8.0);
  // observed order
  const double order = std::log2(e1 / e2);
  CHECK(order >= 1.9);
}

TEST_CASE("quadrature: weight array must match the grid") {
  Grid g(64, 8.0);
  auto f = GridFunction::sample(g, [](double y) { return std::exp(-y); });
  std::vector<double> w(63, 1.0);
  CHECK_THROWS_AS(integrate(f, w), error);
}

TEST_CASE("grid functions on different grids do not interoperate") {
  Grid a(64, 8.0), b(64, 9.0);
  auto fa = GridFunction::zero(a);
  auto fb = GridFunction::zero(b);
  CHECK_THROWS_AS(convolve(fa, fb), error);
  CHECK_THROWS_AS(fa += fb, error);
}

TEST_CASE("non-finite values are rejected") {
  Grid g(16, 4.0);
  std::vector<double> v(16, 0.0);
  v[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(GridFunction(g, v), error);
}

TEST_CASE("convolution: exp(-y) with itself gives y exp(-y)") {
  Grid g(4096, 40.0);
  auto f = GridFunction::sample(g, [](double y) { return std::exp(-y); });
  auto c = convolve(f, f);
  double worst = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    const double y = g.node(i);
    if (y > 20.0) break;
    worst = std::max(worst, std::fabs(c[i] - y * std::exp(-y)));
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("convolution: symmetric in its arguments") {
  Grid g(256, 16.0);
  std::mt19937_64 rng(11);
  auto f = random_smooth(g, rng);
  auto h = random_smooth(g, rng);
  auto a = convolve(f, h);
  auto b = convolve(h, f);
  double worst = 0.0;
  for (int i = 0; i < g.n(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  CHECK(worst < 1e-12);
}

TEST_CASE("convolution: fast transform equals the direct double sum") {
  for (int n : {128, 256, 512}) {
    Grid g(n, 16.0);
    std::mt19937_64 rng(1000 + n);
    auto f = random_smooth(g, rng);
    auto h = random_smooth(g, rng);
    auto fast = convolve(f, h);
    auto direct = convolve_direct(f, h);
    double worst = 0.0, scale = 0.0;
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::fabs(fast[i] - direct[i]));
      scale = std::max(scale, std::fabs(direct[i]));
    }
    CHECK(worst <= 1e-10 * scale);
  }
}

TEST_CASE("convolution: interior unit-mass spike shifts exactly") {
  Grid g(512, 16.0);
  const double dy = g.spacing();
  std::mt19937_64 rng(3);
  auto h = random_smooth(g, rng);
  // spike at node 4 (weight exactly dy in the corrected rule)
  auto spike = GridFunction::zero(g);
  const int j0 = 3;
  spike[j0] = 1.0 / dy;
  auto c = convolve(spike, h);
  double worst = 0.0;
  for (int i = j0 + 6; i < g.n() - 1; ++i)
    worst = std::max(worst, std::fabs(c[i] - h[i - j0 - 1]));
  CHECK(worst < 1e-10 * (1.0 + h.max_abs()));

  // at the first node the spike sits inside the endpoint-correction zone, so
  // the identity is only approximate; it must stay bounded and local
  auto spike1 = GridFunction::zero(g);
  spike1[0] = 1.0 / dy;
  auto c1 = convolve(spike1, h);
  CHECK(c1.max_abs() < 4.0 * h.max_abs());
}

TEST_CASE("convolution: bilinear in each argument") {
  Grid g(200, 12.0);
  std::mt19937_64 rng(5);
  auto f1 = random_smooth(g, rng);
  auto f2 = random_smooth(g, rng);
  auto h = random_smooth(g, rng);
  auto lhs = convolve(2.5 * f1 - 0.5 * f2, h);
  auto rhs = 2.5 * convolve(f1, h) - 0.5 * convolve(f2, h);
  double worst = 0.0;
  for (int i = 0; i < g.n(); ++i) worst = std::max(worst, std::fabs(lhs[i] - rhs[i]));
  CHECK(worst < 1e-11);
}

TEST_CASE("tail primitive: exponential") {
  Grid g(4000, 40.0);
  auto h = GridFunction::sample(g, [](double y) { return std::exp(-y); });
  auto H = tail_primitive(h);
  double worst = 0.0;
  for (int i = 0; i < g.n(); ++i)
    worst = std::max(worst, std::fabs(H[i] - std::exp(-g.node(i))));
  CHECK(worst < 1e-6 + std::exp(-40.0));
  CHECK(H[g.n() - 1] == 0.0);
}

TEST_CASE("tail primitive: zero function") {
  Grid g(128, 8.0);
  auto H = tail_primitive(GridFunction::zero(g));
  CHECK(H.max_abs() == 0.0);
}

TEST_CASE("derivative: exact on polynomials up to the stencil accuracy") {
  Grid g(64, 4.0);
  auto h = GridFunction::sample(g, [](double y) { return y * y; });
  auto d = derivative(h, 1);
  double worst = 0.0;
  for (int i = 0; i < g.n(); ++i) worst = std::max(worst, std::fabs(d[i] - 2.0 * g.node(i)));
  CHECK(worst < 1e-10);

  auto q = GridFunction::sample(g, [](double y) { return std::pow(y, 4); });
  auto d2 = derivative(q, 2);
  double worst2 = 0.0;
  for (int i = 0; i < g.n(); ++i)
    worst2 = std::max(worst2, std::fabs(d2[i] - 12.0 * g.node(i) * g.node(i)));
  CHECK(worst2 < 1e-8);
}

TEST_CASE("derivative: 4th-order error on exp(-y)") {
  auto err = [](int n) {
    Grid g(n, 40.0);
    auto h = GridFunction::sample(g, [](double y) { return std::exp(-y); });
    auto d = derivative(h, 2);
    double worst = 0.0;
    for (int i = 0; i < g.n(); ++i)
      worst = std::max(worst, std::fabs(d[i] - std::exp(-g.node(i))));
    return worst;
  };
  Grid g(4000, 40.0);
  const double dy4 = std::pow(g.spacing(), 4);
  CHECK(err(4000) < 20.0 * dy4);
  // refinement order
  CHECK(err(1000) / err(2000) > 12.0);
}

TEST_CASE("derivative of the tail primitive recovers -h") {
  Grid g(2048, 40.0);
  auto h = GridFunction::sample(g, [](double y) { return (1.0 + y) * std::exp(-y); });
  auto d = derivative(tail_primitive(h), 1);
  double worst = 0.0;
  for (int i = 0; i < g.n(); ++i) worst = std::max(worst, std::fabs(d[i] + h[i]));
  CHECK(worst < 1e-6);
}

TEST_CASE("derivative: unsupported order is rejected") {
  Grid g(64, 4.0);
  auto h = GridFunction::zero(g);
  CHECK_THROWS_AS(derivative(h, 5), error);
  CHECK_THROWS_AS(derivative(h, 0), error);
}

TEST_CASE("fd_weights: classic central first-derivative row") {
  std::vector<double> x = {-2, -1, 0, 1, 2};
  auto w = fd_weights(0.0, x, 1);
  CHECK(w[0] == doctest::Approx(1.0 / 12.0));
  CHECK(w[1] == doctest::Approx(-8.0 / 12.0));
  CHECK(w[2] == doctest::Approx(0.0));
  CHECK(w[3] == doctest::Approx(8.0 / 12.0));
  CHECK(w[4] == doctest::Approx(-1.0 / 12.0));
}

TEST_CASE("sample_linear: interpolation and truncation") {
  Grid g(100, 10.0);
  auto f = GridFunction::sample(g, [](double y) { return 3.0 * y; });
  CHECK(sample_linear(f, 5.05) == doctest::Approx(15.15));
  CHECK(sample_linear(f, 20.0) == 0.0);
  CHECK(sample_linear(f, 0.0) == doctest::Approx(0.0).epsilon(1e-9));
}
