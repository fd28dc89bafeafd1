#pragma once

#include "coagulab/grid.hpp"

namespace coag {

enum class Frame { physical, selfsimilar };

// Coagulation bilinear form
//   C(g,h)(y) = 1/2 (g*h)(y) - 1/2 g(y) int h - 1/2 h(y) int g,
// symmetric in its arguments.
GridFunction coag_bilinear(const GridFunction& g, const GridFunction& h);

// y -> int_y^inf C(g,h) via the compact identity 2 int_y^inf C(g,h) = g*H - H int g.
GridFunction coag_primitive(const GridFunction& g, const GridFunction& h);

// Assembled right-hand side: physical frame C(g,g); self-similar frame
// 2g + y dg/dy + C(g,g).
GridFunction rhs(const GridFunction& state, Frame kind);

struct LeibnizReport {
  double max_discrepancy = 0.0;  // max-norm |lhs - rhs| over the inner nodes
  double scale = 0.0;            // max-norm of lhs over the same nodes
};

// Checks the derivative/convolution exchange identity
//   D^k(y^{k+1}(g*h)) = sum_i binom(k+1,i) (D^{k+1-i}(y^{k+1-i} g)) * (D^{i-1}(y^i h))
//                       + (int h) D^k(y^{k+1} g),
// with the convention D^{-1} p = -P (tail primitive). The last term vanishes
// on int h = 0 inputs. k in {1, 2}. Both sides are evaluated numerically; the
// outermost nodes are skipped (one-sided stencils of the composite products
// dominate there).
LeibnizReport leibniz_convolution_identity_check(const GridFunction& g, const GridFunction& h,
                                                 int k);

}  // namespace coag
