#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coagulab/coagulation.hpp"
#include "coagulab/grid.hpp"
#include "coagulab/profiles.hpp"

namespace coag {

struct IntegratorConfig {
  double dt = 1e-3;
  double t_end = 5.0;
  int snapshot_stride = 10;  // record every this many steps
  // scheme: classical RK4, fixed step
};

// Time-ordered snapshots plus per-snapshot observables.
struct Trajectory {
  Frame frame = Frame::selfsimilar;
  std::vector<double> times;
  std::vector<GridFunction> states;
  std::map<std::string, std::vector<double>> observables;

  int size() const { return static_cast<int>(times.size()); }
};

// RK4 evolution of the nonlinear equation in the chosen frame. Negative
// undershoots are clipped to zero after every step; the accumulated clipped
// mass is logged and must stay under 1e-3 of the conserved mass. Observables
// logged per snapshot: mass, m0, m2, clipped_mass.
Trajectory evolve(const GridFunction& g0, Frame kind, const IntegratorConfig& cfg);

// Generic fixed-step RK4 driver used by evolve and by the linear runs.
// `post_step` may mutate the state in place (clipping); `record` is called at
// the recording times including t = 0 and the final step.
void rk4_run(GridFunction& state, double dt, double t_end, int stride,
             const std::function<GridFunction(const GridFunction&)>& rhs_fn,
             const std::function<void(double, GridFunction&)>& post_step,
             const std::function<void(double, const GridFunction&)>& record);

// Map one trajectory point between frames:
//   fw: physical (t, f)      -> self-similar (log(1+t), (1+t)^2 f(., (1+t) y))
//   bw: self-similar (t, g)  -> physical (e^t - 1, e^{-2t} g(., e^{-t} y))
// Resampled on the same grid by linear interpolation; arguments beyond y_max
// evaluate to 0.
std::pair<double, GridFunction> frame_map(double t, const GridFunction& f, FrameDirection dir);

}  // namespace coag
