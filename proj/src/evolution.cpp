#include "coagulab/evolution.hpp"

#include <cmath>

#include "coagulab/observables.hpp"

namespace coag {

void rk4_run(GridFunction& state, double dt, double t_end, int stride,
             const std::function<GridFunction(const GridFunction&)>& rhs_fn,
             const std::function<void(double, GridFunction&)>& post_step,
             const std::function<void(double, const GridFunction&)>& record) {
  if (!(dt > 0.0) || !(t_end > 0.0))
    fail(errc::invalid_argument, "integrator needs dt > 0 and t_end > 0");
  if (stride < 1) fail(errc::invalid_argument, "snapshot stride must be positive");
  const long n_steps = std::lround(t_end / dt);
  record(0.0, state);
  double t = 0.0;
  for (long step = 1; step <= n_steps; ++step) {
    try {
      GridFunction k1 = rhs_fn(state);
      GridFunction k2 = rhs_fn(state + (0.5 * dt) * k1);
      GridFunction k3 = rhs_fn(state + (0.5 * dt) * k2);
      GridFunction k4 = rhs_fn(state + dt * k3);
      GridFunction incr = k1 + 2.0 * k2 + 2.0 * k3 + k4;
      state += (dt / 6.0) * incr;
      state.check_finite("solver state");
    } catch (const error& e) {
      if (e.code() == errc::invalid_argument)
        fail(errc::solver_failure,
             "state became non-finite; last valid time t = " + std::to_string(t));
      throw;
    }
    t = step * dt;
    post_step(t, state);
    if (step % stride == 0 || step == n_steps) record(t, state);
  }
}

Trajectory evolve(const GridFunction& g0, Frame kind, const IntegratorConfig& cfg) {
  const double floor_tol = -1e-12 * (1.0 + g0.max_abs());
  if (g0.min() < floor_tol)
    fail(errc::invalid_argument, "evolve needs a nonnegative initial datum");
  const double m0 = moment(g0, 0.0);
  if (!(cfg.dt * (2.0 + m0) < 1.0))
    fail(errc::invalid_argument, "stability heuristic violated: dt*(2 + M0) must be < 1");
  const double rho = moment(g0, 1.0);

  Trajectory traj;
  traj.frame = kind;
  GridFunction state = g0;
  double clipped_total = 0.0;

  auto post = [&](double t, GridFunction& s) {
    // clip undershoots, log how much mass that moved
    double clipped = 0.0;
    const Grid& grid = s.grid();
    bool any = false;
    for (int i = 0; i < s.n(); ++i)
      if (s[i] < 0.0) any = true;
    if (any) {
      std::vector<double> neg(s.n(), 0.0);
      for (int i = 0; i < s.n(); ++i)
        if (s[i] < 0.0) {
          neg[i] = -s[i] * grid.node(i);
          s[i] = 0.0;
        }
      clipped = integrate(GridFunction(grid, std::move(neg)));
    }
    clipped_total += std::fabs(clipped);
    if (clipped_total > 1e-3 * rho)
      fail(errc::solver_failure,
           "clipped mass exceeded 1e-3 of the conserved mass at t = " + std::to_string(t) +
               "; the grid resolution is insufficient");
  };

  auto record = [&](double t, const GridFunction& s) {
    traj.times.push_back(t);
    traj.states.push_back(s);
    traj.observables["mass"].push_back(moment(s, 1.0));
    traj.observables["m0"].push_back(moment(s, 0.0));
    traj.observables["m2"].push_back(moment(s, 2.0));
    traj.observables["clipped_mass"].push_back(clipped_total);
  };

  auto rhs_fn = [kind](const GridFunction& s) { return rhs(s, kind); };
  rk4_run(state, cfg.dt, cfg.t_end, cfg.snapshot_stride, rhs_fn, post, record);
  return traj;
}

std::pair<double, GridFunction> frame_map(double t, const GridFunction& f, FrameDirection dir) {
  if (t < 0.0) fail(errc::invalid_argument, "frame_map needs t >= 0");
  const Grid& grid = f.grid();
  GridFunction out = GridFunction::zero(grid);
  if (dir == FrameDirection::fw) {
    const double scale = 1.0 + t;
    for (int i = 0; i < f.n(); ++i)
      out[i] = scale * scale * sample_linear(f, scale * grid.node(i));
    return {std::log1p(t), out};
  }
  const double e = std::exp(t);
  for (int i = 0; i < f.n(); ++i)
    out[i] = sample_linear(f, grid.node(i) / e) / (e * e);
  return {e - 1.0, out};
}

}  // namespace coag
