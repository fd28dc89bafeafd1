#include "coagulab/linear.hpp"

#include <cmath>
#include <future>

#include "coagulab/fit.hpp"
#include "coagulab/profiles.hpp"

namespace coag {

LinearOperator::LinearOperator(double rho, const Grid& grid)
    : rho_(rho), profile_(stationary_profile(rho, grid)) {
  if (!(rho > 0.0)) fail(errc::invalid_argument, "linear operator needs rho > 0");
}

GridFunction LinearOperator::apply(const GridFunction& h) const {
  GridFunction H = tail_primitive(h);
  GridFunction conv = profile_.convolve_with(H);
  GridFunction d = derivative(h, 1);
  const Grid& grid = h.grid();
  GridFunction out = GridFunction::zero(grid);
  for (int i = 0; i < h.n(); ++i)
    out[i] = grid.node(i) * d[i] - (4.0 / rho_) * H[i] + (2.0 / rho_) * conv[i];
  return out;
}

GridFunction LinearOperator::apply_primitive(const GridFunction& h) const {
  GridFunction H = tail_primitive(h);
  GridFunction conv = profile_.convolve_with(H);
  const Grid& grid = h.grid();
  GridFunction out = GridFunction::zero(grid);
  for (int i = 0; i < h.n(); ++i) out[i] = -H[i] - grid.node(i) * h[i] + conv[i];
  return out;
}

GridFunction apply_L(const GridFunction& h, double rho) {
  return LinearOperator(rho, h.grid()).apply(h);
}

GridFunction apply_L_primitive(const GridFunction& h, double rho) {
  return LinearOperator(rho, h.grid()).apply_primitive(h);
}

GridFunction apply_L_dfn(const GridFunction& h, double rho) {
  GridFunction g_rho = stationary_profile(rho, h.grid());
  GridFunction c = coag_bilinear(g_rho, h);
  GridFunction d = derivative(h, 1);
  const Grid& grid = h.grid();
  GridFunction out = GridFunction::zero(grid);
  for (int i = 0; i < h.n(); ++i)
    out[i] = 2.0 * h[i] + grid.node(i) * d[i] + 2.0 * c[i];
  return out;
}

namespace {

double mass_functional(const GridFunction& h) {
  return integrate(h, [](double y) { return y; });
}

// subtract the stationary-family mass direction so that int y h = 0 exactly
// in the discrete pairing
GridFunction project_mass_orthogonal(const GridFunction& h, double rho) {
  GridFunction v = mass_direction(rho, h.grid());
  const double denom = mass_functional(v);
  const double num = mass_functional(h);
  return h - (num / denom) * v;
}

}  // namespace

double rayleigh_quotient(const GridFunction& h, double rho, const NormSpec& spec) {
  GridFunction hp = project_mass_orthogonal(h, rho);
  const double nrm = weighted_norm(hp, spec);
  if (!(nrm > 0.0)) fail(errc::invalid_argument, "rayleigh_quotient of a zero function");
  LinearOperator L(rho, h.grid());
  double num;
  if (spec.k == -1) {
    GridFunction H = tail_primitive(hp);
    GridFunction Lp = L.apply_primitive(hp);
    const Grid& grid = h.grid();
    std::vector<double> p(h.n());
    for (int i = 0; i < h.n(); ++i)
      p[i] = H[i] * Lp[i] * std::exp(spec.mu * grid.node(i));
    num = integrate(GridFunction(grid, std::move(p)));
  } else {
    num = weighted_inner(hp, L.apply(hp), spec);
  }
  return num / (nrm * nrm);
}

Trajectory evolve_linear(const GridFunction& h0, double rho, const IntegratorConfig& cfg) {
  const double nrm = l2_norm(h0);
  if (nrm > 0.0 && std::fabs(mass_functional(h0)) > 1e-8 * nrm)
    fail(errc::invalid_argument, "evolve_linear needs a mass-orthogonal initial datum");
  LinearOperator L(rho, h0.grid());

  Trajectory traj;
  traj.frame = Frame::selfsimilar;
  GridFunction state = h0;
  auto record = [&](double t, const GridFunction& s) {
    traj.times.push_back(t);
    traj.states.push_back(s);
    traj.observables["mass_orth"].push_back(mass_functional(s));
  };
  auto post = [](double, GridFunction&) {};
  auto rhs_fn = [&L](const GridFunction& s) { return L.apply(s); };
  rk4_run(state, cfg.dt, cfg.t_end, cfg.snapshot_stride, rhs_fn, post, record);
  return traj;
}

std::vector<GridFunction> gap_corpus(const Grid& grid, double rho, int count, uint64_t seed) {
  std::vector<GridFunction> corpus;
  corpus.reserve(count);
  uint64_t s = seed ? seed : 1;
  // splitmix64: fixed, portable stream
  auto next = [&s]() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  auto u01 = [&]() { return (next() >> 11) * 0x1.0p-53; };

  while (static_cast<int>(corpus.size()) < count) {
    struct Bump {
      double a, c, w;
      int p;
    };
    std::vector<Bump> bumps;
    const int nb = 2 + static_cast<int>(next() % 3);
    for (int i = 0; i < nb; ++i) {
      Bump b;
      b.a = 2.0 * u01() - 1.0;
      b.c = 0.5 + u01() * std::min(8.0, grid.y_max() / 4.0);
      b.w = 0.3 + 1.7 * u01();
      b.p = 1 + static_cast<int>(next() % 2);
      bumps.push_back(b);
    }
    GridFunction h = GridFunction::sample(grid, [&bumps](double y) {
      double v = 0.0;
      for (const auto& b : bumps) {
        const double t = (y - b.c) / b.w;
        v += b.a * std::pow(y, b.p) * std::exp(-0.5 * t * t);
      }
      return v;
    });
    h = project_mass_orthogonal(h, rho);
    if (l2_norm(h) < 1e-6) continue;  // degenerate draw
    corpus.push_back(std::move(h));
  }
  return corpus;
}

std::vector<GapReport> gap_survey(const Grid& grid, double rho,
                                  const std::vector<NormSpec>& specs,
                                  const GapSurveyConfig& cfg) {
  auto corpus = gap_corpus(grid, rho, cfg.corpus_size, cfg.seed);

  struct MemberResult {
    std::vector<double> quotient;  // per spec
    std::vector<double> decay;     // per spec
  };

  auto eval_member = [&](const GridFunction& h0) {
    MemberResult r;
    Trajectory traj = evolve_linear(h0, rho, cfg.integrator);
    for (const auto& spec : specs) {
      r.quotient.push_back(rayleigh_quotient(h0, rho, spec));
      std::vector<double> norms(traj.size());
      for (int i = 0; i < traj.size(); ++i) norms[i] = weighted_norm(traj.states[i], spec);
      RateFit fit = fit_rate(traj.times, norms, cfg.fit_t_lo, cfg.fit_t_hi);
      r.decay.push_back(fit.rate);
    }
    return r;
  };

  std::vector<MemberResult> results(corpus.size());
  if (cfg.jobs > 1) {
    std::vector<std::future<MemberResult>> futs;
    futs.reserve(corpus.size());
    for (const auto& h0 : corpus)
      futs.push_back(std::async(std::launch::async, eval_member, std::cref(h0)));
    for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < corpus.size(); ++i) results[i] = eval_member(corpus[i]);
  }

  std::vector<GapReport> reports;
  for (size_t k = 0; k < specs.size(); ++k) {
    GapReport rep;
    rep.spec = specs[k];
    rep.rho = rho;
    rep.corpus_size = cfg.corpus_size;
    rep.seed = cfg.seed;
    rep.quotient_max = -std::numeric_limits<double>::infinity();
    rep.fitted_decay = std::numeric_limits<double>::infinity();
    for (const auto& r : results) {
      rep.quotient_max = std::max(rep.quotient_max, r.quotient[k]);
      rep.fitted_decay = std::min(rep.fitted_decay, r.decay[k]);
    }
    reports.push_back(rep);
  }
  return reports;
}

WeightGrowthReport weight_growth_along_linear(const GridFunction& h0, double rho, int k,
                                              double mu, double nu,
                                              const IntegratorConfig& cfg) {
  if (!(0.0 < mu && mu < nu)) fail(errc::invalid_argument, "weight growth needs 0 < mu < nu");
  WeightGrowthReport rep;
  rep.mu = mu;
  rep.nu = nu;
  rep.t0 = std::log(nu / mu);
  IntegratorConfig c = cfg;
  c.t_end = rep.t0;
  Trajectory traj = evolve_linear(h0, rho, c);
  NormSpec start{k, mu, NormSpec::Power::standard};
  NormSpec end{k, nu, NormSpec::Power::standard};
  rep.norm_start = weighted_norm(traj.states.front(), start);
  rep.norm_end = weighted_norm(traj.states.back(), end);
  if (rep.norm_start > 0.0 && rep.norm_end > 0.0)
    rep.fitted_exponent = std::log(rep.norm_end / rep.norm_start) / std::log(nu / mu);
  return rep;
}

}  // namespace coag
