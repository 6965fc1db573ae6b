#include "dpnp/gummel.hpp"

#include <cmath>
#include <sstream>

namespace dpnp {

CellField free_charge(const PhysParams& params, const Concentrations& conc) {
  CellField rho(conc.c1.grid_ptr(), 0.0);
  for (std::size_t k = 0; k < rho.size(); ++k) {
    rho[k] = params.theta * (params.z1 * conc.c1[k] + params.z2 * conc.c2[k]);
  }
  return rho;
}

double weighted_distance(const PhysParams& params, const Concentrations& a, const Concentrations& b) {
  const double vol = a.c1.grid().cell_volume();
  double s = 0.0;
  for (int l = 0; l < 2; ++l) {
    double sl = 0.0;
    for (std::size_t k = 0; k < a[l].size(); ++k) {
      const double d = a[l][k] - b[l][k];
      sl += d * d;
    }
    s += std::abs(params.valency(l)) * sl * vol;
  }
  return std::sqrt(s);
}

State equilibrate(const Grid& grid, const PhysParams& params, const Concentrations& conc, const Forcing& forcing,
                  double time, const SolveOptions& linear) {
  State s;
  s.time = time;
  s.conc = conc;
  s.rho_f = free_charge(params, conc);
  s.electro = solve_gauss(grid, params, s.rho_f, forcing.rho_b, forcing.sigma, {linear});
  s.flow = solve_darcy(grid, params, s.rho_f, s.electro.e_faces, forcing.f, linear);
  s.rate = {CellField(conc.c1.grid_ptr(), 0.0), CellField(conc.c1.grid_ptr(), 0.0)};
  return s;
}

TransportResult gummel_sweep(const Grid& grid, const PhysParams& params, const Concentrations& prev,
                             const Concentrations& iterate, const Forcing& forcing, double dt,
                             const SolveOptions& linear) {
  const CellField rho = free_charge(params, iterate);
  const ElectroState el = solve_gauss(grid, params, rho, forcing.rho_b, forcing.sigma, {linear});
  const FlowState fl = solve_darcy(grid, params, rho, el.e_faces, forcing.f, linear);
  TransportOptions to;
  to.linear = linear;
  to.reaction_lag = &iterate;
  to.guess = &iterate;
  to.source1 = forcing.source1 ? &*forcing.source1 : nullptr;
  to.source2 = forcing.source2 ? &*forcing.source2 : nullptr;
  return step_transport_full(grid, params, prev, fl.q_faces, el.e_faces, forcing.g1, forcing.g2, dt, to);
}

std::pair<State, GummelReport> gummel_step(const Grid& grid, const PhysParams& params, const State& prev,
                                           const Forcing& forcing, double dt, const GummelOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("gummel_step: tol must be positive");
  if (!(opts.damping > 0.0 && opts.damping <= 1.0)) throw DomainError("gummel_step: damping must lie in (0, 1]");

  Concentrations iter = prev.conc;
  if (opts.init == InitialIterate::Zero) {
    iter.c1 = CellField(prev.conc.c1.grid_ptr(), 0.0);
    iter.c2 = CellField(prev.conc.c2.grid_ptr(), 0.0);
  }
  GummelReport rep;
  while (rep.sweeps < opts.max_sweeps) {
    TransportResult tr = gummel_sweep(grid, params, prev.conc, iter, forcing, dt, opts.linear);
    ++rep.sweeps;
    const double res = weighted_distance(params, tr.conc, iter);
    rep.residuals.push_back(res);
    if (!std::isfinite(res)) break;
    if (res <= opts.tol) {
      rep.converged = true;
      State s = equilibrate(grid, params, tr.conc, forcing, prev.time + dt, opts.linear);
      s.rate = std::move(tr.rate);
      return {std::move(s), std::move(rep)};
    }
    const double lam = opts.damping;
    for (int l = 0; l < 2; ++l) {
      for (std::size_t k = 0; k < iter[l].size(); ++k) iter[l][k] = lam * tr.conc[l][k] + (1.0 - lam) * iter[l][k];
    }
  }
  std::ostringstream msg;
  msg << "gummel_step: no convergence after " << rep.sweeps << " sweeps at t = " << prev.time + dt
      << ", last residual " << (rep.residuals.empty() ? 0.0 : rep.residuals.back());
  throw GummelNonConvergence(msg.str(), std::move(rep));
}

AdvanceResult advance(const Grid& grid, const PhysParams& params, const Concentrations& initial,
                      const ForcingFn& forcing, const AdvanceOptions& opts, const StepObserver& observer) {
  if (!(opts.dt > 0.0) || !std::isfinite(opts.dt)) throw InvalidConfig("advance: dt must be positive");
  if (!(opts.t_end >= 0.0) || !std::isfinite(opts.t_end)) throw InvalidConfig("advance: t_end must be >= 0");

  AdvanceResult out;
  out.initial = equilibrate(grid, params, initial, forcing(0.0), 0.0, opts.gummel.linear);
  const auto nsteps = static_cast<std::size_t>(std::ceil(opts.t_end / opts.dt - 1e-9));

  State cur = out.initial;
  for (std::size_t n = 1; n <= nsteps; ++n) {
    const double target = n == nsteps ? opts.t_end : static_cast<double>(n) * opts.dt;
    int halvings = 0;
    double sub = target - cur.time;
    while (cur.time < target) {
      const bool last = sub >= target - cur.time - 1e-12 * target;
      const double h = last ? target - cur.time : sub;
      const double t_new = last ? target : cur.time + h;
      try {
        auto [state, rep] = gummel_step(grid, params, cur, forcing(t_new), h, opts.gummel);
        state.time = t_new;
        StepRecord rec{std::move(state), std::move(rep), h, halvings};
        if (observer) observer(rec, cur);
        cur = rec.state;
        out.steps.push_back(std::move(rec));
      } catch (const GummelNonConvergence&) {
        if (++halvings > opts.max_halvings) throw;
        sub = h / 2.0;
      } catch (const NonConvergence&) {
        if (++halvings > opts.max_halvings) throw;
        sub = h / 2.0;
      }
    }
  }
  return out;
}

}  // namespace dpnp
