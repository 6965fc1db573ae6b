#include "dpnp/monitors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dpnp/bounds.hpp"
#include "dpnp/csv.hpp"
#include "dpnp/darcy.hpp"

namespace dpnp {

double algebraic_inequality(double a, double b, double p) {
  if (!(a >= 0.0) || !(b >= 0.0) || !(p >= 0.0)) throw DomainError("algebraic_inequality: arguments must be >= 0");
  return (a - b) * (std::pow(a, p) - std::pow(b, p));
}

namespace {

double summand(const PhysParams& params, double c1, double c2) {
  const double a = params.z1 * c1;
  const double b = std::abs(params.z2) * c2;
  return (a - b) * (a * a - b * b);
}

bool all_above(const Concentrations& conc, double floor) {
  for (int l = 0; l < 2; ++l) {
    for (double v : conc[l].values()) {
      if (!(v >= floor)) return false;
    }
  }
  return true;
}

double sign_condition_impl(const PhysParams& params, const Concentrations& conc, bool strict, double* min_summand) {
  const Grid& g = conc.c1.grid();
  double sum = 0.0, lo = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < g.num_cells(); ++k) {
    const double s = summand(params, conc.c1[k], conc.c2[k]);
    if (strict && s < -kSignFuzz) {
      std::ostringstream msg;
      msg << "sign condition violated in cell " << k << " (i=" << g.cell_i(k) << ", j=" << g.cell_j(k)
          << "): summand " << s;
      throw InvariantViolation(msg.str());
    }
    lo = std::min(lo, s);
    sum += s * g.cell_volume();
  }
  if (min_summand) *min_summand = g.num_cells() ? lo : 0.0;
  return sum;
}

// Largest cellwise |a_K| + sum_f |flux_f| |f| / |K|.
double cell_scale(const Grid& g, const std::vector<double>& face_mag, const CellField* source) {
  std::vector<double> s(g.num_cells(), 0.0);
  for (const auto& f : g.interior_faces()) {
    const double m = face_mag[f.face] * g.face_length(f.face);
    s[f.minus] += m;
    s[f.plus] += m;
  }
  for (const auto& b : g.boundary_faces()) s[b.cell] += face_mag[b.face] * g.face_length(b.face);
  double out = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    out = std::max(out, s[k] / g.cell_volume() + (source ? std::abs((*source)[k]) : 0.0));
  }
  return out;
}

double relative(double value, double scale) { return scale > 0.0 ? value / scale : value; }

BoundCheck bound_check(double value, double bound) {
  BoundCheck b;
  b.value = value;
  b.bound = bound;
  b.margin = bound - value;
  // at t = 0 the energy bound equals the initial energy, so allow rounding
  b.pass = std::isfinite(value) && value <= bound + 1e-12 * std::abs(bound);
  return b;
}

}  // namespace

double sign_condition(const PhysParams& params, const Concentrations& conc) {
  return sign_condition_impl(params, conc, all_above(conc, -kSignFuzz), nullptr);
}

double weighted_energy(const PhysParams& params, const Concentrations& conc) {
  double e = 0.0;
  for (int l = 0; l < 2; ++l) {
    double s = 0.0;
    for (double v : conc[l].values()) s += v * v;
    e += std::abs(params.valency(l)) * s * conc[l].grid().cell_volume();
  }
  return e;
}

double mass_balance_residual(const Grid& grid, const PhysParams& params, const CellField& c, const CellField& c_prev,
                             const CellField& rate, const BoundaryField& g, const CellField* source, double dt) {
  const double vol = grid.cell_volume();
  double storage = 0.0, react = 0.0, src = 0.0, scale_c = 0.0, scale_r = 0.0, scale_s = 0.0;
  for (std::size_t k = 0; k < grid.num_cells(); ++k) {
    storage += (c[k] - c_prev[k]) * vol;
    scale_c += (std::abs(c[k]) + std::abs(c_prev[k])) * vol;
    const double r = rate.size() ? rate[k] : 0.0;
    react += r * vol;
    scale_r += std::abs(r) * vol;
    if (source) {
      src += (*source)[k] * vol;
      scale_s += std::abs((*source)[k]) * vol;
    }
  }
  double inflow = 0.0, scale_g = 0.0;
  const auto bf = grid.boundary_faces();
  for (std::size_t k = 0; k < bf.size(); ++k) {
    inflow += g.outward[k] * grid.face_length(bf[k].face);
    scale_g += std::abs(g.outward[k]) * grid.face_length(bf[k].face);
  }
  const double th = params.theta;
  const double res = std::abs(th * storage - dt * (inflow + th * react + src));
  const double scale = std::max({th * scale_c, dt * scale_g, dt * th * scale_r, dt * scale_s});
  return relative(res, scale);
}

double gauss_residual(const Grid& grid, const ElectroState& electro, const CellField& rho) {
  const CellField div = cell_divergence(grid, electro.e_faces);
  double res = 0.0;
  for (std::size_t k = 0; k < grid.num_cells(); ++k) {
    res = std::max(res, std::abs(div[k] - (rho[k] - electro.compat_shift)));
  }
  std::vector<double> mag(electro.e_faces.size());
  for (std::size_t f = 0; f < mag.size(); ++f) mag[f] = std::abs(electro.e_faces[f]);
  CellField shifted = rho;
  for (auto& v : shifted.vec()) v -= electro.compat_shift;
  return relative(res, cell_scale(grid, mag, &shifted));
}

double darcy_residual(const Grid& grid, const PhysParams& params, const FlowState& flow, const CellField& rho_f,
                      const FaceField& e_faces) {
  const CellField div = cell_divergence(grid, flow.q_faces);
  const double res = max_abs(div.values());
  const FaceField force = body_force(grid, params, rho_f, e_faces);
  std::vector<double> mag(flow.q_faces.size());
  for (std::size_t f = 0; f < mag.size(); ++f) {
    const std::size_t axis = grid.is_x_face(f) ? 0 : 1;
    mag[f] = std::abs(flow.q_faces[f]) + params.permeability[axis] / params.mu * std::abs(force[f]);
  }
  return relative(res, cell_scale(grid, mag, nullptr));
}

MonitorReport check_state(const Grid& grid, const PhysParams& params, const BoundsLedger* bounds,
                          const State& state, const State* prev, double dt, const Forcing& forcing,
                          const MonitorLimits& limits, const CellField* lagged_rho_f) {
  MonitorReport r;
  r.time = state.time;
  double linf_sum = 0.0;
  for (int l = 0; l < 2; ++l) {
    const auto v = state.conc[l].values();
    const auto mn = std::min_element(v.begin(), v.end());
    const auto mx = std::max_element(v.begin(), v.end());
    const auto li = static_cast<std::size_t>(l);
    r.min_c[li] = v.empty() ? 0.0 : *mn;
    r.max_c[li] = v.empty() ? 0.0 : *mx;
    r.argmin_c[li] = v.empty() ? 0 : static_cast<std::size_t>(mn - v.begin());
    linf_sum += max_abs(v);
    if (r.min_c[li] < -kSignFuzz) r.nonnegative = false;
  }
  r.weighted_energy = weighted_energy(params, state.conc);
  r.sign_condition = sign_condition_impl(params, state.conc, false, &r.sign_condition_min_summand);
  r.sign_ok = r.nonnegative && r.sign_condition_min_summand >= -kSignFuzz;

  if (prev) {
    for (int l = 0; l < 2; ++l) {
      const CellField* src = l == 0 ? (forcing.source1 ? &*forcing.source1 : nullptr)
                                    : (forcing.source2 ? &*forcing.source2 : nullptr);
      const auto li = static_cast<std::size_t>(l);
      r.mass_residual[li] = mass_balance_residual(grid, params, state.conc[l], prev->conc[l], state.rate[li],
                                                  forcing.g(l), src, dt);
      if (!(r.mass_residual[li] <= limits.mass_tol)) r.mass_ok = false;
    }
  }

  CellField rho = forcing.rho_b;
  const CellField& rho_f = lagged_rho_f ? *lagged_rho_f : state.rho_f;
  for (std::size_t k = 0; k < rho.size(); ++k) rho[k] += rho_f[k];
  r.charge_case = lagged_rho_f ? ChargeCase::Lagged : ChargeCase::Converged;
  r.gauss_residual = gauss_residual(grid, state.electro, rho);
  r.darcy_residual = darcy_residual(grid, params, state.flow, state.rho_f, state.electro.e_faces);
  const double div_tol = limits.divergence_factor * limits.linear_tol;
  r.gauss_ok = r.gauss_residual <= div_tol;
  r.darcy_ok = r.darcy_residual <= div_tol;

  if (bounds) {
    r.energy = bound_check(r.weighted_energy, bounds->C0_hat * bounds->C0_hat);
    r.linf = bound_check(linf_sum, bounds->CM);
  } else {
    r.energy = bound_check(r.weighted_energy, std::numeric_limits<double>::infinity());
    r.linf = bound_check(linf_sum, std::numeric_limits<double>::infinity());
  }
  return r;
}

std::string MonitorReport::failures() const {
  std::vector<std::string> f;
  if (!nonnegative) f.emplace_back("nonnegativity");
  if (!sign_ok) f.emplace_back("sign_condition");
  if (!mass_ok) f.emplace_back("mass_balance");
  if (!gauss_ok) f.emplace_back("gauss_residual");
  if (!darcy_ok) f.emplace_back("darcy_divergence");
  if (!energy.pass) f.emplace_back("energy_bound");
  if (!linf.pass) f.emplace_back("linf_bound");
  return csv_line(f);
}

std::string monitor_csv_header() {
  return "time,min_c1,min_c2,argmin_c1,argmin_c2,max_c1,max_c2,weighted_energy,sign_condition,"
         "sign_min_summand,mass_residual_1,mass_residual_2,gauss_residual,darcy_residual,charge_case,"
         "energy_bound,energy_margin,energy_pass,linf_sum,linf_bound,linf_margin,linf_pass,all_pass";
}

std::string monitor_csv_row(const MonitorReport& r) {
  auto b = [](bool v) { return std::string(v ? "1" : "0"); };
  return csv_line({format_double(r.time), format_double(r.min_c[0]), format_double(r.min_c[1]),
                   std::to_string(r.argmin_c[0]), std::to_string(r.argmin_c[1]), format_double(r.max_c[0]),
                   format_double(r.max_c[1]), format_double(r.weighted_energy), format_double(r.sign_condition),
                   format_double(r.sign_condition_min_summand), format_double(r.mass_residual[0]),
                   format_double(r.mass_residual[1]), format_double(r.gauss_residual),
                   format_double(r.darcy_residual), r.charge_case == ChargeCase::Converged ? "case1" : "case2",
                   format_double(r.energy.bound), format_double(r.energy.margin), b(r.energy.pass),
                   format_double(r.linf.value), format_double(r.linf.bound), format_double(r.linf.margin),
                   b(r.linf.pass), b(r.all_pass())});
}

}  // namespace dpnp
