#include "dpnp/mms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "dpnp/csv.hpp"
#include "dpnp/darcy.hpp"
#include "dpnp/gauss.hpp"
#include "dpnp/gummel.hpp"
#include "dpnp/transport.hpp"

namespace dpnp {

namespace {

constexpr double kPi = std::numbers::pi;

using Fn = std::function<double(double, double)>;

CellField sample(const GridPtr& g, const Fn& fn) {
  CellField out(g, 0.0);
  for (std::size_t k = 0; k < g->num_cells(); ++k) out[k] = fn(g->cell_x(k), g->cell_y(k));
  return out;
}

/// Outward normal component of a vector field at boundary face midpoints.
BoundaryField sample_normal(const Grid& g, const Fn& vx, const Fn& vy) {
  BoundaryField out;
  for (const auto& b : g.boundary_faces()) {
    const double x = g.face_x(b.face), y = g.face_y(b.face);
    out.outward.push_back(b.outward * (g.is_x_face(b.face) ? vx(x, y) : vy(x, y)));
  }
  return out;
}

/// Reference-direction component at every face midpoint.
FaceField sample_faces(const GridPtr& g, const Fn& vx, const Fn& vy) {
  FaceField out(g, 0.0);
  for (std::size_t f = 0; f < g->num_faces(); ++f) {
    const double x = g->face_x(f), y = g->face_y(f);
    out[f] = g->is_x_face(f) ? vx(x, y) : vy(x, y);
  }
  return out;
}

double l2_error(const CellField& uh, const CellField& u, bool modulo_constant) {
  CellField d = uh;
  for (std::size_t k = 0; k < d.size(); ++k) d[k] -= u[k];
  if (modulo_constant) {
    const double m = volume_integral(d) / d.grid().volume();
    for (auto& v : d.vec()) v -= m;
  }
  return l2_norm(d);
}

/// sqrt(sum_f (a_f - b_f)^2 |f| h_f) over the selected faces.
double face_error(const Grid& g, const FaceField& a, const FaceField& b, bool interior_only) {
  double s = 0.0;
  auto add = [&](std::size_t f) {
    const double d = a[f] - b[f];
    s += d * d * g.face_length(f) * g.face_spacing(f);
  };
  for (const auto& f : g.interior_faces()) add(f.face);
  if (!interior_only) {
    for (const auto& f : g.boundary_faces()) add(f.face);
  }
  return std::sqrt(s);
}

struct CaseResult {
  std::vector<double> errors;
  std::size_t sweeps = 0;
};

CaseResult run_poisson(const GridPtr& g, const PhysParams& p, const MmsOptions& o) {
  const double ex = p.permittivity(0);
  const auto phi = sample(g, [](double x, double) { return x * x - x + 1.0 / 6.0; });
  const CellField rho_b(g, -2.0 * ex);
  const CellField rho_f(g, 0.0);
  const BoundaryField sigma = sample_normal(
      *g, [&](double x, double) { return -ex * (2.0 * x - 1.0); }, [](double, double) { return 0.0; });
  const ElectroState es = solve_gauss(*g, p, rho_f, rho_b, sigma, {{o.linear_tol, 0}});
  const FaceField e = sample_faces(
      g, [&](double x, double) { return -ex * (2.0 * x - 1.0); }, [](double, double) { return 0.0; });
  return {{l2_error(es.phi, phi, true), face_error(*g, es.e_faces, e, false)}, 0};
}

CaseResult run_darcy(const GridPtr& g, const PhysParams& p, const MmsOptions& o) {
  const double kx = p.permeability[0], ky = p.permeability[1], mu = p.mu;
  const Fn pex = [](double x, double y) { return std::cos(kPi * x) * std::cos(kPi * y); };
  const Fn qx = [](double x, double y) { return std::sin(kPi * x) * std::cos(kPi * y); };
  const Fn qy = [](double x, double y) { return -std::cos(kPi * x) * std::sin(kPi * y); };
  // body force b = mu K^-1 q + grad p, carried by rho_f = 1 and E = eps b
  const Fn ex = [&](double x, double y) {
    return p.permittivity(0) * (mu / kx * qx(x, y) - kPi * std::sin(kPi * x) * std::cos(kPi * y));
  };
  const Fn ey = [&](double x, double y) {
    return p.permittivity(1) * (mu / ky * qy(x, y) - kPi * std::cos(kPi * x) * std::sin(kPi * y));
  };
  const CellField rho_f(g, 1.0);
  const FlowState fs = solve_darcy(*g, p, rho_f, sample_faces(g, ex, ey), BoundaryField::zeros(*g),
                                   {o.linear_tol, 0});
  return {{l2_error(fs.p, sample(g, pex), true), face_error(*g, fs.q_faces, sample_faces(g, qx, qy), true)}, 0};
}

CaseResult run_diffusion(const GridPtr& g, const PhysParams& p, const MmsOptions& o) {
  const double dt = g->hx() * g->hx();
  const Fn c0 = [](double x, double y) { return std::cos(kPi * x) * std::cos(kPi * y); };
  const double rate = kPi * kPi * (p.diffusion[0] + p.diffusion[1]) - p.theta;
  const CellField shape = sample(g, c0);
  PhysParams pp = p;
  pp.reaction = ReactionSpec::none();
  const FaceField zero(g, 0.0);
  const auto bz = BoundaryField::zeros(*g);
  Concentrations c{shape, shape};
  CellField exact = shape;
  const auto steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(o.diffusion_time / dt)));
  for (std::size_t n = 1; n <= steps; ++n) {
    const double decay = std::exp(-static_cast<double>(n) * dt);
    for (std::size_t k = 0; k < exact.size(); ++k) exact[k] = shape[k] * decay;
    CellField src = exact;
    for (auto& v : src.vec()) v *= rate;
    TransportOptions to;
    to.linear = {o.linear_tol, 0};
    to.source1 = &src;
    to.source2 = &src;
    c = step_transport(*g, pp, c, zero, zero, bz, bz, dt, to);
  }
  return {{l2_error(c.c1, exact, false), l2_error(c.c2, exact, false)}, 0};
}

CaseResult run_driftdiffusion(const GridPtr& g, const PhysParams& p, const MmsOptions& o) {
  const double u = 2.0, a = 1.0, b = 0.5, d = p.diffusion[0];
  const Fn c = [&](double x, double) { return a + b * std::exp(u * x / d); };
  const CellField exact = sample(g, c);
  FaceField q(g, 0.0);
  for (std::size_t f = 0; f < g->num_x_faces(); ++f) q[f] = u;
  BoundaryField gin = BoundaryField::zeros(*g);
  const auto bf = g->boundary_faces();
  for (std::size_t k = 0; k < bf.size(); ++k) {
    // total flux J = u a is constant; inflow is -J.n
    if (bf[k].side == Side::Left) gin.outward[k] = u * a;
    if (bf[k].side == Side::Right) gin.outward[k] = -u * a;
  }
  PhysParams pp = p;
  pp.reaction = ReactionSpec::none();
  TransportOptions to;
  to.linear = {o.linear_tol, 0};
  // start the solver away from the answer so exactness is not inherited from the guess
  const CellField zero(g, 0.0);
  const Concentrations guess{zero, zero};
  to.guess = &guess;
  const Concentrations res = step_transport(*g, pp, {exact, exact}, q, FaceField(g, 0.0), gin, gin, 1.0, to);
  return {{l2_error(res.c1, exact, false), l2_error(res.c2, exact, false)}, 0};
}

CaseResult run_coupled(const GridPtr& g, const PhysParams& p, const MmsOptions& o) {
  if (p.permeability[0] != p.permeability[1]) {
    throw InvalidConfig("mms coupled: the harmonic pressure needs an isotropic permeability");
  }
  const double amp = 0.5, bphi = 0.5, slope = 0.3;
  const double m = static_cast<double>(p.z1) / std::abs(p.z2);
  const double epsx = p.permittivity(0), epsy = p.permittivity(1);
  const double mob = p.permeability[0] / p.mu;
  const double dx = p.diffusion[0], dy = p.diffusion[1];

  auto C = [](double x) { return std::cos(kPi * x); };
  auto S = [](double x) { return std::sin(kPi * x); };
  const Fn c1 = [&](double x, double y) { return 1.0 + amp * C(x) * C(y); };
  const Fn c1x = [&](double x, double y) { return -amp * kPi * S(x) * C(y); };
  const Fn c1y = [&](double x, double y) { return -amp * kPi * C(x) * S(y); };
  const Fn lap = [&](double x, double y) { return amp * kPi * kPi * (dx + dy) * C(x) * C(y); };  // -div(D grad c1)
  const Fn phi = [&](double x, double y) { return bphi * C(x) * C(y) + slope * (x - 0.5); };
  const Fn ex = [&](double x, double y) { return -epsx * (-bphi * kPi * S(x) * C(y) + slope); };
  const Fn ey = [&](double x, double y) { return -epsy * (-bphi * kPi * C(x) * S(y)); };
  const Fn rho_b = [&](double x, double y) { return bphi * kPi * kPi * (epsx + epsy) * C(x) * C(y); };
  const Fn pex = [](double x, double y) { return x * x - y * y; };
  const Fn qx = [&](double x, double) { return -2.0 * mob * x; };
  const Fn qy = [&](double, double y) { return 2.0 * mob * y; };

  Forcing fc;
  fc.sigma = sample_normal(*g, ex, ey);
  fc.f = sample_normal(*g, qx, qy);
  fc.rho_b = sample(g, rho_b);
  BoundaryField gl[2];
  CellField src[2];
  for (int l = 0; l < 2; ++l) {
    const double w = l == 0 ? 1.0 : m;
    const double kz = p.kappa * p.valency(l);
    const Fn ux = [&, kz](double x, double y) { return qx(x, y) + kz * ex(x, y); };
    const Fn uy = [&, kz](double x, double y) { return qy(x, y) + kz * ey(x, y); };
    // J = -D grad c + c u, source = div J - theta R
    const Fn jx = [&, w, ux](double x, double y) { return w * (-dx * c1x(x, y) + c1(x, y) * ux(x, y)); };
    const Fn jy = [&, w, uy](double x, double y) { return w * (-dy * c1y(x, y) + c1(x, y) * uy(x, y)); };
    const Fn s = [&, w, kz, ux, uy](double x, double y) {
      const double div_j = w * (lap(x, y) + c1x(x, y) * ux(x, y) + c1y(x, y) * uy(x, y) + c1(x, y) * kz * rho_b(x, y));
      const auto r = reaction_rates(p.reaction, c1(x, y), m * c1(x, y));
      return div_j - p.theta * (l == 0 ? r.first : r.second);
    };
    gl[l] = sample_normal(*g, jx, jy);
    for (auto& v : gl[l].outward) v = -v;
    src[l] = sample(g, s);
  }
  fc.g1 = gl[0];
  fc.g2 = gl[1];
  fc.source1 = src[0];
  fc.source2 = src[1];

  const CellField e1 = sample(g, c1);
  CellField e2 = e1;
  for (auto& v : e2.vec()) v *= m;
  const SolveOptions lin{o.linear_tol, 0};
  const State prev = equilibrate(*g, p, {e1, e2}, fc, 0.0, lin);
  GummelOptions go;
  go.tol = o.gummel_tol;
  go.max_sweeps = o.max_sweeps;
  go.linear = lin;
  const auto [st, rep] = gummel_step(*g, p, prev, fc, o.coupled_dt, go);
  return {{l2_error(st.conc.c1, e1, false), l2_error(st.conc.c2, e2, false), l2_error(st.electro.phi, sample(g, phi), true),
           l2_error(st.flow.p, sample(g, pex), true)},
          rep.sweeps};
}

std::vector<std::string> field_names(MmsCase c) {
  switch (c) {
    case MmsCase::Poisson: return {"phi", "E"};
    case MmsCase::Darcy: return {"p", "q"};
    case MmsCase::Diffusion:
    case MmsCase::DriftDiffusion: return {"c1", "c2"};
    case MmsCase::Coupled: return {"c1", "c2", "phi", "p"};
  }
  return {};
}

}  // namespace

std::string to_string(MmsCase c) {
  switch (c) {
    case MmsCase::Poisson: return "poisson";
    case MmsCase::Darcy: return "darcy";
    case MmsCase::Diffusion: return "diffusion";
    case MmsCase::DriftDiffusion: return "driftdiffusion";
    case MmsCase::Coupled: return "coupled";
  }
  return "?";
}

MmsCase parse_mms_case(const std::string& name) {
  for (auto c : {MmsCase::Poisson, MmsCase::Darcy, MmsCase::Diffusion, MmsCase::DriftDiffusion, MmsCase::Coupled}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidConfig("unknown mms case '" + name + "' (poisson, darcy, diffusion, driftdiffusion, coupled)");
}

PhysParams default_mms_params(MmsCase c) {
  PhysParams p;
  p.diffusion = {1.0, 0.5};
  p.permeability = {2.0, 0.5};
  if (c == MmsCase::Coupled) {
    p.permeability = {1.0, 1.0};
    p.z1 = 2;
    p.z2 = -1;
  }
  return p;
}

double ConvergenceTable::finest_error(const std::string& field) const {
  const auto it = std::find(fields.begin(), fields.end(), field);
  if (it == fields.end() || rows.empty()) throw DomainError("ConvergenceTable: no field '" + field + "'");
  return rows.back().errors[static_cast<std::size_t>(it - fields.begin())];
}

double ConvergenceTable::min_order(const std::string& field) const {
  const auto it = std::find(fields.begin(), fields.end(), field);
  if (it == fields.end()) throw DomainError("ConvergenceTable: no field '" + field + "'");
  const auto k = static_cast<std::size_t>(it - fields.begin());
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    if (!r.orders.empty()) lo = std::min(lo, r.orders[k]);
  }
  return lo;
}

std::string ConvergenceTable::text() const {
  std::ostringstream os;
  os << "case " << to_string(mms_case) << '\n' << std::setw(6) << "nx" << std::setw(6) << "ny";
  for (const auto& f : fields) os << std::setw(16) << ("err_" + f) << std::setw(10) << ("ord_" + f);
  if (mms_case == MmsCase::Coupled) os << std::setw(8) << "sweeps";
  os << '\n';
  for (const auto& r : rows) {
    os << std::setw(6) << r.nx << std::setw(6) << r.ny;
    for (std::size_t k = 0; k < fields.size(); ++k) {
      os << std::setw(16) << std::scientific << std::setprecision(6) << r.errors[k];
      if (r.orders.empty()) {
        os << std::setw(10) << "-";
      } else {
        os << std::setw(10) << std::fixed << std::setprecision(3) << r.orders[k];
      }
    }
    if (mms_case == MmsCase::Coupled) os << std::setw(8) << r.sweeps;
    os << '\n';
  }
  return os.str();
}

std::string ConvergenceTable::csv() const {
  std::vector<std::string> head{"nx", "ny", "h"};
  for (const auto& f : fields) {
    head.push_back("err_" + f);
    head.push_back("order_" + f);
  }
  head.emplace_back("sweeps");
  std::string out = csv_line(head) + '\n';
  for (const auto& r : rows) {
    std::vector<std::string> cells{std::to_string(r.nx), std::to_string(r.ny), format_double(r.h)};
    for (std::size_t k = 0; k < fields.size(); ++k) {
      cells.push_back(format_double(r.errors[k]));
      cells.push_back(r.orders.empty() ? "" : format_double(r.orders[k]));
    }
    cells.push_back(std::to_string(r.sweeps));
    out += csv_line(cells) + '\n';
  }
  return out;
}

ConvergenceTable run_mms(MmsCase c, const std::vector<std::pair<std::size_t, std::size_t>>& grids,
                         const PhysParams& params, const MmsOptions& opts) {
  if (grids.size() < 3) throw InvalidConfig("run_mms: at least three grids are required");
  for (std::size_t k = 1; k < grids.size(); ++k) {
    if (grids[k].first != 2 * grids[k - 1].first || grids[k].second != 2 * grids[k - 1].second) {
      throw InvalidConfig("run_mms: grids must form a doubling sequence");
    }
  }
  params.validate();
  ConvergenceTable t;
  t.mms_case = c;
  t.fields = field_names(c);
  for (const auto& [nx, ny] : grids) {
    const GridPtr g = build_grid(nx, ny, 1.0, 1.0);
    CaseResult res;
    try {
      switch (c) {
        case MmsCase::Poisson: res = run_poisson(g, params, opts); break;
        case MmsCase::Darcy: res = run_darcy(g, params, opts); break;
        case MmsCase::Diffusion: res = run_diffusion(g, params, opts); break;
        case MmsCase::DriftDiffusion: res = run_driftdiffusion(g, params, opts); break;
        case MmsCase::Coupled: res = run_coupled(g, params, opts); break;
      }
    } catch (const Error& e) {
      throw Error("mms " + to_string(c) + " on " + std::to_string(nx) + "x" + std::to_string(ny) + ": " + e.what());
    }
    ConvergenceRow row;
    row.nx = nx;
    row.ny = ny;
    row.h = g->hx();
    row.errors = std::move(res.errors);
    row.sweeps = res.sweeps;
    if (!t.rows.empty()) {
      const auto& prev = t.rows.back();
      for (std::size_t k = 0; k < row.errors.size(); ++k) {
        row.orders.push_back(std::log(prev.errors[k] / row.errors[k]) / std::log(prev.h / row.h));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace dpnp
