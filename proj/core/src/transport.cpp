#include "dpnp/transport.hpp"

#include <algorithm>
#include <cmath>

namespace dpnp {

double bernoulli(double x) {
  if (std::abs(x) < 1e-12) return 1.0 - 0.5 * x;
  if (x > 0.0) return x * std::exp(-x) / -std::expm1(-x);
  return x / std::expm1(x);
}

double sg_flux(double d, double h, double u, double cl, double cr) {
  const double p = u * h / d;
  return d / h * (bernoulli(-p) * cl - bernoulli(p) * cr);
}

namespace {

struct SpeciesInput {
  int species;
  const CellField& prev;
  const CellField& lag;
  const CellField* guess;
  const CellField* source;
  const BoundaryField& g;
};

void solve_species(const Grid& grid, const PhysParams& params, const FaceField& q_faces, const FaceField& e_faces,
                   double dt, const SpeciesInput& in, const SolveOptions& linear, TransportResult& out) {
  const std::size_t n = grid.num_cells();
  const double vol = grid.cell_volume();
  const double z = params.valency(in.species);
  const double k = params.reaction.kind == ReactionSpec::Kind::Exchange ? params.reaction.rate : 0.0;
  const double mass = params.theta * vol / dt;

  TripletBuilder tb(n, n);
  tb.reserve(4 * grid.interior_faces().size() + n);
  std::vector<double> b(n);
  for (std::size_t c = 0; c < n; ++c) {
    tb.add(c, c, mass + params.theta * k * vol);
    b[c] = mass * in.prev[c] + params.theta * k * std::max(in.lag[c], 0.0) * vol;
    if (in.source) b[c] += (*in.source)[c] * vol;
  }
  for (const auto& f : grid.interior_faces()) {
    const std::size_t axis = grid.is_x_face(f.face) ? 0 : 1;
    const double d = params.diffusion[axis];
    const double h = grid.face_spacing(f.face);
    const double u = q_faces[f.face] + params.kappa * z * e_faces[f.face];
    const double p = u * h / d;
    const double t = d / h * grid.face_length(f.face);
    const double bm = bernoulli(-p), bp = bernoulli(p);
    tb.add(f.minus, f.minus, t * bm);
    tb.add(f.minus, f.plus, -t * bp);
    tb.add(f.plus, f.plus, t * bp);
    tb.add(f.plus, f.minus, -t * bm);
  }
  const auto bfaces = grid.boundary_faces();
  for (std::size_t i = 0; i < bfaces.size(); ++i) b[bfaces[i].cell] += in.g.outward[i] * grid.face_length(bfaces[i].face);

  const SparseMatrix a = tb.build();
  const auto& x0 = in.guess ? in.guess->vec() : in.prev.vec();
  auto sol = solve_nonsym(a, b, linear, x0);

  CellField rate(in.prev.grid_ptr(), 0.0);
  if (k > 0.0) {
    for (std::size_t c = 0; c < n; ++c) rate[c] = k * (std::max(in.lag[c], 0.0) - sol.x[c]);
  }
  const auto l = static_cast<std::size_t>(in.species);
  out.conc[in.species] = CellField(in.prev.grid_ptr(), std::move(sol.x));
  out.rate[l] = std::move(rate);
  out.reports[l] = std::move(sol.report);
}

}  // namespace

TransportResult step_transport_full(const Grid& grid, const PhysParams& params, const Concentrations& c_prev,
                                    const FaceField& q_faces, const FaceField& e_faces, const BoundaryField& g1,
                                    const BoundaryField& g2, double dt, const TransportOptions& opts) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("step_transport: dt must be positive");
  if (!(c_prev.c1.grid() == grid) || !(c_prev.c2.grid() == grid) || !(q_faces.grid() == grid) ||
      !(e_faces.grid() == grid)) {
    throw DimensionError("step_transport: grid mismatch");
  }
  const std::size_t nb = grid.boundary_faces().size();
  if (g1.outward.size() != nb || g2.outward.size() != nb) throw DimensionError("step_transport: g size mismatch");

  const Concentrations& lag = opts.reaction_lag ? *opts.reaction_lag : c_prev;
  TransportResult out;
  solve_species(grid, params, q_faces, e_faces, dt,
                {0, c_prev.c1, lag.c2, opts.guess ? &opts.guess->c1 : nullptr, opts.source1, g1}, opts.linear, out);
  solve_species(grid, params, q_faces, e_faces, dt,
                {1, c_prev.c2, lag.c1, opts.guess ? &opts.guess->c2 : nullptr, opts.source2, g2}, opts.linear, out);
  return out;
}

Concentrations step_transport(const Grid& grid, const PhysParams& params, const Concentrations& c_prev,
                              const FaceField& q_faces, const FaceField& e_faces, const BoundaryField& g1,
                              const BoundaryField& g2, double dt, const TransportOptions& opts) {
  return step_transport_full(grid, params, c_prev, q_faces, e_faces, g1, g2, dt, opts).conc;
}

}  // namespace dpnp
