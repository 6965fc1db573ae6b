#include "dpnp/darcy.hpp"

#include <cmath>
#include <sstream>

#include "tpfa.hpp"

namespace dpnp {

FaceField body_force(const Grid& grid, const PhysParams& params, const CellField& rho_f, const FaceField& e_faces) {
  FaceField out(rho_f.grid_ptr(), 0.0);
  for (const auto& f : grid.interior_faces()) {
    const int axis = grid.is_x_face(f.face) ? 0 : 1;
    const double rho = 0.5 * (rho_f[f.minus] + rho_f[f.plus]);
    out[f.face] = rho * e_faces[f.face] / params.permittivity(axis);
  }
  return out;
}

FlowState solve_darcy(const Grid& grid, const PhysParams& params, const CellField& rho_f, const FaceField& e_faces,
                      const BoundaryField& f_bc, const SolveOptions& opts) {
  if (!(rho_f.grid() == grid) || !(e_faces.grid() == grid)) throw DimensionError("solve_darcy: grid mismatch");
  const auto bfaces = grid.boundary_faces();
  if (f_bc.outward.size() != bfaces.size()) throw DimensionError("solve_darcy: f size mismatch");

  double net = 0.0, gross = 0.0;
  for (std::size_t k = 0; k < bfaces.size(); ++k) {
    const double len = grid.face_length(bfaces[k].face);
    net += f_bc.outward[k] * len;
    gross += std::abs(f_bc.outward[k]) * len;
  }
  if (std::abs(net) > kDarcyCompatTol * gross) {
    std::ostringstream msg;
    msg << "solve_darcy: incompressibility compatibility violated, net boundary outflow " << net;
    throw CompatibilityError(msg.str());
  }

  const std::array<double, 2> mob{params.permeability[0] / params.mu, params.permeability[1] / params.mu};
  const FaceField force = body_force(grid, params, rho_f, e_faces);
  const std::size_t n = grid.num_cells();

  std::vector<double> b(n, 0.0);
  for (const auto& f : grid.interior_faces()) {
    const double flow = mob[grid.is_x_face(f.face) ? 0 : 1] * force[f.face] * grid.face_length(f.face);
    b[f.minus] -= flow;
    b[f.plus] += flow;
  }
  for (std::size_t k = 0; k < bfaces.size(); ++k) b[bfaces[k].cell] -= f_bc.outward[k] * grid.face_length(bfaces[k].face);
  detail::project_rhs(b);

  const SparseMatrix a = detail::assemble_tpfa(grid, mob);
  auto sol = detail::solve_neumann(a, b, opts);
  FlowState out;
  out.p = CellField(rho_f.grid_ptr(), project_zero_mean(sol.x, std::vector<double>(n, grid.cell_volume())));
  out.report = std::move(sol.report);

  out.q_faces = FaceField(rho_f.grid_ptr(), 0.0);
  for (const auto& f : grid.interior_faces()) {
    const std::size_t axis = grid.is_x_face(f.face) ? 0 : 1;
    out.q_faces[f.face] = mob[axis] * (-(out.p[f.plus] - out.p[f.minus]) / grid.face_spacing(f.face) + force[f.face]);
  }
  for (std::size_t k = 0; k < bfaces.size(); ++k) out.q_faces[bfaces[k].face] = bfaces[k].outward * f_bc.outward[k];
  return out;
}

}  // namespace dpnp
