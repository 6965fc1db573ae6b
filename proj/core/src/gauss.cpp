#include "dpnp/gauss.hpp"

#include <cmath>
#include <sstream>

#include "tpfa.hpp"

namespace dpnp {

ElectroState solve_gauss(const Grid& grid, const PhysParams& params, const CellField& rho_f, const CellField& rho_b,
                         const BoundaryField& sigma, const GaussOptions& opts) {
  if (!(rho_f.grid() == grid) || !(rho_b.grid() == grid)) throw DimensionError("solve_gauss: grid mismatch");
  if (sigma.outward.size() != grid.boundary_faces().size()) throw DimensionError("solve_gauss: sigma size mismatch");
  const std::array<double, 2> eps{params.permittivity(0), params.permittivity(1)};
  if (!(eps[0] > 0.0) || !(eps[1] > 0.0)) throw DomainError("solve_gauss: permittivity must be positive");

  const std::size_t n = grid.num_cells();
  const double vol = grid.cell_volume();

  double charge = 0.0;
  for (std::size_t c = 0; c < n; ++c) charge += (rho_b[c] + rho_f[c]) * vol;
  const double flux = sigma.integral(grid);
  ElectroState out;
  out.compat_shift = (charge - flux) / grid.volume();
  if (std::abs(out.compat_shift) > opts.max_compat_shift) {
    std::ostringstream msg;
    msg << "solve_gauss: charge/sigma incompatibility " << out.compat_shift << " exceeds repair limit";
    throw CompatibilityError(msg.str());
  }

  std::vector<double> b(n);
  for (std::size_t c = 0; c < n; ++c) b[c] = (rho_b[c] - out.compat_shift + rho_f[c]) * vol;
  const auto bfaces = grid.boundary_faces();
  for (std::size_t k = 0; k < bfaces.size(); ++k) {
    b[bfaces[k].cell] -= sigma.outward[k] * grid.face_length(bfaces[k].face);
  }
  detail::project_rhs(b);

  const SparseMatrix a = detail::assemble_tpfa(grid, eps);
  auto sol = detail::solve_neumann(a, b, opts.linear);
  const std::vector<double> w(n, vol);
  out.phi = CellField(rho_f.grid_ptr(), project_zero_mean(sol.x, w));
  out.report = std::move(sol.report);

  out.e_faces = FaceField(rho_f.grid_ptr(), 0.0);
  for (const auto& f : grid.interior_faces()) {
    const int axis = grid.is_x_face(f.face) ? 0 : 1;
    out.e_faces[f.face] = -eps[static_cast<std::size_t>(axis)] * (out.phi[f.plus] - out.phi[f.minus]) /
                          grid.face_spacing(f.face);
  }
  for (std::size_t k = 0; k < bfaces.size(); ++k) out.e_faces[bfaces[k].face] = bfaces[k].outward * sigma.outward[k];
  return out;
}

}  // namespace dpnp
