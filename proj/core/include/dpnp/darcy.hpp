#pragma once

#include "dpnp/linalg.hpp"
#include "dpnp/mesh.hpp"
#include "dpnp/params.hpp"

namespace dpnp {

/// Zero-mean pressure and divergence-free face normal velocity.
struct FlowState {
  CellField p;
  FaceField q_faces;
  SolveReport report;
};

/// Face-centred electric body force eps^-1 rho_f E on interior faces (zero on
/// boundary faces); rho_f is averaged arithmetically onto the face.
FaceField body_force(const Grid& grid, const PhysParams& params, const CellField& rho_f, const FaceField& e_faces);

/// Relative tolerance on the net boundary inflow accepted by solve_darcy.
inline constexpr double kDarcyCompatTol = 1e-10;

/// Solves K^-1 q = mu^-1 (-grad p + eps^-1 rho_f E), div q = 0, q.n = f, mean(p) = 0.
/// Throws CompatibilityError when the net boundary flux of f does not vanish.
FlowState solve_darcy(const Grid& grid, const PhysParams& params, const CellField& rho_f, const FaceField& e_faces,
                      const BoundaryField& f_bc, const SolveOptions& opts = {});

}  // namespace dpnp
