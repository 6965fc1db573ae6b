#pragma once

#include <limits>

#include "dpnp/linalg.hpp"
#include "dpnp/mesh.hpp"
#include "dpnp/params.hpp"

namespace dpnp {

/// Electrostatic potential (zero mean) and the face normal component of
/// E = -eps grad(phi).
struct ElectroState {
  CellField phi;
  FaceField e_faces;
  /// Uniform amount subtracted from rho_b to make the data compatible with sigma.
  double compat_shift = 0.0;
  SolveReport report;
};

struct GaussOptions {
  SolveOptions linear;
  /// Largest |compat_shift| accepted before a CompatibilityError is raised.
  double max_compat_shift = std::numeric_limits<double>::infinity();
};

/// Solves div E = rho_b + rho_f, E = -eps grad(phi), E.n = sigma, mean(phi) = 0.
ElectroState solve_gauss(const Grid& grid, const PhysParams& params, const CellField& rho_f, const CellField& rho_b,
                         const BoundaryField& sigma, const GaussOptions& opts = {});

}  // namespace dpnp
