#pragma once

#include <array>

#include "dpnp/linalg.hpp"
#include "dpnp/mesh.hpp"
#include "dpnp/params.hpp"

namespace dpnp {

/// Exponential fitting function B(x) = x / (e^x - 1), with B(0) = 1.
double bernoulli(double x);

/// Scharfetter-Gummel flux from the left/lower cell to the right/upper cell:
/// (D/h) (B(-P) cL - B(P) cR) with P = u h / D.
double sg_flux(double d, double h, double u, double cl, double cr);

/// Number densities of the two species. Entries may be negative so that
/// monitors can observe violations.
struct Concentrations {
  CellField c1, c2;
  CellField& operator[](int l) { return l == 0 ? c1 : c2; }
  const CellField& operator[](int l) const { return l == 0 ? c1 : c2; }
};

struct TransportOptions {
  SolveOptions linear;
  /// Cross-species argument of the reaction term; defaults to c_prev.
  const Concentrations* reaction_lag = nullptr;
  /// Initial guess for the linear solves; defaults to c_prev.
  const Concentrations* guess = nullptr;
  /// Additional volumetric sources per species (not scaled by theta).
  const CellField* source1 = nullptr;
  const CellField* source2 = nullptr;
};

struct TransportResult {
  Concentrations conc;
  /// Reaction rate R_l actually applied in each cell: the own species taken
  /// implicitly, the other from the lag.
  std::array<CellField, 2> rate;
  std::array<SolveReport, 2> reports;
};

/// One backward-Euler step of both Nernst-Planck equations.
/// g1, g2 are inflow fluxes: J.n = -g on the boundary.
TransportResult step_transport_full(const Grid& grid, const PhysParams& params, const Concentrations& c_prev,
                                    const FaceField& q_faces, const FaceField& e_faces, const BoundaryField& g1,
                                    const BoundaryField& g2, double dt, const TransportOptions& opts = {});

Concentrations step_transport(const Grid& grid, const PhysParams& params, const Concentrations& c_prev,
                              const FaceField& q_faces, const FaceField& e_faces, const BoundaryField& g1,
                              const BoundaryField& g2, double dt, const TransportOptions& opts = {});

}  // namespace dpnp
