#pragma once

#include <array>
#include <optional>

#include "dpnp/mesh.hpp"

namespace dpnp {

/// Time scaling applied to piecewise-constant boundary data.
struct Ramp {
  enum class Kind { None, Linear };
  Kind kind = Kind::None;
  double duration = 1.0;  ///< Linear: factor min(t / duration, 1)

  double factor(double t) const;
  /// max of factor over [0, t]
  double sup(double t) const;
  /// integral of factor^2 over [0, t]
  double integral_sq(double t) const;
};

/// One constant outward-normal value per side of the rectangle.
struct SideValues {
  double left = 0.0, right = 0.0, bottom = 0.0, top = 0.0;
  Ramp ramp;

  double at(Side s) const;
  BoundaryField evaluate(const Grid& g, double t) const;
  /// Net outflow per unit time factor: sum of value * side length.
  double net(const Grid& g) const;
  double max_abs() const;
  /// sum of value^2 * side length
  double l2_sq(const Grid& g) const;
};

/// Everything the coupled step needs at the new time level.
struct Forcing {
  BoundaryField sigma;  ///< E.n on the boundary
  BoundaryField f;      ///< q.n on the boundary
  BoundaryField g1;     ///< inflow flux of species 1
  BoundaryField g2;     ///< inflow flux of species 2
  CellField rho_b;      ///< background charge density
  /// Extra volumetric sources for the transport equations (zero when absent).
  std::optional<CellField> source1, source2;

  static Forcing zeros(const GridPtr& g);
  const BoundaryField& g(int species) const { return species == 0 ? g1 : g2; }
};

/// Piecewise-constant, optionally ramped boundary data plus a fixed
/// background charge: the data model of the run configuration.
struct BoundarySchedule {
  SideValues sigma, f, g1, g2;
  CellField rho_b;

  Forcing at(const GridPtr& g, double t) const;
};

}  // namespace dpnp
