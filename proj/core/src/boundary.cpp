#include "dpnp/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace dpnp {

double Ramp::factor(double t) const {
  if (kind == Kind::None) return 1.0;
  return std::clamp(t / duration, 0.0, 1.0);
}

double Ramp::sup(double t) const { return factor(std::max(t, 0.0)); }

double Ramp::integral_sq(double t) const {
  if (t <= 0.0) return 0.0;
  if (kind == Kind::None) return t;
  const double s = std::min(t, duration);
  return s * s * s / (3.0 * duration * duration) + std::max(0.0, t - duration);
}

double SideValues::at(Side s) const {
  switch (s) {
    case Side::Left: return left;
    case Side::Right: return right;
    case Side::Bottom: return bottom;
    case Side::Top: return top;
  }
  return 0.0;
}

BoundaryField SideValues::evaluate(const Grid& g, double t) const {
  const double k = ramp.factor(t);
  BoundaryField out;
  out.outward.reserve(g.boundary_faces().size());
  for (const auto& b : g.boundary_faces()) out.outward.push_back(k * at(b.side));
  return out;
}

double SideValues::net(const Grid& g) const { return (left + right) * g.ly() + (bottom + top) * g.lx(); }

double SideValues::max_abs() const {
  return std::max({std::abs(left), std::abs(right), std::abs(bottom), std::abs(top)});
}

double SideValues::l2_sq(const Grid& g) const {
  return (left * left + right * right) * g.ly() + (bottom * bottom + top * top) * g.lx();
}

Forcing Forcing::zeros(const GridPtr& g) {
  Forcing out;
  out.sigma = out.f = out.g1 = out.g2 = BoundaryField::zeros(*g);
  out.rho_b = CellField(g, 0.0);
  return out;
}

Forcing BoundarySchedule::at(const GridPtr& g, double t) const {
  Forcing out;
  out.sigma = sigma.evaluate(*g, t);
  out.f = f.evaluate(*g, t);
  out.g1 = g1.evaluate(*g, t);
  out.g2 = g2.evaluate(*g, t);
  out.rho_b = rho_b.size() ? rho_b : CellField(g, 0.0);
  return out;
}

}  // namespace dpnp
