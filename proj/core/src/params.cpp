#include "dpnp/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "dpnp/errors.hpp"

namespace dpnp {

std::pair<double, double> reaction_rates(const ReactionSpec& spec, double c1, double c2) {
  if (spec.kind == ReactionSpec::Kind::None) return {0.0, 0.0};
  const double r1 = spec.rate * (std::max(c2, 0.0) - std::max(c1, 0.0));
  return {r1, -r1};
}

int PhysParams::max_abs_valency() const { return std::max(std::abs(z1), std::abs(z2)); }

std::vector<std::string> PhysParams::violations() const {
  std::vector<std::string> v;
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!(z1 > 0 && z2 < 0)) v.emplace_back("valency sign: valencies must satisfy z1 > 0 > z2");
  if (!positive(theta)) v.emplace_back("positive coefficients: porosity theta must be > 0");
  if (!positive(mu)) v.emplace_back("positive coefficients: viscosity mu must be > 0");
  if (!positive(eps_s)) v.emplace_back("positive coefficients: permittivity eps_s must be > 0");
  if (!positive(diffusion[0]) || !positive(diffusion[1]))
    v.emplace_back("ellipticity: diffusion tensor entries must be > 0");
  if (!positive(permeability[0]) || !positive(permeability[1]))
    v.emplace_back("ellipticity: permeability tensor entries must be > 0");
  if (!std::isfinite(kappa) || kappa < 0.0) v.emplace_back("drift coefficient: kappa must be finite and >= 0");
  if (!std::isfinite(reaction.rate) || reaction.rate < 0.0)
    v.emplace_back("reaction kinetics: rate k must be finite and >= 0");
  return v;
}

void PhysParams::validate() const {
  auto v = violations();
  if (!v.empty()) throw InvalidConfig(std::move(v));
}

}  // namespace dpnp
