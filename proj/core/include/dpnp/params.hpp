#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace dpnp {

struct ReactionSpec {
  enum class Kind { None, Exchange };
  Kind kind = Kind::None;
  double rate = 0.0;  ///< k >= 0, also the Lipschitz constant used by the bounds

  static ReactionSpec none() { return {}; }
  static ReactionSpec exchange(double k) { return {Kind::Exchange, k}; }
};

/// Clamped exchange kinetics: r1 = k(max(c2,0) - max(c1,0)), r2 = -r1.
std::pair<double, double> reaction_rates(const ReactionSpec& spec, double c1, double c2);

/// Physical coefficients. Tensors are diagonal and given as (x, y) entries.
/// The permittivity tensor is eps_s * D.
struct PhysParams {
  double theta = 1.0;
  std::array<double, 2> diffusion{1.0, 1.0};
  std::array<double, 2> permeability{1.0, 1.0};
  double mu = 1.0;
  double eps_s = 1.0;
  /// e / (eps_s k_B T); species l drifts with kappa * z_l * E.
  double kappa = 1.0;
  int z1 = 1;
  int z2 = -1;
  ReactionSpec reaction;

  double permittivity(int axis) const { return eps_s * diffusion[static_cast<std::size_t>(axis)]; }
  int valency(int species) const { return species == 0 ? z1 : z2; }
  int max_abs_valency() const;

  /// Every violated invariant, named after the assumption it encodes.
  std::vector<std::string> violations() const;
  /// Throws InvalidConfig listing all violations.
  void validate() const;
};

}  // namespace dpnp
