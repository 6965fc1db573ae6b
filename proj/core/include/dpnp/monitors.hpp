#pragma once

#include <array>
#include <optional>
#include <string>

#include "dpnp/gummel.hpp"

namespace dpnp {

struct BoundsLedger;

/// (a - b)(a^p - b^p), nonnegative for a, b, p >= 0.
double algebraic_inequality(double a, double b, double p);

/// Pointwise tolerance for quantities that must be nonnegative.
inline constexpr double kSignFuzz = 1e-12;

/// Volume-weighted sum of (z1 c1 - |z2| c2)((z1 c1)^2 - (|z2| c2)^2).
/// Throws InvariantViolation naming the first cell whose summand is below
/// -kSignFuzz when all concentrations are >= -kSignFuzz.
double sign_condition(const PhysParams& params, const Concentrations& conc);

/// sum_l |z_l| sum_K c_l^2 |K|
double weighted_energy(const PhysParams& params, const Concentrations& conc);

/// Which free charge the Gauss residual was measured against: the state's
/// own (converged) or a lagged one from an intermediate sweep.
enum class ChargeCase { Converged, Lagged };

struct BoundCheck {
  double value = 0.0;
  double bound = 0.0;
  double margin = 0.0;  ///< bound - value
  bool pass = true;     ///< value <= bound up to a relative rounding allowance of 1e-12
};

/// Thresholds applied when turning residuals into flags.
struct MonitorLimits {
  double linear_tol = 1e-10;
  double mass_tol = 1e-10;
  double divergence_factor = 10.0;
};

struct MonitorReport {
  double time = 0.0;
  std::array<double, 2> min_c{};
  std::array<double, 2> max_c{};
  std::array<std::size_t, 2> argmin_c{};
  double weighted_energy = 0.0;
  double sign_condition = 0.0;
  double sign_condition_min_summand = 0.0;
  /// Relative mass-balance residual per species (0 without a previous state).
  std::array<double, 2> mass_residual{};
  double gauss_residual = 0.0;  ///< relative to the charge scale
  double darcy_residual = 0.0;  ///< relative to the velocity scale
  ChargeCase charge_case = ChargeCase::Converged;
  BoundCheck energy;            ///< weighted energy vs C0_hat^2
  BoundCheck linf;              ///< sum_l max|c_l| vs C_M

  bool nonnegative = true;
  bool sign_ok = true;
  bool mass_ok = true;
  bool gauss_ok = true;
  bool darcy_ok = true;

  bool all_pass() const {
    return nonnegative && sign_ok && mass_ok && gauss_ok && darcy_ok && energy.pass && linf.pass;
  }
  /// Names of the failing checks, comma separated.
  std::string failures() const;
};

/// Relative residual of theta sum (c - c_prev)|K| = dt (sum g |f| + theta sum R |K| + sum s |K|).
double mass_balance_residual(const Grid& grid, const PhysParams& params, const CellField& c, const CellField& c_prev,
                             const CellField& rate, const BoundaryField& g, const CellField* source, double dt);

/// max_K |div E - rho|_K / charge scale, where the scale is the largest cellwise
/// |rho| + sum_f |E_f| |f| / |K|.
double gauss_residual(const Grid& grid, const ElectroState& electro, const CellField& rho);

/// max_K |div q|_K / velocity scale, the scale built from face velocities and
/// body-force contributions in the same way as the charge scale.
double darcy_residual(const Grid& grid, const PhysParams& params, const FlowState& flow, const CellField& rho_f,
                      const FaceField& e_faces);

/// Evaluates every monitor on `state`. `prev` enables the mass balance;
/// `lagged_rho_f` switches the Gauss residual to an intermediate-sweep check.
MonitorReport check_state(const Grid& grid, const PhysParams& params, const BoundsLedger* bounds,
                          const State& state, const State* prev, double dt, const Forcing& forcing,
                          const MonitorLimits& limits = {}, const CellField* lagged_rho_f = nullptr);

/// CSV header and row matching MonitorReport.
std::string monitor_csv_header();
std::string monitor_csv_row(const MonitorReport& r);

}  // namespace dpnp
