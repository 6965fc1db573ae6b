#pragma once

#include <functional>
#include <vector>

#include "dpnp/boundary.hpp"
#include "dpnp/darcy.hpp"
#include "dpnp/gauss.hpp"
#include "dpnp/transport.hpp"

namespace dpnp {

/// Full solution at one time level. `electro` and `flow` are built from the
/// free charge of `conc`.
struct State {
  double time = 0.0;
  ElectroState electro;
  FlowState flow;
  Concentrations conc;
  CellField rho_f;
  /// Reaction rates applied by the transport solve that produced `conc`
  /// (zero for the initial state).
  std::array<CellField, 2> rate;
};

struct GummelReport {
  std::size_t sweeps = 0;
  /// Weighted L2 norm of each sweep's concentration update.
  std::vector<double> residuals;
  bool converged = false;
};

class GummelNonConvergence : public Error {
 public:
  GummelNonConvergence(const std::string& what, GummelReport report) : Error(what), report_(std::move(report)) {}
  const GummelReport& report() const noexcept { return report_; }

 private:
  GummelReport report_;
};

enum class InitialIterate { Previous, Zero };

struct GummelOptions {
  double tol = 1e-9;
  std::size_t max_sweeps = 50;
  double damping = 1.0;
  InitialIterate init = InitialIterate::Previous;
  SolveOptions linear;
};

/// theta (z1 c1 + z2 c2) per cell.
CellField free_charge(const PhysParams& params, const Concentrations& conc);

/// sqrt(sum_l |z_l| sum_K (a_l - b_l)^2 |K|)
double weighted_distance(const PhysParams& params, const Concentrations& a, const Concentrations& b);

/// Electrostatics and flow driven by the free charge of `conc`; returns a
/// State with `conc` attached and zero reaction rates.
State equilibrate(const Grid& grid, const PhysParams& params, const Concentrations& conc, const Forcing& forcing,
                  double time, const SolveOptions& linear = {});

/// One fixed-point sweep: Gauss and Darcy with the charge of `iterate`, then
/// transport from `prev` with the reaction lag taken from `iterate`.
TransportResult gummel_sweep(const Grid& grid, const PhysParams& params, const Concentrations& prev,
                             const Concentrations& iterate, const Forcing& forcing, double dt,
                             const SolveOptions& linear = {});

/// Advances `prev` by dt. Throws GummelNonConvergence after max_sweeps.
std::pair<State, GummelReport> gummel_step(const Grid& grid, const PhysParams& params, const State& prev,
                                           const Forcing& forcing, double dt, const GummelOptions& opts = {});

using ForcingFn = std::function<Forcing(double)>;

struct AdvanceOptions {
  double t_end = 0.0;
  double dt = 0.0;
  GummelOptions gummel;
  int max_halvings = 10;
};

struct StepRecord {
  State state;
  GummelReport report;
  double dt = 0.0;     ///< size of this accepted (sub)step
  int halvings = 0;    ///< times the nominal dt was halved to reach it
};

struct AdvanceResult {
  State initial;
  std::vector<StepRecord> steps;
};

/// Called after every accepted step with the step and the state it started from.
using StepObserver = std::function<void(const StepRecord&, const State& prev)>;

/// Marches from t = 0 to t_end. A step that fails to converge is retried
/// with halved substeps; each accepted substep is emitted as its own record.
AdvanceResult advance(const Grid& grid, const PhysParams& params, const Concentrations& initial,
                      const ForcingFn& forcing, const AdvanceOptions& opts, const StepObserver& observer = {});

}  // namespace dpnp
