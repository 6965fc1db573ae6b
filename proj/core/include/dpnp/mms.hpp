#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dpnp/params.hpp"

namespace dpnp {

enum class MmsCase { Poisson, Darcy, Diffusion, DriftDiffusion, Coupled };

std::string to_string(MmsCase c);
/// Throws InvalidConfig for an unknown name.
MmsCase parse_mms_case(const std::string& name);

struct ConvergenceRow {
  std::size_t nx = 0, ny = 0;
  double h = 0.0;
  std::vector<double> errors;  ///< one per field, discrete L2
  std::vector<double> orders;  ///< empty on the first row
  std::size_t sweeps = 0;      ///< Gummel sweeps (coupled case only)
};

struct ConvergenceTable {
  MmsCase mms_case = MmsCase::Poisson;
  std::vector<std::string> fields;
  std::vector<ConvergenceRow> rows;

  /// Error of `field` on the finest grid.
  double finest_error(const std::string& field) const;
  /// Smallest observed order of `field` over all consecutive pairs.
  double min_order(const std::string& field) const;
  std::string text() const;
  std::string csv() const;
};

/// Parameters used by the verification cases unless overridden.
PhysParams default_mms_params(MmsCase c);

struct MmsOptions {
  double linear_tol = 1e-12;
  double gummel_tol = 1e-11;
  std::size_t max_sweeps = 50;
  /// Final time of the diffusion case, reached with steps of size h^2.
  /// 0 takes a single step, which measures h^2 times the spatial truncation error.
  double diffusion_time = 0.0;
  /// Step of the single implicit step taken by the coupled case.
  double coupled_dt = 0.1;
};

/// Runs `c` on every grid in the doubling sequence `grids` on the unit square.
/// Solver failures are rethrown with the grid size attached.
ConvergenceTable run_mms(MmsCase c, const std::vector<std::pair<std::size_t, std::size_t>>& grids,
                         const PhysParams& params, const MmsOptions& opts = {});

}  // namespace dpnp
