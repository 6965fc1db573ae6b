#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dpnp/bounds.hpp"
#include "dpnp/config.hpp"
#include "dpnp/gummel.hpp"
#include "dpnp/monitors.hpp"

namespace dpnp {

struct RunSummary {
  std::size_t steps = 0;
  std::size_t sweeps_total = 0;
  std::size_t sweeps_max = 0;
  std::size_t halvings = 0;
  std::size_t monitor_failures = 0;  ///< reports with at least one failing check
  std::string first_failure;
  double wall_seconds = 0.0;
};

struct RunResult {
  AdvanceResult trajectory;
  std::vector<MonitorReport> monitors;  ///< initial state first, then one per accepted step
  BoundsLedger ledger;                  ///< at T_end
  RunSummary summary;
};

struct SimulateOptions {
  InitialIterate init = InitialIterate::Previous;
  /// Called after each accepted step; may be used to stream output.
  StepObserver observer;
};

/// Forcing at time t for the configured schedule.
ForcingFn make_forcing(const RunConfig& cfg);

/// Bounds ledger for the configured data over [0, T].
BoundsLedger ledger_at(const RunConfig& cfg, double T);

/// Runs the configured simulation and evaluates every monitor. No files are written.
RunResult simulate(const RunConfig& cfg, const SimulateOptions& opts = {});

/// simulate() plus snapshots, monitors.csv, bounds.txt and summary.txt in
/// cfg.output.directory (created if missing).
RunResult run_to_directory(const RunConfig& cfg, const std::filesystem::path& dir);

/// One row per cell: i,j,x,y,c1,c2,p,phi,rho_f.
std::string snapshot_csv(const Grid& grid, const State& s);

std::string summary_text(const RunSummary& s);

}  // namespace dpnp
