#include "dpnp/runner.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dpnp/csv.hpp"

namespace dpnp {

ForcingFn make_forcing(const RunConfig& cfg) {
  const BoundarySchedule sched = cfg.schedule();
  const GridPtr g = cfg.grid;
  return [sched, g](double t) { return sched.at(g, t); };
}

BoundsLedger ledger_at(const RunConfig& cfg, double T) {
  const DataNorms n = measure_data_norms(*cfg.grid, cfg.schedule(), cfg.initial_conc(), T);
  return compute_ledger(cfg.params, n, T);
}

RunResult simulate(const RunConfig& cfg, const SimulateOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Grid& g = *cfg.grid;
  const BoundarySchedule sched = cfg.schedule();
  const Concentrations c0 = cfg.initial_conc();
  const ForcingFn forcing = make_forcing(cfg);
  MonitorLimits limits;
  limits.linear_tol = cfg.time.linear_tol;

  AdvanceOptions ao;
  ao.t_end = cfg.time.t_end;
  ao.dt = cfg.time.dt;
  ao.gummel.tol = cfg.time.tol;
  ao.gummel.max_sweeps = cfg.time.max_sweeps;
  ao.gummel.damping = cfg.time.damping;
  ao.gummel.init = opts.init;
  ao.gummel.linear = {cfg.time.linear_tol, 0};

  RunResult out;
  auto record = [&](const MonitorReport& m) {
    if (!m.all_pass()) {
      if (out.summary.monitor_failures++ == 0) {
        out.summary.first_failure = "t=" + format_double(m.time) + ": " + m.failures();
      }
    }
    out.monitors.push_back(m);
  };
  auto observer = [&](const StepRecord& rec, const State& prev) {
    const BoundsLedger b = compute_ledger(cfg.params, measure_data_norms(g, sched, c0, rec.state.time),
                                          rec.state.time);
    record(check_state(g, cfg.params, &b, rec.state, &prev, rec.dt, forcing(rec.state.time), limits));
    ++out.summary.steps;
    out.summary.sweeps_total += rec.report.sweeps;
    out.summary.sweeps_max = std::max(out.summary.sweeps_max, rec.report.sweeps);
    out.summary.halvings = std::max<std::size_t>(out.summary.halvings, static_cast<std::size_t>(rec.halvings));
    if (opts.observer) opts.observer(rec, prev);
  };

  // the initial state is monitored before the first step is taken
  {
    const State s0 = equilibrate(g, cfg.params, c0, forcing(0.0), 0.0, ao.gummel.linear);
    const BoundsLedger b = compute_ledger(cfg.params, measure_data_norms(g, sched, c0, 0.0), 0.0);
    record(check_state(g, cfg.params, &b, s0, nullptr, 0.0, forcing(0.0), limits));
  }
  out.trajectory = advance(g, cfg.params, c0, forcing, ao, observer);
  out.ledger = ledger_at(cfg, cfg.time.t_end);
  out.summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string snapshot_csv(const Grid& grid, const State& s) {
  std::string out = "i,j,x,y,c1,c2,p,phi,rho_f\n";
  for (std::size_t k = 0; k < grid.num_cells(); ++k) {
    out += csv_line({std::to_string(grid.cell_i(k)), std::to_string(grid.cell_j(k)), format_double(grid.cell_x(k)),
                     format_double(grid.cell_y(k)), format_double(s.conc.c1[k]), format_double(s.conc.c2[k]),
                     format_double(s.flow.p[k]), format_double(s.electro.phi[k]), format_double(s.rho_f[k])});
    out += '\n';
  }
  return out;
}

std::string summary_text(const RunSummary& s) {
  std::ostringstream os;
  os << "steps " << s.steps << '\n'
     << "sweeps_total " << s.sweeps_total << '\n'
     << "sweeps_max " << s.sweeps_max << '\n'
     << "sweeps_mean " << format_double(s.steps ? double(s.sweeps_total) / double(s.steps) : 0.0) << '\n'
     << "halvings_max " << s.halvings << '\n'
     << "monitor_failures " << s.monitor_failures << '\n'
     << "first_failure " << (s.first_failure.empty() ? "none" : s.first_failure) << '\n'
     << "wall_seconds " << format_double(s.wall_seconds) << '\n';
  return os.str();
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  f << content;
  if (!f) throw Error("cannot write " + p.string());
}

std::string snapshot_name(std::size_t step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snapshot_%06zu.csv", step);
  return buf;
}

}  // namespace

RunResult run_to_directory(const RunConfig& cfg, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir / snapshot_name(0), snapshot_csv(*cfg.grid,
                                                  equilibrate(*cfg.grid, cfg.params, cfg.initial_conc(),
                                                              make_forcing(cfg)(0.0), 0.0,
                                                              {cfg.time.linear_tol, 0})));
  std::size_t step = 0;
  SimulateOptions opts;
  opts.observer = [&](const StepRecord& rec, const State&) {
    ++step;
    if (step % cfg.output.stride == 0) write_file(dir / snapshot_name(step), snapshot_csv(*cfg.grid, rec.state));
  };
  RunResult res = simulate(cfg, opts);

  std::string mon = monitor_csv_header() + '\n';
  for (const auto& m : res.monitors) mon += monitor_csv_row(m) + '\n';
  write_file(dir / "monitors.csv", mon);
  write_file(dir / "bounds.txt", ledger_text(res.ledger));
  write_file(dir / "bounds.csv", ledger_csv(res.ledger));
  write_file(dir / "summary.txt", summary_text(res.summary));
  return res;
}

}  // namespace dpnp
