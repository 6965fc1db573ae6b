// Command line front end: run, check, mms, bounds.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "dpnp/bounds.hpp"
#include "dpnp/config.hpp"
#include "dpnp/mms.hpp"
#include "dpnp/runner.hpp"

namespace {

std::vector<std::pair<std::size_t, std::size_t>> parse_grids(const std::string& list) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    try {
      if (x == std::string::npos) {
        const auto n = std::stoul(item);
        out.emplace_back(n, n);
      } else {
        out.emplace_back(std::stoul(item.substr(0, x)), std::stoul(item.substr(x + 1)));
      }
    } catch (const std::exception&) {
      throw dpnp::InvalidConfig("bad grid '" + item + "' (use N or NXxNY, comma separated)");
    }
  }
  return out;
}

void print_monitor_tail(const dpnp::RunResult& r) {
  std::cout << "steps " << r.summary.steps << ", sweeps total " << r.summary.sweeps_total << " (max "
            << r.summary.sweeps_max << "), halvings " << r.summary.halvings << ", wall "
            << r.summary.wall_seconds << " s\n";
  if (r.summary.monitor_failures == 0) {
    std::cout << "all monitors pass\n";
  } else {
    std::cout << r.summary.monitor_failures << " monitor report(s) failing; first: " << r.summary.first_failure
              << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Darcy-Poisson-Nernst-Planck finite volume simulator"};
  app.require_subcommand(1);

  std::string config, out_dir, mms_case, grids;
  double horizon = -1.0;

  auto* run = app.add_subcommand("run", "run a configuration and write outputs");
  run->add_option("config", config, "JSON configuration")->required();
  run->add_option("-o,--out", out_dir, "output directory (default: the config's output.directory)");

  auto* check = app.add_subcommand("check", "run and fail on any monitor violation");
  check->add_option("config", config, "JSON configuration")->required();

  auto* mms = app.add_subcommand("mms", "manufactured-solution convergence study");
  mms->add_option("case", mms_case, "poisson | darcy | diffusion | driftdiffusion | coupled")->required();
  mms->add_option("grids", grids, "comma separated grid sizes, e.g. 16,32,64 or 16x8,32x16,64x32")->required();

  auto* bounds = app.add_subcommand("bounds", "print the a-priori bounds ledger");
  bounds->add_option("config", config, "JSON configuration")->required();
  bounds->add_option("-T,--horizon", horizon, "time horizon (default: T_end)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const auto cfg = dpnp::load_config(config);
      const auto res = dpnp::run_to_directory(cfg, out_dir.empty() ? cfg.output.directory : out_dir);
      print_monitor_tail(res);
      return 0;
    }
    if (*check) {
      const auto cfg = dpnp::load_config(config);
      const auto res = dpnp::simulate(cfg);
      print_monitor_tail(res);
      return res.summary.monitor_failures == 0 ? 0 : 3;
    }
    if (*mms) {
      const auto c = dpnp::parse_mms_case(mms_case);
      const auto table = dpnp::run_mms(c, parse_grids(grids), dpnp::default_mms_params(c));
      std::cout << table.text() << '\n' << table.csv();
      return 0;
    }
    if (*bounds) {
      const auto cfg = dpnp::load_config(config);
      const auto ledger = dpnp::ledger_at(cfg, horizon >= 0.0 ? horizon : cfg.time.t_end);
      std::cout << dpnp::ledger_text(ledger) << '\n' << dpnp::ledger_csv(ledger);
      return 0;
    }
  } catch (const dpnp::InvalidConfig& e) {
    std::cerr << "invalid configuration:\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
