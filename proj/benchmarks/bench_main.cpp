#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "dpnp/gummel.hpp"
#include "dpnp/mms.hpp"
#include "dpnp/monitors.hpp"

using namespace dpnp;

namespace {

CellField bump(const GridPtr& g, double base, double amp) {
  CellField c(g, base);
  for (std::size_t k = 0; k < g->num_cells(); ++k) {
    const double x = g->cell_x(k) - 0.4, y = g->cell_y(k) - 0.5;
    c[k] += amp * std::exp(-(x * x + y * y) / 0.02);
  }
  return c;
}

SparseMatrix laplacian(std::size_t n) {
  const auto g = build_grid(n, n, 1.0, 1.0);
  TripletBuilder tb(g->num_cells(), g->num_cells());
  for (std::size_t c = 0; c < g->num_cells(); ++c) tb.add(c, c, 1e-3);
  for (const auto& f : g->interior_faces()) {
    tb.add(f.minus, f.minus, 1.0);
    tb.add(f.plus, f.plus, 1.0);
    tb.add(f.minus, f.plus, -1.0);
    tb.add(f.plus, f.minus, -1.0);
  }
  return tb.build();
}

PhysParams coupled_params() {
  PhysParams p;
  p.z1 = 2;
  p.z2 = -1;
  p.kappa = 1.0;
  p.reaction = ReactionSpec::exchange(0.5);
  return p;
}

}  // namespace

static void BM_SpMV(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const SparseMatrix a = laplacian(n);
  std::vector<double> x(a.rows(), 1.0), y(a.rows());
  for (auto _ : st) {
    a.multiply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * a.nnz()));
}
BENCHMARK(BM_SpMV)->Arg(64)->Arg(128)->Arg(256);

static void BM_SolveSpd(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const SparseMatrix a = laplacian(n);
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> b(a.rows());
  for (auto& v : b) v = u(rng);
  for (auto _ : st) benchmark::DoNotOptimize(solve_spd(a, b, {1e-10, 0}).x.data());
}
BENCHMARK(BM_SolveSpd)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_Gauss(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto g = build_grid(n, n, 1.0, 1.0);
  const CellField rho = bump(g, -0.1, 1.0);
  for (auto _ : st) {
    benchmark::DoNotOptimize(solve_gauss(*g, {}, rho, CellField(g, 0.0), BoundaryField::zeros(*g)).phi.vec().data());
  }
}
BENCHMARK(BM_Gauss)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_TransportStep(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto g = build_grid(n, n, 1.0, 1.0);
  const PhysParams p = coupled_params();
  const Concentrations c{bump(g, 0.2, 1.0), CellField(g, 0.3)};
  const Forcing f = Forcing::zeros(g);
  const State s = equilibrate(*g, p, c, f, 0.0);
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        step_transport(*g, p, c, s.flow.q_faces, s.electro.e_faces, f.g1, f.g2, 0.01).c1.vec().data());
  }
}
BENCHMARK(BM_TransportStep)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_GummelStep(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto g = build_grid(n, n, 1.0, 1.0);
  const PhysParams p = coupled_params();
  const Forcing f = Forcing::zeros(g);
  const State s = equilibrate(*g, p, {bump(g, 0.2, 1.0), CellField(g, 0.3)}, f, 0.0);
  std::size_t sweeps = 0;
  for (auto _ : st) {
    const auto r = gummel_step(*g, p, s, f, 0.01);
    sweeps = r.second.sweeps;
    benchmark::DoNotOptimize(r.first.conc.c1.vec().data());
  }
  st.counters["sweeps"] = static_cast<double>(sweeps);
}
BENCHMARK(BM_GummelStep)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_CheckState(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto g = build_grid(n, n, 1.0, 1.0);
  const PhysParams p = coupled_params();
  const Forcing f = Forcing::zeros(g);
  const State s0 = equilibrate(*g, p, {bump(g, 0.2, 1.0), CellField(g, 0.3)}, f, 0.0);
  const State s1 = gummel_step(*g, p, s0, f, 0.01).first;
  for (auto _ : st) benchmark::DoNotOptimize(check_state(*g, p, nullptr, s1, &s0, 0.01, f).all_pass());
}
BENCHMARK(BM_CheckState)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

static void BM_MmsCoupled(benchmark::State& st) {
  const auto p = default_mms_params(MmsCase::Coupled);
  for (auto _ : st) {
    benchmark::DoNotOptimize(run_mms(MmsCase::Coupled, {{8, 8}, {16, 16}, {32, 32}}, p).rows.size());
  }
}
BENCHMARK(BM_MmsCoupled)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
