#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dpnp/bounds.hpp"
#include "dpnp/monitors.hpp"
#include "test_util.hpp"

using namespace dpnp;
using dpnp::testing::random_cells;

namespace {

Concentrations uniform(const GridPtr& g, double a, double b) { return {CellField(g, a), CellField(g, b)}; }

}  // namespace

TEST(AlgebraicInequality, Examples) {
  EXPECT_EQ(algebraic_inequality(7, 7, 3), 0.0);
  EXPECT_DOUBLE_EQ(algebraic_inequality(2, 1, 2), 3.0);
  EXPECT_DOUBLE_EQ(algebraic_inequality(0, 5, 1), 25.0);
  EXPECT_THROW(algebraic_inequality(-1, 1, 1), DomainError);
  EXPECT_THROW(algebraic_inequality(1, -1, 1), DomainError);
  EXPECT_THROW(algebraic_inequality(1, 1, -1), DomainError);
}

TEST(AlgebraicInequality, NonnegativeOnRandomTriples) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int t = 0; t < 10000; ++t) {
    const double a = u(rng), b = u(rng), p = u(rng);
    EXPECT_GE(algebraic_inequality(a, b, p), 0.0) << a << ' ' << b << ' ' << p;
  }
}

TEST(SignCondition, Examples) {
  const auto g = build_grid(1, 1, 1.0, 1.0);
  PhysParams p;
  EXPECT_EQ(sign_condition(p, uniform(g, 0, 0)), 0.0);
  EXPECT_DOUBLE_EQ(sign_condition(p, uniform(g, 2, 1)), 3.0);
  p.z1 = 2;
  p.z2 = -3;
  EXPECT_EQ(sign_condition(p, uniform(g, 3, 2)), 0.0);
}

TEST(SignCondition, NonnegativeForNonnegativeFields) {
  std::mt19937 rng(5);
  PhysParams p;
  p.z1 = 3;
  p.z2 = -2;
  for (int t = 0; t < 50; ++t) {
    const auto g = build_grid(6, 6, 1.0, 1.0);
    const Concentrations c{random_cells(g, rng, 0, 2), random_cells(g, rng, 0, 2)};
    EXPECT_GE(sign_condition(p, c), 0.0);
  }
}

TEST(SignCondition, NegativeInputIsNotAnInvariantError) {
  // the pointwise identity only holds for nonnegative arguments; negative
  // fields are reported through the nonnegativity monitor instead
  const auto g = build_grid(2, 1, 1.0, 1.0);
  Concentrations c = uniform(g, 1, 1);
  c.c1[1] = -3.0;
  EXPECT_NO_THROW(sign_condition({}, c));
}

TEST(WeightedEnergy, Examples) {
  const auto g = build_grid(1, 1, 1.0, 1.0);
  PhysParams p;
  EXPECT_EQ(weighted_energy(p, uniform(g, 0, 0)), 0.0);
  EXPECT_DOUBLE_EQ(weighted_energy(p, uniform(g, 1, 1)), 2.0);
  std::mt19937 rng(1);
  const auto h = build_grid(5, 4, 1.0, 2.0);
  p.z1 = 2;
  const Concentrations c{random_cells(h, rng, 0, 1), random_cells(h, rng, 0, 1)};
  Concentrations c2 = c;
  for (auto& v : c2.c1.vec()) v *= 2.0;
  for (auto& v : c2.c2.vec()) v *= 2.0;
  EXPECT_NEAR(weighted_energy(p, c2), 4.0 * weighted_energy(p, c), 1e-12);
}

TEST(CheckState, ZeroStatePasses) {
  const auto g = build_grid(6, 6, 1.0, 1.0);
  const Forcing f = Forcing::zeros(g);
  const State s0 = equilibrate(*g, {}, uniform(g, 0, 0), f, 0.0);
  const auto [s1, rep] = gummel_step(*g, {}, s0, f, 0.1);
  const auto r = check_state(*g, {}, nullptr, s1, &s0, 0.1, f);
  EXPECT_TRUE(r.all_pass()) << r.failures();
  EXPECT_EQ(r.gauss_residual, 0.0);
  EXPECT_EQ(r.darcy_residual, 0.0);
  EXPECT_EQ(r.mass_residual[0], 0.0);
  EXPECT_EQ(r.weighted_energy, 0.0);
  EXPECT_EQ(r.failures(), "");
}

TEST(CheckState, ConvergedSymmetricRunPasses) {
  const auto g = build_grid(16, 16, 1.0, 1.0);
  PhysParams p;
  p.reaction = ReactionSpec::exchange(1.0);
  Forcing f = Forcing::zeros(g);
  const auto bf = g->boundary_faces();
  for (std::size_t k = 0; k < bf.size(); ++k) {
    if (bf[k].side == Side::Left) f.g1.outward[k] = f.g2.outward[k] = 0.2;
  }
  Concentrations c0 = uniform(g, 0.5, 0.5);
  for (std::size_t k = 0; k < g->num_cells(); ++k) c0.c1[k] = c0.c2[k] = 0.5 + 0.4 * std::sin(3.0 * g->cell_x(k));
  GummelOptions o;
  o.linear.tol = 1e-12;
  State s = equilibrate(*g, p, c0, f, 0.0, o.linear);
  BoundarySchedule sched;
  sched.g1.left = sched.g2.left = 0.2;
  sched.rho_b = CellField(g, 0.0);
  for (int step = 0; step < 5; ++step) {
    auto [next, rep] = gummel_step(*g, p, s, f, 0.02, o);
    const auto ledger = compute_ledger(p, measure_data_norms(*g, sched, c0, next.time), next.time);
    const auto r = check_state(*g, p, &ledger, next, &s, 0.02, f, {1e-12});
    EXPECT_TRUE(r.all_pass()) << r.failures();
    EXPECT_GE(r.sign_condition, 0.0);
    EXPECT_GT(r.energy.margin, 0.0);
    EXPECT_GT(r.linf.margin, 0.0);
    s = std::move(next);
  }
}

TEST(CheckState, CorruptedStateIsLocated) {
  const auto g = build_grid(5, 4, 1.0, 1.0);
  const Forcing f = Forcing::zeros(g);
  State s = equilibrate(*g, {}, uniform(g, 1, 1), f, 0.0);
  const std::size_t bad = g->cell(3, 2);
  s.conc.c2[bad] = -0.25;
  const auto r = check_state(*g, {}, nullptr, s, nullptr, 0.1, f);
  EXPECT_FALSE(r.nonnegative);
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.argmin_c[1], bad);
  EXPECT_EQ(r.min_c[1], -0.25);
  EXPECT_NE(r.failures().find("nonnegativity"), std::string::npos);
}

TEST(CheckState, BrokenGaussSolutionIsFlagged) {
  const auto g = build_grid(6, 6, 1.0, 1.0);
  const Forcing f = Forcing::zeros(g);
  Concentrations c = uniform(g, 1, 0);
  State s = equilibrate(*g, {}, c, f, 0.0);
  s.electro.e_faces[g->x_face(3, 3)] += 1e-3;
  const auto r = check_state(*g, {}, nullptr, s, nullptr, 0.1, f);
  EXPECT_FALSE(r.gauss_ok);
  EXPECT_TRUE(r.darcy_ok);
}

TEST(CheckState, LaggedChargeIsLabelled) {
  const auto g = build_grid(4, 4, 1.0, 1.0);
  const Forcing f = Forcing::zeros(g);
  const State s = equilibrate(*g, {}, uniform(g, 1, 1), f, 0.0);
  const CellField lag(g, 0.0);
  EXPECT_EQ(check_state(*g, {}, nullptr, s, nullptr, 0.1, f, {}, &lag).charge_case, ChargeCase::Lagged);
  EXPECT_EQ(check_state(*g, {}, nullptr, s, nullptr, 0.1, f).charge_case, ChargeCase::Converged);
}

TEST(CheckState, BoundViolationReportsNegativeMargin) {
  const auto g = build_grid(3, 3, 1.0, 1.0);
  const Forcing f = Forcing::zeros(g);
  const State s = equilibrate(*g, {}, uniform(g, 2, 2), f, 0.0);
  BoundsLedger b;
  b.C0_hat = 1.0;
  b.CM = 1.0;
  const auto r = check_state(*g, {}, &b, s, nullptr, 0.1, f);
  EXPECT_FALSE(r.energy.pass);
  EXPECT_FALSE(r.linf.pass);
  EXPECT_DOUBLE_EQ(r.linf.value, 4.0);
  EXPECT_DOUBLE_EQ(r.linf.margin, -3.0);
  EXPECT_DOUBLE_EQ(r.energy.value, 8.0);
}

TEST(MonitorCsv, RowMatchesHeader) {
  const auto g = build_grid(2, 2, 1.0, 1.0);
  const Forcing f = Forcing::zeros(g);
  const State s = equilibrate(*g, {}, uniform(g, 1, 1), f, 0.0);
  const std::string h = monitor_csv_header(), row = monitor_csv_row(check_state(*g, {}, nullptr, s, nullptr, 1, f));
  EXPECT_EQ(std::count(h.begin(), h.end(), ','), std::count(row.begin(), row.end(), ','));
}
