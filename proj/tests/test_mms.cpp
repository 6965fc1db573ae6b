#include <gtest/gtest.h>

#include "dpnp/errors.hpp"
#include "dpnp/mms.hpp"

using namespace dpnp;

namespace {

using Grids = std::vector<std::pair<std::size_t, std::size_t>>;

Grids doubling(std::size_t n0, int levels) {
  Grids g;
  for (int k = 0; k < levels; ++k) g.emplace_back(n0 << k, n0 << k);
  return g;
}

void expect_monotone(const ConvergenceTable& t) {
  for (std::size_t f = 0; f < t.fields.size(); ++f) {
    for (std::size_t r = 1; r < t.rows.size(); ++r) {
      EXPECT_LT(t.rows[r].errors[f], t.rows[r - 1].errors[f]) << t.fields[f] << " row " << r;
    }
  }
}

}  // namespace

TEST(Mms, CaseNames) {
  for (auto c : {MmsCase::Poisson, MmsCase::Darcy, MmsCase::Diffusion, MmsCase::DriftDiffusion, MmsCase::Coupled}) {
    EXPECT_EQ(parse_mms_case(to_string(c)), c);
  }
  EXPECT_THROW(parse_mms_case("heat"), InvalidConfig);
}

TEST(Mms, RejectsBadGridSequences) {
  const auto p = default_mms_params(MmsCase::Poisson);
  EXPECT_THROW(run_mms(MmsCase::Poisson, {{8, 8}, {16, 16}}, p), InvalidConfig);
  EXPECT_THROW(run_mms(MmsCase::Poisson, {{8, 8}, {16, 16}, {24, 24}}, p), InvalidConfig);
}

TEST(Mms, PoissonQuadraticIsExact) {
  const auto t = run_mms(MmsCase::Poisson, doubling(8, 3), default_mms_params(MmsCase::Poisson));
  for (const auto& row : t.rows) {
    for (double e : row.errors) EXPECT_LE(e, 1e-10);
  }
}

TEST(Mms, DarcySecondOrderPressure) {
  const auto t = run_mms(MmsCase::Darcy, doubling(8, 4), default_mms_params(MmsCase::Darcy));
  EXPECT_GE(t.min_order("p"), 1.9);
}

TEST(Mms, DiffusionSecondOrderInSpace) {
  MmsOptions o;
  o.diffusion_time = 1.0 / 16.0;
  const auto t = run_mms(MmsCase::Diffusion, doubling(8, 3), default_mms_params(MmsCase::Diffusion), o);
  EXPECT_GE(t.min_order("c1"), 1.9);
  EXPECT_GE(t.min_order("c2"), 1.9);
  expect_monotone(t);
}

TEST(Mms, DiffusionSingleStep) {
  const auto t = run_mms(MmsCase::Diffusion, doubling(16, 4), default_mms_params(MmsCase::Diffusion));
  EXPECT_GE(t.min_order("c1"), 1.9);
  EXPECT_GE(t.min_order("c2"), 1.9);
  expect_monotone(t);
}

TEST(Mms, DriftDiffusionExponentialProfileIsExact) {
  const auto t = run_mms(MmsCase::DriftDiffusion, doubling(8, 3), default_mms_params(MmsCase::DriftDiffusion));
  EXPECT_LE(t.finest_error("c1"), 1e-10);
  EXPECT_LE(t.finest_error("c2"), 1e-10);
  for (const auto& row : t.rows) {
    for (double e : row.errors) EXPECT_LE(e, 1e-10);
  }
}

TEST(Mms, CoupledConsistent) {
  const auto t = run_mms(MmsCase::Coupled, doubling(8, 3), default_mms_params(MmsCase::Coupled));
  for (const auto& f : t.fields) EXPECT_GE(t.min_order(f), 0.9) << f;
  for (const auto& row : t.rows) EXPECT_LE(row.sweeps, 50u);
  expect_monotone(t);
}

TEST(Mms, TableOutput) {
  const auto t = run_mms(MmsCase::Poisson, doubling(4, 3), default_mms_params(MmsCase::Poisson));
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_TRUE(t.rows[0].orders.empty());
  EXPECT_EQ(t.rows[1].orders.size(), t.fields.size());
  const std::string csv = t.csv();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(t.text().find("phi"), std::string::npos);
}
