#include <gtest/gtest.h>

#include <random>

#include "dpnp/linalg.hpp"
#include "test_util.hpp"

using namespace dpnp;
using dpnp::testing::dense;
using dpnp::testing::vec;

namespace {

SparseMatrix from_dense(const Eigen::MatrixXd& m) {
  TripletBuilder tb(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0.0) tb.add(static_cast<std::size_t>(r), static_cast<std::size_t>(c), m(r, c));
    }
  }
  return tb.build();
}

SparseMatrix tridiag(std::size_t n, double lo, double d, double hi) {
  TripletBuilder tb(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    tb.add(i, i, d);
    if (i > 0) tb.add(i, i - 1, lo);
    if (i + 1 < n) tb.add(i, i + 1, hi);
  }
  return tb.build();
}

}  // namespace

TEST(SparseMatrix, BuilderSumsDuplicatesAndSortsColumns) {
  TripletBuilder tb(2, 3);
  tb.add(1, 2, 1.0);
  tb.add(0, 1, 2.0);
  tb.add(1, 0, 3.0);
  tb.add(0, 1, 0.5);
  const SparseMatrix a = tb.build();
  EXPECT_EQ(a.nnz(), 3u);
  EXPECT_DOUBLE_EQ(a.at(0, 1), 2.5);
  EXPECT_DOUBLE_EQ(a.at(1, 0), 3.0);
  EXPECT_DOUBLE_EQ(a.at(0, 0), 0.0);
  const auto cols = a.col_indices();
  EXPECT_LT(cols[1], cols[2]);
  const std::vector<double> x{1.0, 2.0, 3.0};
  const auto y = a * x;
  EXPECT_DOUBLE_EQ(y[0], 5.0);
  EXPECT_DOUBLE_EQ(y[1], 6.0);
}

TEST(SparseMatrix, ValidatesCsr) {
  EXPECT_THROW(SparseMatrix(2, 2, {0, 1, 2}, {1, 2}, {1.0, 1.0}), DimensionError);
  EXPECT_THROW(SparseMatrix(1, 2, {0, 2}, {1, 0}, {1.0, 1.0}), DimensionError);
  EXPECT_THROW(SparseMatrix(1, 1, {0, 1}, {0}, {std::nan("")}), DomainError);
  TripletBuilder tb(2, 2);
  tb.add(2, 0, 1.0);
  EXPECT_THROW(tb.build(), DimensionError);
}

TEST(SparseMatrix, Symmetry) {
  EXPECT_TRUE(tridiag(5, -1.0, 2.0, -1.0).is_symmetric());
  EXPECT_FALSE(tridiag(5, -1.0, 2.0, -0.5).is_symmetric());
}

TEST(SolveSpd, IdentityInOneIteration) {
  TripletBuilder tb(5, 5);
  for (std::size_t i = 0; i < 5; ++i) tb.add(i, i, 1.0);
  const std::vector<double> b{1, 2, 3, 4, 5};
  const auto r = solve_spd(tb.build(), b);
  EXPECT_LE(r.report.iterations, 1u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(r.x[i], b[i], 1e-12);
}

TEST(SolveSpd, Laplacian3x3) {
  const auto r = solve_spd(tridiag(3, -1.0, 2.0, -1.0), std::vector<double>{1, 0, 1});
  for (double v : r.x) EXPECT_NEAR(v, 1.0, 1e-10);
  EXPECT_TRUE(r.report.converged);
  EXPECT_LE(r.report.residual, 1e-10);
}

TEST(SolveSpd, SingularNeumannCompatible) {
  TripletBuilder tb(3, 3);
  const double a[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (a[i][j] != 0.0) tb.add(i, j, a[i][j]);
    }
  }
  const SparseMatrix m = tb.build();
  const std::vector<double> b{1.0, 0.5, -1.5};
  const auto r = solve_spd(m, b);
  const auto ax = m * r.x;
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(ax[i], b[i], 1e-9);
}

TEST(SolveSpd, HistoryIsMonotone) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 40;
    Eigen::MatrixXd q = Eigen::MatrixXd::NullaryExpr(n, n, [&] { return u(rng); });
    Eigen::MatrixXd spd = q.transpose() * q + 0.1 * Eigen::MatrixXd::Identity(n, n);
    std::vector<double> b(static_cast<std::size_t>(n));
    for (auto& v : b) v = u(rng);
    const auto r = solve_spd(from_dense(spd), b, {1e-12, 0});
    for (std::size_t k = 1; k < r.report.history.size(); ++k) {
      EXPECT_LE(r.report.history[k], r.report.history[k - 1] * (1.0 + 1e-12)) << "trial " << trial << " it " << k;
    }
  }
}

TEST(SolveSpd, RoundTripAgainstDenseOracle) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> size(2, 50);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = size(rng);
    Eigen::MatrixXd q = Eigen::MatrixXd::NullaryExpr(n, n, [&] { return u(rng); });
    Eigen::MatrixXd spd = q * q.transpose() + Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd xs = Eigen::VectorXd::NullaryExpr(n, [&] { return u(rng); });
    Eigen::VectorXd b = spd * xs;
    const std::vector<double> bv(b.data(), b.data() + n);
    const auto r = solve_spd(from_dense(spd), bv, {1e-13, 0});
    const Eigen::VectorXd oracle = spd.ldlt().solve(b);
    EXPECT_LE((vec(r.x) - oracle).lpNorm<Eigen::Infinity>(), 1e-8) << "trial " << trial;
  }
}

TEST(SolveSpd, ReportsNonConvergence) {
  try {
    solve_spd(tridiag(50, -1.0, 2.0, -1.0), std::vector<double>(50, 1.0), {1e-14, 2});
    FAIL();
  } catch (const NonConvergence& e) {
    EXPECT_FALSE(e.report().converged);
    EXPECT_EQ(e.report().iterations, 2u);
    EXPECT_EQ(e.report().history.size(), 3u);
  }
}

TEST(SolveSpd, WarmStartAtSolutionTakesNoIterations) {
  const SparseMatrix a = tridiag(3, -1.0, 2.0, -1.0);
  const std::vector<double> x{1.0, 1.0, 1.0};
  const auto r = solve_spd(a, std::vector<double>{1, 0, 1}, {}, x);
  EXPECT_EQ(r.report.iterations, 0u);
}

TEST(SolveNonsym, SmallExamples) {
  TripletBuilder d(2, 2);
  d.add(0, 0, 2.0);
  d.add(1, 1, 4.0);
  auto r = solve_nonsym(d.build(), std::vector<double>{2, 4});
  EXPECT_NEAR(r.x[0], 1.0, 1e-12);
  EXPECT_NEAR(r.x[1], 1.0, 1e-12);

  TripletBuilder u(2, 2);
  u.add(0, 0, 2.0);
  u.add(0, 1, 1.0);
  u.add(1, 1, 2.0);
  r = solve_nonsym(u.build(), std::vector<double>{3, 2});
  EXPECT_NEAR(r.x[0], 1.0, 1e-10);
  EXPECT_NEAR(r.x[1], 1.0, 1e-10);
}

TEST(SolveNonsym, RandomDiagonallyDominantMatchesLu) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 20;
    Eigen::MatrixXd m = Eigen::MatrixXd::NullaryExpr(n, n, [&] { return u(rng); });
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = m.row(i).cwiseAbs().sum() + 1.0;
    Eigen::VectorXd b = Eigen::VectorXd::NullaryExpr(n, [&] { return u(rng); });
    const std::vector<double> bv(b.data(), b.data() + n);
    const auto r = solve_nonsym(from_dense(m), bv, {1e-13, 0});
    EXPECT_LE((vec(r.x) - m.partialPivLu().solve(b)).lpNorm<Eigen::Infinity>(), 1e-8);
  }
}

TEST(SolveNonsym, ConvergedImpliesTolerance) {
  const SparseMatrix a = tridiag(30, -1.5, 3.0, -0.5);
  const std::vector<double> b(30, 1.0);
  const auto r = solve_nonsym(a, b, {1e-9, 0});
  ASSERT_TRUE(r.report.converged);
  const auto ax = a * r.x;
  std::vector<double> res(30);
  for (std::size_t i = 0; i < 30; ++i) res[i] = b[i] - ax[i];
  EXPECT_LE(norm2(res), 1e-9 * norm2(b) * (1.0 + 1e-6));
}

TEST(SolveNonsym, RejectsZeroDiagonal) {
  TripletBuilder tb(2, 2);
  tb.add(0, 1, 1.0);
  tb.add(1, 0, 1.0);
  EXPECT_THROW(solve_nonsym(tb.build(), std::vector<double>{1, 1}), DomainError);
}

TEST(ProjectZeroMean, Examples) {
  for (double v : project_zero_mean(std::vector<double>(4, 5.0), std::vector<double>(4, 1.0))) EXPECT_EQ(v, 0.0);
  auto p = project_zero_mean(std::vector<double>{0, 2}, std::vector<double>{1, 1});
  EXPECT_DOUBLE_EQ(p[0], -1.0);
  EXPECT_DOUBLE_EQ(p[1], 1.0);
  p = project_zero_mean(std::vector<double>{1, 2, 3}, std::vector<double>{1, 1, 2});
  EXPECT_DOUBLE_EQ(p[0], -1.25);
  EXPECT_DOUBLE_EQ(p[1], -0.25);
  EXPECT_DOUBLE_EQ(p[2], 0.75);
}

TEST(ProjectZeroMean, IdempotentAndLinear) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-3.0, 3.0), w(0.1, 2.0);
  std::vector<double> x(17), y(17), wt(17);
  for (std::size_t i = 0; i < 17; ++i) {
    x[i] = u(rng);
    y[i] = u(rng);
    wt[i] = w(rng);
  }
  const auto px = project_zero_mean(x, wt);
  const auto ppx = project_zero_mean(px, wt);
  EXPECT_LE(dpnp::testing::max_diff(px, ppx), 1e-14);
  std::vector<double> comb(17);
  for (std::size_t i = 0; i < 17; ++i) comb[i] = 2.0 * x[i] - 0.5 * y[i];
  const auto pc = project_zero_mean(comb, wt);
  const auto py = project_zero_mean(y, wt);
  for (std::size_t i = 0; i < 17; ++i) EXPECT_NEAR(pc[i], 2.0 * px[i] - 0.5 * py[i], 1e-13);
  EXPECT_THROW(project_zero_mean(x, std::vector<double>(17, 0.0)), DomainError);
}
