#include <gtest/gtest.h>

#include <random>

#include "dpnp/gauss.hpp"
#include "dpnp/monitors.hpp"
#include "test_util.hpp"

using namespace dpnp;
using dpnp::testing::random_cells;

namespace {

// Independent dense assembly of the zero-mean Neumann problem, solved by LU
// on the system bordered with the mean constraint.
Eigen::VectorXd dense_gauss(const Grid& g, const PhysParams& p, const CellField& rho, const BoundaryField& sigma) {
  const auto n = static_cast<Eigen::Index>(g.num_cells());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n + 1);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
  for (std::size_t j = 0; j < g.ny(); ++j) {
    for (std::size_t i = 0; i < g.nx(); ++i) {
      const auto k = static_cast<Eigen::Index>(g.cell(i, j));
      b(k) = rho[g.cell(i, j)] * g.hx() * g.hy();
      a(n, k) = a(k, n) = 1.0;
      auto link = [&](std::size_t i2, std::size_t j2, double t) {
        const auto m = static_cast<Eigen::Index>(g.cell(i2, j2));
        a(k, k) += t;
        a(k, m) -= t;
      };
      const double tx = p.eps_s * p.diffusion[0] * g.hy() / g.hx();
      const double ty = p.eps_s * p.diffusion[1] * g.hx() / g.hy();
      if (i > 0) link(i - 1, j, tx);
      if (i + 1 < g.nx()) link(i + 1, j, tx);
      if (j > 0) link(i, j - 1, ty);
      if (j + 1 < g.ny()) link(i, j + 1, ty);
    }
  }
  const auto bf = g.boundary_faces();
  for (std::size_t k = 0; k < bf.size(); ++k) {
    b(static_cast<Eigen::Index>(bf[k].cell)) -= sigma.outward[k] * g.face_length(bf[k].face);
  }
  return a.fullPivLu().solve(b).head(n);
}

BoundaryField random_sigma(const Grid& g, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BoundaryField s = BoundaryField::zeros(g);
  for (auto& v : s.outward) v = u(rng);
  return s;
}

// Makes rho compatible with sigma by a uniform shift.
void make_compatible(CellField& rho, const BoundaryField& sigma) {
  const Grid& g = rho.grid();
  const double d = (volume_integral(rho) - sigma.integral(g)) / g.volume();
  for (auto& v : rho.vec()) v -= d;
}

}  // namespace

TEST(Gauss, ZeroData) {
  const auto g = build_grid(6, 5, 1.0, 1.0);
  const auto s = solve_gauss(*g, {}, CellField(g, 0.0), CellField(g, 0.0), BoundaryField::zeros(*g));
  for (double v : s.phi.values()) EXPECT_EQ(v, 0.0);
  for (double v : s.e_faces.values()) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(s.compat_shift, 0.0);
}

TEST(Gauss, StripWithQuadraticPotential) {
  const auto g = build_grid(64, 1, 1.0, 1.0);
  BoundaryField sigma = BoundaryField::zeros(*g);
  const auto bf = g->boundary_faces();
  for (std::size_t k = 0; k < bf.size(); ++k) {
    if (bf[k].side == Side::Left || bf[k].side == Side::Right) sigma.outward[k] = 0.5;
  }
  const auto s = solve_gauss(*g, {}, CellField(g, 0.0), CellField(g, 1.0), sigma, {{1e-13, 0}});
  EXPECT_NEAR(s.compat_shift, 0.0, 1e-14);
  // phi = -x^2/2 + x/2 + c; compare modulo the constant
  CellField exact(g, 0.0);
  for (std::size_t k = 0; k < g->num_cells(); ++k) {
    const double x = g->cell_x(k);
    exact[k] = -0.5 * x * x + 0.5 * x;
  }
  const auto shifted = project_zero_mean(exact.vec(), std::vector<double>(g->num_cells(), g->cell_volume()));
  EXPECT_LE(dpnp::testing::max_diff(s.phi.vec(), shifted), 1e-10);
  for (std::size_t f = 0; f < g->num_x_faces(); ++f) EXPECT_NEAR(s.e_faces[f], g->face_x(f) - 0.5, 1e-10);
  EXPECT_NEAR(volume_integral(s.phi), 0.0, 1e-12);
}

TEST(Gauss, TwoCellHandSolve) {
  const auto g = build_grid(2, 1, 2.0, 1.0);
  const auto s = solve_gauss(*g, {}, CellField(g, std::vector<double>{1.0, -1.0}), CellField(g, 0.0),
                             BoundaryField::zeros(*g));
  EXPECT_NEAR(s.phi[0], 0.5, 1e-12);
  EXPECT_NEAR(s.phi[1], -0.5, 1e-12);
  EXPECT_NEAR(s.e_faces[g->x_face(1, 0)], 1.0, 1e-12);
}

TEST(Gauss, CompatibilityShiftRecorded) {
  const auto g = build_grid(8, 8, 1.0, 2.0);
  const auto s = solve_gauss(*g, {}, CellField(g, 0.0), CellField(g, 3.0), BoundaryField::zeros(*g));
  EXPECT_NEAR(s.compat_shift, 3.0, 1e-14);
  EXPECT_LE(gauss_residual(*g, s, CellField(g, 3.0)), 1e-9);
  GaussOptions strict;
  strict.max_compat_shift = 1.0;
  EXPECT_THROW(solve_gauss(*g, {}, CellField(g, 0.0), CellField(g, 3.0), BoundaryField::zeros(*g), strict),
               CompatibilityError);
}

TEST(Gauss, ShiftedDataIsCompatible) {
  std::mt19937 rng(21);
  const auto g = build_grid(7, 5, 1.5, 1.0);
  const CellField rho = random_cells(g, rng, -2.0, 2.0);
  const BoundaryField sigma = random_sigma(*g, rng);
  const auto s = solve_gauss(*g, {}, CellField(g, 0.0), rho, sigma);
  const double lhs = volume_integral(rho) - s.compat_shift * g->volume();
  EXPECT_NEAR(lhs, sigma.integral(*g), 1e-12 * (1.0 + std::abs(sigma.integral(*g))));
}

TEST(Gauss, MatchesDenseOracleAnisotropic) {
  std::mt19937 rng(4);
  PhysParams p;
  p.eps_s = 0.7;
  p.diffusion = {2.0, 0.3};
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = build_grid(5 + static_cast<std::size_t>(trial % 3), 4, 1.3, 0.9);
    CellField rho = random_cells(g, rng, -1.0, 1.0);
    const BoundaryField sigma = random_sigma(*g, rng);
    make_compatible(rho, sigma);
    const auto s = solve_gauss(*g, p, rho, CellField(g, 0.0), sigma, {{1e-13, 0}});
    const Eigen::VectorXd oracle = dense_gauss(*g, p, rho, sigma);
    for (std::size_t k = 0; k < g->num_cells(); ++k) {
      EXPECT_NEAR(s.phi[k], oracle(static_cast<Eigen::Index>(k)), 1e-9);
    }
  }
}

TEST(Gauss, BoundaryFacesCarrySigmaExactly) {
  std::mt19937 rng(8);
  const auto g = build_grid(6, 6, 1.0, 1.0);
  const BoundaryField sigma = random_sigma(*g, rng);
  const auto s = solve_gauss(*g, {}, random_cells(g, rng, -1, 1), CellField(g, 0.0), sigma);
  const auto bf = g->boundary_faces();
  for (std::size_t k = 0; k < bf.size(); ++k) EXPECT_EQ(s.e_faces[bf[k].face] * bf[k].outward, sigma.outward[k]);
}

TEST(Gauss, ResidualWithinSolverTolerance) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = build_grid(32, 32, 1.0, 1.0);
    const CellField rf = random_cells(g, rng, -1, 1);
    const CellField rb = random_cells(g, rng, -1, 1);
    const BoundaryField sigma = random_sigma(*g, rng);
    const auto s = solve_gauss(*g, {}, rf, rb, sigma);
    CellField rho = rb;
    for (std::size_t k = 0; k < rho.size(); ++k) rho[k] += rf[k];
    EXPECT_LE(gauss_residual(*g, s, rho), 10.0 * 1e-10);
    EXPECT_NEAR(volume_integral(s.phi), 0.0, 1e-12);
  }
}

TEST(Gauss, Superposition) {
  std::mt19937 rng(17);
  const auto g = build_grid(9, 7, 1.0, 1.0);
  CellField r1 = random_cells(g, rng, -1, 1), r2 = random_cells(g, rng, -1, 1);
  const BoundaryField s1 = random_sigma(*g, rng), s2 = random_sigma(*g, rng);
  make_compatible(r1, s1);
  make_compatible(r2, s2);
  const double a = 1.7, b = -0.4;
  CellField r(g, 0.0);
  BoundaryField s = BoundaryField::zeros(*g);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a * r1[k] + b * r2[k];
  for (std::size_t k = 0; k < s.outward.size(); ++k) s.outward[k] = a * s1.outward[k] + b * s2.outward[k];
  const GaussOptions o{{1e-13, 0}};
  const CellField z(g, 0.0);
  const auto e = solve_gauss(*g, {}, r, z, s, o), e1 = solve_gauss(*g, {}, r1, z, s1, o),
             e2 = solve_gauss(*g, {}, r2, z, s2, o);
  for (std::size_t k = 0; k < r.size(); ++k) EXPECT_NEAR(e.phi[k], a * e1.phi[k] + b * e2.phi[k], 1e-9);
  for (std::size_t f = 0; f < g->num_faces(); ++f) {
    EXPECT_NEAR(e.e_faces[f], a * e1.e_faces[f] + b * e2.e_faces[f], 1e-9);
  }
}

TEST(Gauss, Deterministic) {
  std::mt19937 rng(19);
  const auto g = build_grid(12, 10, 1.0, 1.0);
  const CellField rf = random_cells(g, rng, -1, 1);
  const BoundaryField sigma = random_sigma(*g, rng);
  const auto a = solve_gauss(*g, {}, rf, CellField(g, 0.0), sigma);
  const auto b = solve_gauss(*g, {}, rf, CellField(g, 0.0), sigma);
  EXPECT_EQ(a.phi.vec(), b.phi.vec());
  EXPECT_EQ(a.e_faces.vec(), b.e_faces.vec());
}

TEST(Gauss, RejectsMismatchedGrids) {
  const auto g = build_grid(3, 3, 1.0, 1.0);
  const auto h = build_grid(4, 3, 1.0, 1.0);
  EXPECT_THROW(solve_gauss(*g, {}, CellField(h, 0.0), CellField(g, 0.0), BoundaryField::zeros(*g)), DimensionError);
}

TEST(Gauss, UniformChargeWithoutSurfaceChargeIsFieldFree) {
  for (std::size_t n : {3, 6, 17}) {
    const auto g = build_grid(n, n, 1.0, 0.7);
    for (double r : {1.0, 0.1, 3.3}) {
      const auto s = solve_gauss(*g, {}, CellField(g, r), CellField(g, 0.0), BoundaryField::zeros(*g));
      EXPECT_NEAR(s.compat_shift, r, 1e-13 * r);
      for (double v : s.e_faces.values()) EXPECT_EQ(v, 0.0);
    }
  }
}
