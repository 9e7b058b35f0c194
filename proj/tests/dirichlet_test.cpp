#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "shrinker/dirichlet.hpp"
#include "shrinker/error.hpp"
#include "shrinker/verify/oracles.hpp"

using namespace shrinker;

namespace {

DirichletProblem interval(double a, double b, std::size_t n, std::size_t count) {
  return DirichletProblem{1, {{a, b}}, n, count};
}

double max_interior(const std::vector<double>& r, std::size_t skip) {
  double m = 0.0;
  for (std::size_t i = skip; i + skip < r.size(); ++i) m = std::max(m, std::abs(r[i]));
  return m;
}

std::vector<double> gaussian_residual(std::size_t n) {
  const auto op = assemble_1d(interval(-8, 8, n, 1));
  std::vector<double> v(op.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::exp(-op.grid[i] * op.grid[i] / 4);
  return shrinker::apply(op, v);
}

}  // namespace

TEST(Assembly, SmallExample) {
  const auto op = assemble_1d(interval(-1, 1, 3, 1));
  EXPECT_DOUBLE_EQ(op.h, 0.5);
  ASSERT_EQ(op.size(), 3u);
  EXPECT_DOUBLE_EQ(op.diagonal[0], 8 + ou_potential(-0.5));
  EXPECT_DOUBLE_EQ(op.diagonal[1], 8 + ou_potential(0));
  EXPECT_DOUBLE_EQ(op.diagonal[2], 8 + ou_potential(0.5));
  EXPECT_DOUBLE_EQ(op.off_diagonal[0], -4);
  EXPECT_DOUBLE_EQ(op.off_diagonal[1], -4);
  EXPECT_DOUBLE_EQ(ou_potential(0), -0.5);
}

TEST(Assembly, GaussianGroundStateResidualIsSecondOrder) {
  const double coarse = max_interior(gaussian_residual(1999), 1);
  const double fine = max_interior(gaussian_residual(3999), 1);
  EXPECT_LT(fine, 1e-5);
  EXPECT_NEAR(std::log2(coarse / fine), 2.0, 0.05);
}

TEST(Tridiagonal, ToeplitzExample) {
  const auto ev = tridiag_eigen(make_tridiagonal({2, 2, 2}, {-1, -1}), 3);
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_NEAR(ev[0], 2 - std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(ev[1], 2, 1e-10);
  EXPECT_NEAR(ev[2], 2 + std::sqrt(2.0), 1e-10);
}

TEST(Tridiagonal, OneByOne) {
  const auto ev = tridiag_eigen(make_tridiagonal({3.25}, {}), 1);
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_NEAR(ev[0], 3.25, 1e-10);
}

TEST(Tridiagonal, MatchesToeplitzOracle) {
  for (std::size_t n : {5u, 50u, 200u}) {
    const auto want = oracle::toeplitz_eigenvalues(2.0, -1.0, n);
    const auto got = tridiag_eigen(make_tridiagonal(std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)), n);
    for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(got[j], want[j], 1e-9) << n << " " << j;
  }
}

TEST(Tridiagonal, MatchesCharacteristicPolynomialRoots) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 6;
    std::vector<double> d(n), e(n - 1);
    for (auto& x : d) x = u(rng);
    for (auto& x : e) x = u(rng);
    const auto roots = oracle::real_roots(oracle::characteristic_polynomial(oracle::dense_from_tridiagonal(d, e)));
    const auto ev = tridiag_eigen(make_tridiagonal(d, e), n);
    for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(ev[j], roots[j], 1e-8) << trial << " " << j;
  }
}

TEST(Tridiagonal, ThreadCountDoesNotChangeResult) {
  const auto op = assemble_1d(interval(-4, 4, 800, 1));
  EXPECT_EQ(tridiag_eigen(op, 20, 1), tridiag_eigen(op, 20, 4));
}

TEST(SturmCount, CountsBelow) {
  const std::vector<double> d{2, 2, 2}, e{-1, -1};
  EXPECT_EQ(sturm_count(d, e, 0.0), 0u);
  EXPECT_EQ(sturm_count(d, e, 1.0), 1u);
  EXPECT_EQ(sturm_count(d, e, 2.5), 2u);
  EXPECT_EQ(sturm_count(d, e, 10.0), 3u);
}

TEST(Solve1d, WideIntervalApproachesOrnsteinUhlenbeck) {
  const auto ev = solve(interval(-6, 6, 6000, 4)).expanded(4);
  EXPECT_LE(ev[0], 1e-6);
  EXPECT_GT(ev[0], 0.0);
  EXPECT_NEAR(ev[1], 1.0, 1e-4);
  EXPECT_NEAR(ev[2], 2.0, 1e-4);
}

TEST(Solve1d, MatchesContinuumOracle) {
  const auto ev = solve(interval(-6, 6, 6000, 4)).expanded(4);
  for (int j = 1; j <= 4; ++j) EXPECT_NEAR(ev[j - 1], oracle::continuum_dirichlet_eigenvalue(6, j), 1e-5) << j;
}

TEST(Solve1d, PositiveAndIncreasing) {
  const auto ev = solve(interval(-1, 1, 400, 10)).expanded(10);
  EXPECT_GT(ev[0], 0.0);
  for (std::size_t j = 1; j < ev.size(); ++j) EXPECT_GT(ev[j], ev[j - 1]);
}

TEST(Solve1d, DomainMonotonicity) {
  const auto small = solve(interval(-2, 2, 1000, 5)).expanded(5);
  const auto large = solve(interval(-3, 3, 1500, 5)).expanded(5);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_LT(large[j], small[j]) << j;
}

TEST(Solve1d, SecondOrderConvergence) {
  const auto orders = convergence_orders(interval(-1, 1, 199, 4));
  ASSERT_EQ(orders.size(), 4u);
  for (double p : orders) EXPECT_NEAR(p, 2.0, 0.1);
}

TEST(Solve1d, Validation) {
  EXPECT_THROW(solve(interval(1, -1, 10, 1)), Error);
  EXPECT_THROW(solve(interval(-1, 1, 2, 1)), Error);
  EXPECT_THROW(solve(interval(-1, 1, 10, 11)), Error);
}

TEST(Rectangle, GroundStateIsSumOfAxes) {
  const double l1 = solve(interval(-5, 5, 500, 1)).levels()[0].lambda;
  const auto sq = solve(DirichletProblem{2, {{-5, 5}, {-5, 5}}, 500, 1});
  EXPECT_NEAR(sq.levels()[0].lambda, 2 * l1, 1e-9);
}

TEST(Rectangle, FirstLevels) {
  const auto axis = solve(interval(-5, 5, 500, 2)).expanded(2);
  const auto sq = solve(DirichletProblem{2, {{-5, 5}, {-5, 5}}, 500, 3});
  ASSERT_GE(sq.level_count(), 2u);
  EXPECT_NEAR(sq.levels()[0].lambda, 2 * axis[0], 1e-9);
  EXPECT_EQ(sq.levels()[0].mult, 1u);
  EXPECT_NEAR(sq.levels()[1].lambda, axis[0] + axis[1], 1e-9);
  EXPECT_EQ(sq.levels()[1].mult, 2u);
  EXPECT_EQ(sq.total_multiplicity(), 3u);
}

TEST(Rectangle, AxisSwapSymmetry) {
  const auto a = solve(DirichletProblem{2, {{-2, 3}, {-1, 1}}, 300, 8});
  const auto b = solve(DirichletProblem{2, {{-1, 1}, {-2, 3}}, 300, 8});
  ASSERT_EQ(a.level_count(), b.level_count());
  for (std::size_t i = 0; i < a.level_count(); ++i) {
    EXPECT_NEAR(a.levels()[i].lambda, b.levels()[i].lambda, 1e-9);
    EXPECT_EQ(a.levels()[i].mult, b.levels()[i].mult);
  }
}

TEST(InfX2, Values) {
  const std::vector<Interval> centred{{-1, 1}, {-2, 2}};
  EXPECT_EQ(domain_inf_x2(centred), 0.0);
  const std::vector<Interval> offset{{1, 2}, {-3, -2}};
  EXPECT_DOUBLE_EQ(domain_inf_x2(offset), 5.0);
}

TEST(Rayleigh, Eigenvector) {
  const auto op = assemble_1d(interval(-2, 2, 1000, 1));
  const double l1 = tridiag_eigen(op, 1)[0];
  const auto v = eigenvector(op, l1);
  EXPECT_NEAR(rayleigh_quotient(v, op), l1, 1e-8);
}

TEST(Rayleigh, RandomVectorIsAboveGround) {
  const auto op = assemble_1d(interval(-2, 2, 1000, 1));
  const double l1 = tridiag_eigen(op, 1)[0];
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int t = 0; t < 10; ++t) {
    std::vector<double> v(op.size());
    for (auto& x : v) x = g(rng);
    EXPECT_GE(rayleigh_quotient(v, op), l1 - 1e-10);
  }
}

TEST(Rayleigh, BasisVectorGivesDiagonal) {
  const auto op = assemble_1d(interval(-2, 2, 50, 1));
  std::vector<double> e(op.size(), 0.0);
  e[17] = 1.0;
  EXPECT_DOUBLE_EQ(rayleigh_quotient(e, op), op.diagonal[17]);
  std::vector<double> zero(op.size(), 0.0);
  EXPECT_THROW(rayleigh_quotient(zero, op), Error);
}

TEST(Identities, CoordinateAndSquare) {
  for (std::size_t n : {100u, 1000u, 4000u}) {
    const auto r = identity_residual_checks(interval(-3, 3, n, 1));
    EXPECT_LE(r.linear, 1e-10) << n;
    EXPECT_LE(r.quadratic, 1e-10) << n;
    EXPECT_EQ(r.constant, 0.0) << n;
  }
}
