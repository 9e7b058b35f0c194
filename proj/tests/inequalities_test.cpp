#include <gtest/gtest.h>

#include <cmath>

#include "shrinker/dirichlet.hpp"
#include "shrinker/error.hpp"
#include "shrinker/inequalities.hpp"
#include "shrinker/model_spectra.hpp"

using namespace shrinker;

TEST(Shift, Examples) {
  EXPECT_DOUBLE_EQ(shift_constant(3, 3), 0.75);
  EXPECT_DOUBLE_EQ(shift_constant(2, 0), 1.0);
  EXPECT_DOUBLE_EQ(shift_constant(5, 5), 1.25);
}

TEST(Yang, SphereHandExample) {
  const auto r = yang_check(sphere_spectrum(3, 3), 3, 3, 0);
  EXPECT_NEAR(r.lhs, 1.0, 1e-15);
  EXPECT_NEAR(r.rhs, 1.0, 1e-15);
  EXPECT_NEAR(r.gap, 0.0, 1e-15);
  EXPECT_TRUE(r.satisfied);
  EXPECT_DOUBLE_EQ(r.shift, 0.75);
}

TEST(Yang, SphereIsSharp) {
  const auto s = sphere_spectrum(2, 40);
  for (std::size_t k = 0; k <= 30; ++k) {
    const auto r = yang_check(s, 2, 2, k);
    EXPECT_TRUE(r.satisfied) << k;
    EXPECT_LE(std::abs(r.relative_gap), 1e-9) << k;
  }
}

TEST(Yang, EuclideanExample) {
  const auto r = yang_check(ou_spectrum(2, 3), 2, 0, 0);
  EXPECT_DOUBLE_EQ(r.lhs, 1.0);
  EXPECT_DOUBLE_EQ(r.rhs, 2.0);
  EXPECT_TRUE(r.satisfied);
}

TEST(Yang, OrnsteinUhlenbeckSweep) {
  for (int n = 1; n <= 4; ++n) {
    const auto s = ou_spectrum(n, 60);
    for (std::size_t k = 0; k <= 50; ++k) EXPECT_TRUE(yang_check(s, n, 0, k).satisfied) << n << " " << k;
  }
}

TEST(Yang, LevelAndExpandedInputsAgree) {
  const auto s = sphere_spectrum(4, 6);
  const auto values = s.expanded(40);
  for (std::size_t k = 0; k < 30; ++k) {
    const auto a = yang_check(s, 4, 4, k);
    const auto b = yang_check(values, ProblemKind::Closed, 4, 4, k);
    EXPECT_EQ(a.lhs, b.lhs);
    EXPECT_EQ(a.rhs, b.rhs);
  }
}

TEST(Yang, ShortSpectrumThrows) {
  const auto s = sphere_spectrum(2, 1);
  try {
    yang_check(s, 2, 2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::insufficient_spectrum);
  }
}

TEST(YangNextBound, Examples) {
  const std::vector<double> zero{0.0};
  EXPECT_NEAR(yang_next_bound(zero, 3, 3), 1.0, 1e-14);
  for (int n = 1; n <= 6; ++n)
    for (double x2 : {0.0, 0.5 * n, 1.0 * n})
      EXPECT_NEAR(yang_next_bound(zero, n, x2), (2 * n - x2) / n, 1e-13);
  // Level 1 of S^4 has multiplicity 5, so this prefix is followed by another 1.
  const std::vector<double> sphere4{0, 1, 1, 1, 1};
  EXPECT_NEAR(yang_next_bound(sphere4, 4, 4), 2.4, 1e-14);
  EXPECT_GE(yang_next_bound(sphere4, 4, 4), sphere_spectrum(4, 3).expanded(6)[5]);
  const std::vector<double> full_level{0, 1, 1, 1, 1, 1};
  EXPECT_NEAR(yang_next_bound(full_level, 4, 4), 2.5, 1e-14);
}

TEST(YangNextBound, DominatesSphereSpectrum) {
  for (int n = 2; n <= 6; ++n) {
    const auto values = sphere_spectrum(n, 8).expanded(60);
    for (std::size_t k = 1; k < values.size(); ++k) {
      std::span<const double> prefix(values.data(), k);
      EXPECT_GE(yang_next_bound(prefix, n, n), values[k] - 1e-9 * values[k]) << n << " " << k;
    }
  }
}

TEST(LowerOrder, SolverExample) {
  DirichletProblem p{1, {{-6, 6}}, 2000, 4};
  const auto s = solve(p);
  const auto r = lower_order_check(s, 1, 0);
  EXPECT_TRUE(r.satisfied);
  EXPECT_NEAR(r.lhs, 1.0, 1e-3);
  EXPECT_NEAR(r.rhs, 2.0, 1e-3);
}

TEST(LowerOrder, ConstantSequence) {
  EigenvalueSequence s(ProblemKind::Dirichlet, 3, {{2.0, 4}}, Provenance::External);
  const auto r = lower_order_check(s, 3, 0);
  EXPECT_DOUBLE_EQ(r.lhs, 0.0);
  EXPECT_TRUE(r.satisfied);
}

TEST(LowerOrder, Rectangle) {
  DirichletProblem p{2, {{-5, 5}, {-5, 5}}, 300, 3};
  const auto s = solve(p);
  const auto r = lower_order_check(s, 2, 0);
  EXPECT_TRUE(r.satisfied);
}

TEST(LowerOrder, RejectsClosedSpectrum) {
  try {
    lower_order_check(sphere_spectrum(2, 3), 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::wrong_kind);
  }
}

TEST(Prop21, Verdicts) {
  EXPECT_EQ(prop21_check(position_norm_stats({SphereModel{5}})), Prop21Verdict::Holds);
  EXPECT_EQ(prop21_check(position_norm_stats({SphereModel{1}})), Prop21Verdict::Holds);
  EXPECT_EQ(prop21_check(position_norm_stats({EuclideanModel{2}})), Prop21Verdict::NotApplicable);
  EXPECT_EQ(prop21_check(position_norm_stats({CylinderModel{1, 2}})), Prop21Verdict::NotApplicable);
}
