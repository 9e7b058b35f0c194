#pragma once

#include <span>

#include "shrinker/model_spectra.hpp"
#include "shrinker/spectrum.hpp"

namespace shrinker {

// Relative tolerance for every inequality verdict.
inline constexpr double kCheckTolerance = 1e-9;

// (2n - min|X|^2) / 4, the shift that makes every lambda_i + shift positive.
double shift_constant(int n, double min_x2);

struct YangReport {
  std::size_t k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double relative_gap = 0.0;
  bool satisfied = false;
  double shift = 0.0;
  ProblemKind kind = ProblemKind::Closed;
};

// Quadratic universal inequality at truncation index k:
//   sum_i (l_{k+1} - l_i)^2 <= (4/n) sum_i (l_{k+1} - l_i)(l_i + shift).
// Closed spectra sum from i = 0, Dirichlet spectra from i = 1.
YangReport yang_check(const EigenvalueSequence& seq, int n, double min_x2, std::size_t k);

// Same check on an already expanded list; eigenvalues[0] is l_0 (Closed) or
// l_1 (Dirichlet).
YangReport yang_check(std::span<const double> eigenvalues, ProblemKind kind, int n,
                      double min_x2, std::size_t k);

// Largest value of the next eigenvalue for which the inequality holds with the
// given prefix (equality root of the quadratic).
double yang_next_bound(std::span<const double> prefix, int n, double min_x2);
double yang_next_bound_shifted(std::span<const double> prefix, int n, double shift);

struct LowerOrderReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

// sum_{j=1}^n (l_{j+1} - l_1) <= (2n - inf|X|^2) + 4 l_1 on a Dirichlet spectrum.
LowerOrderReport lower_order_check(const EigenvalueSequence& seq, int n, double inf_x2);

enum class Prop21Verdict { Holds, Violated, NotApplicable };

// min|X|^2 <= n <= max|X^N|^2 for compact models.
Prop21Verdict prop21_check(const PositionNormStats& stats);

}  // namespace shrinker
