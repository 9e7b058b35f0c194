#include "shrinker/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "shrinker/error.hpp"
#include "shrinker/summation.hpp"

namespace shrinker {

double shift_constant(int n, double min_x2) { return (2.0 * n - min_x2) / 4.0; }

YangReport yang_check(std::span<const double> eigenvalues, ProblemKind kind, int n,
                      double min_x2, std::size_t k) {
  if (n < 1) throw Error(ErrorCode::invalid_dimension, "n must be >= 1");
  // Closed: l_0..l_{k+1} at positions 0..k+1. Dirichlet: l_1..l_{k+1} at 0..k.
  const std::size_t first = kind == ProblemKind::Closed ? 0 : 1;
  const std::size_t needed = k + 2 - first;
  if (eigenvalues.size() < needed) {
    throw Error(ErrorCode::insufficient_spectrum,
                "need " + std::to_string(needed) + " eigenvalues for k = " + std::to_string(k) +
                    ", have " + std::to_string(eigenvalues.size()));
  }

  YangReport report;
  report.k = k;
  report.kind = kind;
  report.shift = shift_constant(n, min_x2);

  const double next = eigenvalues[needed - 1];
  CompensatedSum lhs;
  CompensatedSum rhs;
  for (std::size_t i = 0; i + 1 < needed; ++i) {
    const double d = next - eigenvalues[i];
    lhs += d * d;
    rhs += d * (eigenvalues[i] + report.shift);
  }
  report.lhs = lhs.value();
  report.rhs = 4.0 / n * rhs.value();
  report.gap = report.rhs - report.lhs;
  report.relative_gap =
      report.gap / std::max(report.rhs, std::numeric_limits<double>::min());
  report.satisfied = report.gap >= -kCheckTolerance * std::max(1.0, report.rhs);
  return report;
}

YangReport yang_check(const EigenvalueSequence& seq, int n, double min_x2, std::size_t k) {
  const std::size_t needed = seq.kind() == ProblemKind::Closed ? k + 2 : k + 1;
  return yang_check(seq.expanded(needed), seq.kind(), n, min_x2, k);
}

double yang_next_bound_shifted(std::span<const double> prefix, int n, double shift) {
  if (n < 1) throw Error(ErrorCode::invalid_dimension, "n must be >= 1");
  if (prefix.empty()) throw Error(ErrorCode::insufficient_spectrum, "empty prefix");
  // sum (x - l_i)^2 - (4/n) sum (x - l_i)(l_i + s) = A x^2 + B x + C.
  const double m = static_cast<double>(prefix.size());
  CompensatedSum s1;
  CompensatedSum s2;
  CompensatedSum shifted;
  CompensatedSum cross;
  for (const double l : prefix) {
    s1 += l;
    s2 += l * l;
    shifted += l + shift;
    cross += l * (l + shift);
  }
  const double c4 = 4.0 / n;
  const double half_b = -(s1.value() + 0.5 * c4 * shifted.value());
  const double c = s2.value() + c4 * cross.value();
  const double disc = half_b * half_b - m * c;
  if (disc < -kCheckTolerance * std::max(1.0, half_b * half_b)) {
    throw Error(ErrorCode::negative_discriminant,
                "prefix violates the inequality; discriminant " + std::to_string(disc));
  }
  const double root = (-half_b + std::sqrt(std::max(disc, 0.0))) / m;
  return std::max(root, prefix.back());
}

double yang_next_bound(std::span<const double> prefix, int n, double min_x2) {
  return yang_next_bound_shifted(prefix, n, shift_constant(n, min_x2));
}

LowerOrderReport lower_order_check(const EigenvalueSequence& seq, int n, double inf_x2) {
  if (seq.kind() != ProblemKind::Dirichlet) {
    throw Error(ErrorCode::wrong_kind, "lower-order check applies to Dirichlet spectra");
  }
  if (n < 1) throw Error(ErrorCode::invalid_dimension, "n must be >= 1");
  const auto values = seq.expanded(static_cast<std::size_t>(n) + 1);
  if (values.size() < static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::insufficient_spectrum,
                "need " + std::to_string(n + 1) + " Dirichlet eigenvalues");
  }
  const double first = values[0];
  CompensatedSum lhs;
  for (int j = 1; j <= n; ++j) lhs += values[static_cast<std::size_t>(j)] - first;
  LowerOrderReport report;
  report.lhs = lhs.value();
  report.rhs = (2.0 * n - inf_x2) + 4.0 * first;
  report.satisfied = report.lhs <= report.rhs + kCheckTolerance * std::max(1.0, std::abs(report.rhs));
  return report;
}

Prop21Verdict prop21_check(const PositionNormStats& stats) {
  if (!stats.compact) return Prop21Verdict::NotApplicable;
  const double n = stats.n;
  return stats.min_x2 <= n && n <= stats.max_xn2 ? Prop21Verdict::Holds : Prop21Verdict::Violated;
}

}  // namespace shrinker
