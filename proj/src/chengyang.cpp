#include "shrinker/chengyang.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shrinker/error.hpp"
#include "shrinker/inequalities.hpp"
#include "shrinker/summation.hpp"

namespace shrinker {

namespace {

void require_positive_nondecreasing(std::span<const double> mu) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!(mu[i] > 0.0)) {
      throw Error(ErrorCode::nonpositive_entry, "mu[" + std::to_string(i) + "] must be positive");
    }
    if (i > 0 && mu[i] < mu[i - 1]) {
      throw Error(ErrorCode::unsorted_input, "mu must be nondecreasing");
    }
  }
}

void require_dimension(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_dimension, "n must be >= 1");
}

// Statistics without validation, used in the recursion loop.
SequenceStats stats_unchecked(std::span<const double> mu, int n) {
  const auto k = mu.size();
  CompensatedSum sum;
  CompensatedSum squares;
  for (const double m : mu) {
    sum += m;
    squares += m * m;
  }
  const double mean = sum.value() / static_cast<double>(k);
  CompensatedSum spread;
  for (const double m : mu) spread += (m - mean) * (m - mean);

  SequenceStats s;
  s.k = k;
  s.n = n;
  s.lambda_mean = mean;
  s.square_mean = squares.value() / static_cast<double>(k);
  // (1 + 2/n) Lambda^2 - T == (2/n) Lambda^2 - variance.
  s.f = 2.0 / n * mean * mean - spread.value() / static_cast<double>(k);
  return s;
}

bool within(double lhs, double rhs) {
  return lhs <= rhs + kCheckTolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

SequenceStats sequence_stats(std::span<const double> mu, int n) {
  require_dimension(n);
  if (mu.empty()) throw Error(ErrorCode::insufficient_spectrum, "empty sequence");
  require_positive_nondecreasing(mu);
  return stats_unchecked(mu, n);
}

double recursion_coefficient(int n, std::size_t k) {
  require_dimension(n);
  if (k < 1) throw Error(ErrorCode::domain_error, "k must be >= 1");
  const double kd = static_cast<double>(k);
  const double nd = n;
  return 1.0 - 1.0 / (3.0 * nd) * std::pow(kd / (kd + 1.0), 4.0 / nd) * (1.0 + 2.0 / nd) *
                   (1.0 + 4.0 / nd) / std::pow(kd + 1.0, 3.0);
}

RecursionReport recursion_check(std::span<const double> mu, int n) {
  require_dimension(n);
  if (mu.size() < 2) throw Error(ErrorCode::insufficient_spectrum, "need at least two entries");
  require_positive_nondecreasing(mu);

  RecursionReport report;
  bool all_hypotheses = true;
  SequenceStats current = stats_unchecked(mu.first(1), n);
  for (std::size_t k = 1; k < mu.size(); ++k) {
    const double next = mu[k];
    CompensatedSum lhs;
    CompensatedSum rhs;
    for (std::size_t i = 0; i < k; ++i) {
      const double d = next - mu[i];
      lhs += d * d;
      rhs += mu[i] * d;
    }
    RecursionStep step;
    step.k = k;
    step.hypothesis_holds = within(lhs.value(), 4.0 / n * rhs.value());

    const SequenceStats following = stats_unchecked(mu.first(k + 1), n);
    const double kd = static_cast<double>(k);
    step.f_next = following.f;
    step.f_next_bound =
        recursion_coefficient(n, k) * std::pow((kd + 1.0) / kd, 4.0 / n) * current.f;
    step.conclusion_holds = within(step.f_next, step.f_next_bound);

    all_hypotheses = all_hypotheses && step.hypothesis_holds;
    if (all_hypotheses && !step.conclusion_holds) report.implication_holds = false;
    report.steps.push_back(step);
    current = following;
  }
  return report;
}

double a1(int n) {
  require_dimension(n);
  const double nd = n;
  const double np1 = nd + 1.0;
  return nd * (1.0 + 4.0 / nd) * std::sqrt(1.0 + 8.0 / np1 + 8.0 / (np1 * np1)) /
             std::pow(np1, 2.0 / nd) -
         nd;
}

double a2(int k, int n) {
  if (k < 1 || n < k) {
    throw Error(ErrorCode::domain_error, "a2(k, n) needs 1 <= k <= n");
  }
  const double kd = k;
  const double nd = n;
  const double denominator = nd * nd + 5.0 * nd - 4.0 * (kd - 1.0);
  if (!(denominator > 0.0)) {
    throw Error(ErrorCode::domain_error, "a2 denominator n^2 + 5n - 4(k-1) must be positive");
  }
  return nd / std::pow(kd, 2.0 / nd) * (1.0 + 4.0 * (nd + kd + 4.0) / denominator) - nd;
}

double a2max(int k) {
  if (k < 1 || k > 400) throw Error(ErrorCode::domain_error, "a2max(k) needs 1 <= k <= 400");
  double best = a2(k, k);
  for (int n = k + 1; n <= 400; ++n) best = std::max(best, a2(k, n));
  return best;
}

double a3(int k) {
  if (k < 1 || k >= 400) throw Error(ErrorCode::domain_error, "a3(k) needs 1 <= k < 400");
  const double kd = k;
  return 4.0 / (1.0 - kd / 400.0) - 2.0 * std::log(kd);
}

double a_coeff(int m) {
  if (m < 0 || m > kMaxCoefficientArgument) {
    throw Error(ErrorCode::domain_error,
                "a(m) needs 0 <= m <= " + std::to_string(kMaxCoefficientArgument));
  }
  if (m == 0) return 4.0;
  return std::max({a1(m), a2max(m + 1), a3(m + 1)});
}

std::vector<Table1Row> table1() {
  std::vector<Table1Row> rows;
  rows.reserve(41);
  for (int k = 1; k <= 41; ++k) rows.push_back({k, a1(k), a2max(k + 1), a3(k + 1)});
  return rows;
}

double round_half_up_2(double x) { return std::floor(x * 100.0 + 0.5) / 100.0; }

namespace {

double growth(int n, std::size_t k) {
  return std::pow(static_cast<double>(k), 2.0 / n);
}

ChengYangBound make_bound(int n, double mu_1, std::size_t k, BoundSource source) {
  ChengYangBound b;
  b.k = k;
  b.n = n;
  b.mu_1 = mu_1;
  b.source = source;
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(n), k - 1);
  if (m > static_cast<std::size_t>(kMaxCoefficientArgument)) {
    // Only reachable with n >= 399 and k >= 400, inside the coefficient-free regime.
    b.coefficient_a = 0.0;
  } else {
    b.coefficient_a = a_coeff(static_cast<int>(m));
  }
  b.bound_value = (1.0 + b.coefficient_a / n) * mu_1 * growth(n, k);
  if (n >= 41 && k >= 41) b.simplified_bound = mu_1 * growth(n, k);
  return b;
}

}  // namespace

ChengYangBound thm12_bound(int n, double min_x2, std::size_t k) {
  require_dimension(n);
  if (k < 1) throw Error(ErrorCode::domain_error, "k must be >= 1");
  const double shift = shift_constant(n, min_x2);
  if (!(shift > 0.0)) throw Error(ErrorCode::invalid_shift, "min |X|^2 must be below 2n");
  return make_bound(n, shift, k, BoundSource::Thm12);
}

ChengYangBound thm52_bound(int n, double inf_x2, double lambda_1, std::size_t k) {
  require_dimension(n);
  if (k < 1) throw Error(ErrorCode::domain_error, "k must be >= 1");
  const double shift = shift_constant(n, inf_x2);
  if (!(shift > 0.0)) throw Error(ErrorCode::invalid_shift, "inf |X|^2 must be below 2n");
  const double mu_1 = lambda_1 + shift;
  if (!(mu_1 > 0.0)) throw Error(ErrorCode::domain_error, "lambda_1 + shift must be positive");
  return make_bound(n, mu_1, k, BoundSource::Thm52);
}

double eq44_bound(int n, double mu_1, std::size_t k) {
  require_dimension(n);
  if (k < 1) throw Error(ErrorCode::domain_error, "k must be >= 1");
  if (!(mu_1 > 0.0)) throw Error(ErrorCode::domain_error, "mu_1 must be positive");
  return (1.0 + 4.0 / n) * growth(n, k) * mu_1;
}

}  // namespace shrinker
