#include "shrinker/model_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "shrinker/error.hpp"

namespace shrinker {

__extension__ typedef unsigned __int128 u128;

std::uint64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  u128 result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    // Each partial product is C(a - b + i, i), so the division is exact.
    result = result * static_cast<u128>(a - b + i) / static_cast<u128>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorCode::domain_error,
                  "binomial(" + std::to_string(a) + ", " + std::to_string(b) + ") overflows");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t sphere_multiplicity(int n, int degree) {
  return binomial(n + degree, degree) - binomial(n + degree - 2, degree - 2);
}

EigenvalueSequence sphere_spectrum(int n, std::size_t count) {
  if (n < 1) throw Error(ErrorCode::invalid_dimension, "sphere dimension must be >= 1");
  if (count < 1) throw Error(ErrorCode::invalid_sequence, "count must be >= 1");
  std::vector<Level> levels;
  levels.reserve(count);
  for (std::size_t l = 0; l < count; ++l) {
    const auto deg = static_cast<std::int64_t>(l);
    // Exact integer numerator, one rounding in the division.
    const std::int64_t numerator = deg * (deg + n - 1);
    levels.push_back({static_cast<double>(numerator) / static_cast<double>(n),
                      sphere_multiplicity(n, static_cast<int>(l))});
  }
  return {ProblemKind::Closed, n, std::move(levels), Provenance::ClosedForm};
}

EigenvalueSequence ou_spectrum(int n, std::size_t count) {
  if (n < 1) throw Error(ErrorCode::invalid_dimension, "OU dimension must be >= 1");
  if (count < 1) throw Error(ErrorCode::invalid_sequence, "count must be >= 1");
  std::vector<Level> levels;
  levels.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    const auto mi = static_cast<std::int64_t>(m);
    levels.push_back({static_cast<double>(m), binomial(mi + n - 1, n - 1)});
  }
  return {ProblemKind::Closed, n, std::move(levels), Provenance::ClosedForm};
}

EigenvalueSequence cylinder_spectrum(int k, int n, std::size_t count) {
  if (k < 1 || k >= n) {
    throw Error(ErrorCode::invalid_dimension, "cylinder needs 1 <= k < n");
  }
  // count levels of each factor: the sums (l, 0) already give count distinct
  // values no larger than either factor's top level.
  return merge_spectra(sphere_spectrum(k, count), ou_spectrum(n - k, count), count);
}

namespace {

EigenvalueSequence sum_up_to(const EigenvalueSequence& a, const EigenvalueSequence& b, double limit) {
  struct Term {
    double lambda;
    std::uint64_t mult;
  };
  std::vector<Term> terms;
  for (const auto& la : a.levels()) {
    for (const auto& lb : b.levels()) {
      const double s = la.lambda + lb.lambda;
      if (s > limit) break;
      std::uint64_t m = 0;
      if (__builtin_mul_overflow(la.mult, lb.mult, &m)) {
        throw Error(ErrorCode::domain_error, "multiplicity overflow in Minkowski sum");
      }
      terms.push_back({s, m});
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& x, const Term& y) { return x.lambda < y.lambda; });

  std::vector<Level> levels;
  for (const auto& t : terms) {
    if (!levels.empty() && t.lambda - levels.back().lambda <= kMergeTolerance) {
      levels.back().mult += t.mult;
    } else {
      levels.push_back({t.lambda, t.mult});
    }
  }
  const auto provenance = a.provenance() == b.provenance() ? a.provenance() : Provenance::External;
  return {a.kind(), a.dimension() + b.dimension(), std::move(levels), provenance};
}

}  // namespace

EigenvalueSequence minkowski_sum(const EigenvalueSequence& a, const EigenvalueSequence& b) {
  // Any level missing from a is above a.max, so sums up to a.max + b.min are
  // complete; symmetrically for b.
  return sum_up_to(a, b, std::min(a.max_level() + b.min_level(), b.max_level() + a.min_level()));
}

EigenvalueSequence merge_spectra(const EigenvalueSequence& a, const EigenvalueSequence& b,
                                 std::size_t count) {
  if (a.kind() != b.kind()) {
    throw Error(ErrorCode::wrong_kind, "cannot merge closed and Dirichlet spectra");
  }
  auto full = sum_up_to(a, b, std::numeric_limits<double>::infinity());
  if (full.level_count() < count) {
    throw Error(ErrorCode::insufficient_input_levels,
                "inputs give " + std::to_string(full.level_count()) + " levels, " +
                    std::to_string(count) + " requested");
  }
  std::vector<Level> levels(full.levels().begin(),
                            full.levels().begin() + static_cast<std::ptrdiff_t>(count));
  return {full.kind(), full.dimension(), std::move(levels), full.provenance()};
}

int ShrinkerModel::dimension() const {
  return std::visit([](const auto& m) { return m.n; }, variant);
}

bool ShrinkerModel::compact() const { return std::holds_alternative<SphereModel>(variant); }

PositionNormStats position_norm_stats(const ShrinkerModel& model) {
  PositionNormStats stats;
  stats.n = model.dimension();
  stats.compact = model.compact();
  if (const auto* s = std::get_if<SphereModel>(&model.variant)) {
    // |X|^2 = n everywhere and X is normal.
    stats.min_x2 = s->n;
    stats.max_xn2 = s->n;
    stats.weighted_mean_x2 = s->n;
  } else if (const auto* e = std::get_if<EuclideanModel>(&model.variant)) {
    stats.min_x2 = 0.0;
    stats.max_xn2 = 0.0;
    stats.weighted_mean_x2 = e->n;  // Gaussian second moment
  } else {
    const auto& c = std::get<CylinderModel>(model.variant);
    if (c.k < 1 || c.k >= c.n) throw Error(ErrorCode::invalid_dimension, "cylinder needs 1 <= k < n");
    // |X|^2 = k + |t|^2 with t in R^(n-k); the normal part is the sphere radius.
    stats.min_x2 = c.k;
    stats.max_xn2 = c.k;
    stats.weighted_mean_x2 = c.k + (c.n - c.k);
  }
  if (stats.n < 1) throw Error(ErrorCode::invalid_dimension, "model dimension must be >= 1");
  return stats;
}

}  // namespace shrinker
