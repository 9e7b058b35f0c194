#pragma once

#include <cstdint>
#include <variant>

#include "shrinker/spectrum.hpp"

namespace shrinker {

// Absolute tolerance used to group coinciding sums in Minkowski-sum spectra.
inline constexpr double kMergeTolerance = 1e-12;

// Binomial coefficient with C(a, b) = 0 for b < 0 or b > a. Throws
// Error{domain_error} on 64-bit overflow.
std::uint64_t binomial(std::int64_t a, std::int64_t b);

// Multiplicity of the degree-l spherical harmonics on S^n.
std::uint64_t sphere_multiplicity(int n, int degree);

// Closed spectrum of the drift operator on the round shrinker S^n(sqrt n).
// Levels are l(l+n-1)/n with the spherical-harmonic multiplicities.
EigenvalueSequence sphere_spectrum(int n, std::size_t count);

// Ornstein-Uhlenbeck spectrum on R^n: level m with multiplicity C(m+n-1, n-1).
EigenvalueSequence ou_spectrum(int n, std::size_t count);

// Spectrum of S^k(sqrt k) x R^(n-k), 1 <= k < n.
EigenvalueSequence cylinder_spectrum(int k, int n, std::size_t count);

// All levels of the Minkowski sum a + b that are exactly determined by the
// levels present in both inputs. The result carries a's kind and the sum of
// the dimensions.
EigenvalueSequence minkowski_sum(const EigenvalueSequence& a, const EigenvalueSequence& b);

// First `count` distinct levels of the Minkowski sum, with both inputs taken
// as complete lists. The result is exact for truncated inputs when each one
// carries at least `count` levels. Throws Error{insufficient_input_levels}
// when the sum has fewer than `count` levels.
EigenvalueSequence merge_spectra(const EigenvalueSequence& a, const EigenvalueSequence& b,
                                 std::size_t count);

struct SphereModel {
  int n;
};
struct EuclideanModel {
  int n;
};
struct CylinderModel {
  int k;
  int n;
};

struct ShrinkerModel {
  std::variant<SphereModel, EuclideanModel, CylinderModel> variant;
  // Codimension in R^(n+p). Metadata only.
  int codimension = 1;

  int dimension() const;
  bool compact() const;
};

struct PositionNormStats {
  int n = 0;
  double min_x2 = 0.0;
  double max_xn2 = 0.0;
  double weighted_mean_x2 = 0.0;
  bool compact = false;
};

PositionNormStats position_norm_stats(const ShrinkerModel& model);

}  // namespace shrinker
