#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace shrinker {

enum class ProblemKind { Closed, Dirichlet };
enum class Provenance { ClosedForm, Numerical, External };

std::string_view to_string(ProblemKind kind) noexcept;
std::string_view to_string(Provenance provenance) noexcept;

struct Level {
  double lambda = 0.0;
  std::uint64_t mult = 1;

  friend bool operator==(const Level&, const Level&) = default;
};

/// Sorted multiset of eigenvalues, stored as distinct levels with
/// multiplicities.
///
/// Closed spectra start at the level (0, 1); Dirichlet spectra start at a
/// strictly positive level. Construction validates both rules and throws
/// `Error{invalid_sequence}` otherwise. Numerical spectra are exempt from the
/// sign rules: a discrete ground state may sit slightly below zero.
class EigenvalueSequence {
 public:
  EigenvalueSequence(ProblemKind kind, int n, std::vector<Level> entries,
                     Provenance provenance);

  ProblemKind kind() const noexcept { return kind_; }
  int dimension() const noexcept { return n_; }
  Provenance provenance() const noexcept { return provenance_; }
  const std::vector<Level>& levels() const noexcept { return entries_; }
  std::size_t level_count() const noexcept { return entries_.size(); }

  // Number of eigenvalues counted with multiplicity (saturates at UINT64_MAX).
  std::uint64_t total_multiplicity() const noexcept;

  // The first `count` eigenvalues repeated according to multiplicity. Returns
  // fewer when the sequence is shorter.
  std::vector<double> expanded(std::size_t count) const;

  // Largest stored level.
  double max_level() const noexcept { return entries_.back().lambda; }
  double min_level() const noexcept { return entries_.front().lambda; }

  friend bool operator==(const EigenvalueSequence&, const EigenvalueSequence&) = default;

 private:
  ProblemKind kind_;
  int n_;
  std::vector<Level> entries_;
  Provenance provenance_;
};

}  // namespace shrinker
