#include "shrinker/spectrum.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "shrinker/error.hpp"

namespace shrinker {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::insufficient_spectrum: return "insufficient-spectrum";
    case ErrorCode::insufficient_input_levels: return "insufficient-input-levels";
    case ErrorCode::nonpositive_entry: return "nonpositive-entry";
    case ErrorCode::unsorted_input: return "unsorted-input";
    case ErrorCode::domain_error: return "domain-error";
    case ErrorCode::invalid_shift: return "invalid-shift";
    case ErrorCode::invalid_grid: return "invalid-grid";
    case ErrorCode::zero_vector: return "zero-vector";
    case ErrorCode::negative_discriminant: return "negative-discriminant";
    case ErrorCode::wrong_kind: return "wrong-kind";
    case ErrorCode::invalid_sequence: return "invalid-sequence";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

std::string_view to_string(ProblemKind kind) noexcept {
  return kind == ProblemKind::Closed ? "closed" : "dirichlet";
}

std::string_view to_string(Provenance provenance) noexcept {
  switch (provenance) {
    case Provenance::ClosedForm: return "ClosedForm";
    case Provenance::Numerical: return "Numerical";
    case Provenance::External: return "External";
  }
  return "External";
}

EigenvalueSequence::EigenvalueSequence(ProblemKind kind, int n, std::vector<Level> entries,
                                       Provenance provenance)
    : kind_(kind), n_(n), entries_(std::move(entries)), provenance_(provenance) {
  if (n_ < 1) throw Error(ErrorCode::invalid_dimension, "n must be >= 1");
  if (entries_.empty()) throw Error(ErrorCode::invalid_sequence, "empty spectrum");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.mult < 1) throw Error(ErrorCode::invalid_sequence, "multiplicity must be >= 1");
    if (!std::isfinite(e.lambda)) throw Error(ErrorCode::invalid_sequence, "eigenvalue must be finite");
    if (provenance_ != Provenance::Numerical && e.lambda < 0.0) {
      throw Error(ErrorCode::invalid_sequence, "eigenvalue must be nonnegative");
    }
    if (i > 0 && !(e.lambda > entries_[i - 1].lambda)) {
      throw Error(ErrorCode::invalid_sequence, "levels must be strictly increasing");
    }
  }
  if (kind_ == ProblemKind::Closed && !(entries_[0].lambda == 0.0 && entries_[0].mult == 1)) {
    throw Error(ErrorCode::invalid_sequence, "closed spectrum must start at (0, 1)");
  }
  // A discrete ground state can sit below zero by the discretization error.
  if (kind_ == ProblemKind::Dirichlet && provenance_ != Provenance::Numerical &&
      !(entries_[0].lambda > 0.0)) {
    throw Error(ErrorCode::invalid_sequence,
                "Dirichlet spectrum must start at a positive eigenvalue, got " +
                    std::to_string(entries_[0].lambda));
  }
}

std::uint64_t EigenvalueSequence::total_multiplicity() const noexcept {
  std::uint64_t total = 0;
  for (const auto& e : entries_) {
    if (total > std::numeric_limits<std::uint64_t>::max() - e.mult) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total += e.mult;
  }
  return total;
}

std::vector<double> EigenvalueSequence::expanded(std::size_t count) const {
  std::vector<double> out;
  out.reserve(count);
  for (const auto& e : entries_) {
    for (std::uint64_t m = 0; m < e.mult && out.size() < count; ++m) out.push_back(e.lambda);
    if (out.size() == count) break;
  }
  return out;
}

}  // namespace shrinker
