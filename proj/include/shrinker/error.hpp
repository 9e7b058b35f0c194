#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shrinker {

enum class ErrorCode {
  invalid_dimension,
  insufficient_spectrum,
  insufficient_input_levels,
  nonpositive_entry,
  unsorted_input,
  domain_error,
  invalid_shift,
  invalid_grid,
  zero_vector,
  negative_discriminant,
  wrong_kind,
  invalid_sequence,
  parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shrinker
