#pragma once

#include <stdexcept>
#include <string>

namespace fex {

enum class ErrorKind {
  invalid_spec,
  invalid_element,
  side_mismatch,
  invalid_base_set,
  invalid_peak,
  invalid_operator,
  length_mismatch,
  resolution,
  budget,
  config,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Enumeration-guard violations (M^n or 2^n over budget).
  bool is_guard() const noexcept { return kind_ == ErrorKind::budget; }

 private:
  ErrorKind kind_;
};

}  // namespace fex
