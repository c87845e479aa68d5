#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plrs {

enum class Errc {
  EmptyVector,
  LeadingZero,
  TrailingZero,
  NegativeEntry,
  HorizonTooSmall,
  BudgetExceeded,
  OutOfProvenRange,
  ShapeViolation,
  NonPositiveAppend,
  RangeViolation,
  TooShort,
  CostCap,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable code; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace plrs
