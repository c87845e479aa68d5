#include "plrs/error.hpp"

namespace plrs {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyVector: return "EmptyVector";
    case Errc::LeadingZero: return "LeadingZero";
    case Errc::TrailingZero: return "TrailingZero";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::HorizonTooSmall: return "HorizonTooSmall";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::OutOfProvenRange: return "OutOfProvenRange";
    case Errc::ShapeViolation: return "ShapeViolation";
    case Errc::NonPositiveAppend: return "NonPositiveAppend";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::TooShort: return "TooShort";
    case Errc::CostCap: return "CostCap";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace plrs
