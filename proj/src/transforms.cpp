#include "plrs/transforms.hpp"

#include <vector>

#include "plrs/error.hpp"

namespace plrs {

std::string_view to_string(TransformRule rule) noexcept {
  switch (rule) {
    case TransformRule::AppendCoeff: return "append_coeff";
    case TransformRule::DecreaseLast: return "decrease_last";
    case TransformRule::MergeLastTwo: return "merge_last_two";
  }
  return "";
}

std::string_view to_string(Guarantee guarantee) noexcept {
  switch (guarantee) {
    case Guarantee::PreservesIncomplete: return "preserves_incomplete";
    case Guarantee::PreservesComplete: return "preserves_complete";
  }
  return "";
}

TransformRecord append_coeff(const Coefficients& c, std::int64_t c_new) {
  if (c_new < 1) {
    throw Error(Errc::NonPositiveAppend, "appended coefficient " + std::to_string(c_new));
  }
  std::vector<std::uint64_t> values(c.values().begin(), c.values().end());
  values.push_back(static_cast<std::uint64_t>(c_new));
  return {c, Coefficients::from_unsigned(std::move(values)), TransformRule::AppendCoeff,
          Guarantee::PreservesIncomplete};
}

TransformRecord decrease_last(const Coefficients& c, std::int64_t k_last) {
  if (k_last < 1 || static_cast<std::uint64_t>(k_last) > c.last()) {
    throw Error(Errc::RangeViolation, "new last coefficient " + std::to_string(k_last) +
                                          " outside [1, " + std::to_string(c.last()) + "]");
  }
  std::vector<std::uint64_t> values(c.values().begin(), c.values().end());
  values.back() = static_cast<std::uint64_t>(k_last);
  return {c, Coefficients::from_unsigned(std::move(values)), TransformRule::DecreaseLast,
          Guarantee::PreservesComplete};
}

TransformRecord merge_last_two(const Coefficients& c) {
  if (c.length() < 2) throw Error(Errc::TooShort, "merging needs at least two coefficients");
  std::vector<std::uint64_t> values(c.values().begin(), c.values().end() - 1);
  values.back() += c.last();
  return {c, Coefficients::from_unsigned(std::move(values)), TransformRule::MergeLastTwo,
          Guarantee::PreservesIncomplete};
}

}  // namespace plrs
