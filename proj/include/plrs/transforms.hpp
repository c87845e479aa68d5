#pragma once

#include <cstdint>
#include <string_view>

#include "plrs/core.hpp"

namespace plrs {

enum class TransformRule { AppendCoeff, DecreaseLast, MergeLastTwo };
enum class Guarantee { PreservesIncomplete, PreservesComplete };

std::string_view to_string(TransformRule rule) noexcept;
std::string_view to_string(Guarantee guarantee) noexcept;

/// The guarantee only applies when the input satisfies the hypothesis (input
/// incomplete for PreservesIncomplete, complete for PreservesComplete); the
/// record is returned either way.
struct TransformRecord {
  Coefficients input;
  Coefficients output;
  TransformRule rule;
  Guarantee guarantee;
};

/// [c_1..c_L] -> [c_1..c_L, c_new]. Throws Error{NonPositiveAppend}.
TransformRecord append_coeff(const Coefficients& c, std::int64_t c_new);

/// [c_1..c_L] -> [c_1..c_{L-1}, k_L], 1 <= k_L <= c_L. Throws Error{RangeViolation}.
TransformRecord decrease_last(const Coefficients& c, std::int64_t k_last);

/// [c_1..c_L] -> [c_1..c_{L-2}, c_{L-1} + c_L]. Throws Error{TooShort} for L = 1.
TransformRecord merge_last_two(const Coefficients& c);

}  // namespace plrs
