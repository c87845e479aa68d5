#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "plrs/core.hpp"

namespace plrs {

enum class VerdictKind { Complete, Incomplete, Unknown };

std::string_view to_string(VerdictKind kind) noexcept;

namespace cert {

/// B_n >= 0 for n < L and B_n > 0 for L <= n <= 2L-1; `window` = 2L-1.
struct StrictWindow {
  std::size_t window;
};
/// B_n >= 0 for n <= m and every margin D_{m-L}, ..., D_{m-1} is >= 0.
struct DoublingWindow {
  std::size_t window;
};
struct FamilyRule {
  std::string rule;
};
struct RootTriage {
  std::string path;
};
/// B_index < 0. `witness`, when set, is an integer shown unrepresentable by
/// subset sums, independently of gap arithmetic.
struct Failure {
  std::size_t index;
  BigInt gap;
  std::optional<BigInt> witness;
};
struct HorizonExhausted {
  std::size_t horizon;
};

}  // namespace cert

using Certificate = std::variant<cert::StrictWindow, cert::DoublingWindow, cert::FamilyRule,
                                 cert::RootTriage, cert::Failure, cert::HorizonExhausted>;

struct Verdict {
  Coefficients coefficients;
  VerdictKind kind;
  Certificate certificate;
  bool conjectural = false;
  std::size_t horizon_used = 0;

  bool is_complete() const noexcept { return kind == VerdictKind::Complete; }
  bool is_incomplete() const noexcept { return kind == VerdictKind::Incomplete; }
  bool is_unknown() const noexcept { return kind == VerdictKind::Unknown; }
  /// Complete or Incomplete without resting on a conjecture.
  bool is_definite() const noexcept { return kind != VerdictKind::Unknown && !conjectural; }
};

/// "strict_window", "doubling_window", "family:<id>", "root:<path>", "failure", "horizon".
std::string certificate_tag(const Certificate& c);
std::optional<std::size_t> certificate_index(const Certificate& c);

/// {"coefficients":[...],"kind":...,"certificate":...,"index":n|null,
///  "conjectural":bool,"horizon_used":m}
nlohmann::json to_json(const Verdict& v);
/// Inverse of to_json. The failure gap is not serialized; it is restored as 0
/// and must be recomputed by the verifier. Throws Error{InvalidArgument}, or the
/// validation error for malformed coefficients.
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace plrs
