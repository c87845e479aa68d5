#pragma once

#include <optional>
#include <string>

#include "plrs/families.hpp"
#include "plrs/verdict.hpp"

namespace plrs {

struct VerificationResult {
  bool valid;
  std::string reason;
};

/// Re-derives a verdict's certificate from scratch: failures and windows are
/// re-checked on a fresh gap trace, family rules are re-classified, triage
/// paths are re-run. Serialized verdicts do not carry the failure gap, so only
/// its sign and position are checked.
VerificationResult verify_verdict(const Verdict& v);

/// Recognizes the family a coefficient vector belongs to under `rule_id`.
std::optional<FamilyShape> match_family(const Coefficients& c, const std::string& rule_id);

}  // namespace plrs
