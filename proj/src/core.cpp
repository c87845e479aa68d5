#include "plrs/core.hpp"

#include <algorithm>
#include <numeric>

#include "plrs/error.hpp"

namespace plrs {

namespace {

void check_shape(std::span<const std::uint64_t> values) {
  if (values.empty()) throw Error(Errc::EmptyVector, "coefficient vector is empty");
  if (values.front() == 0) throw Error(Errc::LeadingZero, "c_1 must be positive");
  if (values.back() == 0) throw Error(Errc::TrailingZero, "c_L must be positive");
}

}  // namespace

Coefficients Coefficients::validate(std::span<const std::int64_t> values) {
  std::vector<std::uint64_t> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw Error(Errc::NegativeEntry,
                  "c_" + std::to_string(i + 1) + " = " + std::to_string(values[i]));
    }
    out.push_back(static_cast<std::uint64_t>(values[i]));
  }
  check_shape(out);
  return Coefficients(std::move(out));
}

Coefficients Coefficients::from_unsigned(std::vector<std::uint64_t> values) {
  check_shape(values);
  return Coefficients(std::move(values));
}

std::uint64_t Coefficients::at(std::size_t i) const {
  if (i < 1 || i > values_.size()) {
    throw Error(Errc::RangeViolation, "coefficient index " + std::to_string(i));
  }
  return values_[i - 1];
}

std::uint64_t Coefficients::max() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

std::uint64_t Coefficients::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), std::uint64_t{0});
}

std::string Coefficients::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

TermSequence::TermSequence(Coefficients c, std::size_t n) : coefficients_(std::move(c)) {
  if (n < 1) throw Error(Errc::InvalidArgument, "at least one term is required");
  grow_to(n);
}

TermSequence TermSequence::extended(std::size_t n) const {
  if (n < 1) throw Error(Errc::InvalidArgument, "at least one term is required");
  if (n <= terms_.size()) {
    return TermSequence(coefficients_,
                        std::vector<BigInt>(terms_.begin(), terms_.begin() + n));
  }
  TermSequence out(coefficients_, terms_);
  out.grow_to(n);
  return out;
}

const BigInt& TermSequence::term(std::size_t n) const {
  if (n < 1 || n > terms_.size()) {
    throw Error(Errc::RangeViolation, "term index " + std::to_string(n));
  }
  return terms_[n - 1];
}

void TermSequence::grow_to(std::size_t n) {
  const auto c = coefficients_.values();
  const std::size_t L = c.size();
  terms_.reserve(n);
  if (terms_.empty()) terms_.emplace_back(1);
  while (terms_.size() < n) {
    // m terms known; computing H_{m+1} from H_m, H_{m-1}, ...
    const std::size_t m = terms_.size();
    const std::size_t reach = std::min(m, L);
    BigInt next = (m < L) ? 1 : 0;
    for (std::size_t i = 0; i < reach; ++i) {
      if (c[i] != 0) next += terms_[m - 1 - i] * c[i];
    }
    terms_.push_back(std::move(next));
  }
}

TermSequence generate_terms(const Coefficients& c, std::size_t n) { return TermSequence(c, n); }

}  // namespace plrs
