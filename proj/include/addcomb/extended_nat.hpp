#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace addcomb {

/// A non-negative integer or the distinguished value Infinity, which stands
/// for the cardinality of the naturals (infimum of the empty set).
class extended_nat {
 public:
  using value_type = std::uint64_t;

  constexpr extended_nat() = default;
  constexpr extended_nat(value_type v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr extended_nat infinity() {
    extended_nat e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  constexpr value_type value() const {
    assert(!infinite_ && "value() of Infinity");
    return value_;
  }

  friend constexpr bool operator==(const extended_nat& a, const extended_nat& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(const extended_nat& a,
                                                    const extended_nat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "infinity" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const extended_nat& e) {
    return os << e.to_string();
  }

 private:
  value_type value_ = 0;
  bool infinite_ = false;
};

constexpr extended_nat min(extended_nat a, extended_nat b) { return b < a ? b : a; }
constexpr extended_nat max(extended_nat a, extended_nat b) { return a < b ? b : a; }

}  // namespace addcomb
