#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

namespace addcomb {

using element = std::uint32_t;

/// Largest carrier a bit-vector set can address.
inline constexpr std::size_t max_carrier = 64;

/// A subset of a carrier {0, ..., n-1}, n <= 64, stored as one machine word.
/// The carrier size is not recorded; membership is checked against the
/// ambient semigroup where it matters.
class element_set {
 public:
  using bits_type = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = element;
    using difference_type = std::ptrdiff_t;
    using pointer = const element*;
    using reference = element;

    constexpr iterator() = default;
    constexpr explicit iterator(bits_type rest) : rest_(rest) {}

    constexpr element operator*() const { return static_cast<element>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    bits_type rest_ = 0;
  };

  constexpr element_set() = default;
  constexpr explicit element_set(bits_type bits) : bits_(bits) {}
  constexpr element_set(std::initializer_list<element> members) {
    for (element e : members) insert(e);
  }

  static constexpr element_set singleton(element e) { return element_set(bit(e)); }

  /// The whole carrier {0, ..., n-1}.
  static constexpr element_set full(std::size_t n) {
    assert(n <= max_carrier);
    return element_set(n == max_carrier ? ~bits_type{0} : (bits_type{1} << n) - 1);
  }

  constexpr bits_type bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(element e) const { return e < max_carrier && (bits_ & bit(e)) != 0; }

  /// Smallest member; the set must be non-empty.
  constexpr element front() const {
    assert(bits_ != 0);
    return static_cast<element>(std::countr_zero(bits_));
  }

  constexpr void insert(element e) { bits_ |= bit(e); }
  constexpr void erase(element e) { bits_ &= ~bit(e); }

  constexpr bool subset_of(element_set other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(element_set other) const { return (bits_ & other.bits_) != 0; }

  /// Index of the highest member plus one (0 for the empty set).
  constexpr std::size_t span() const {
    return bits_ == 0 ? 0 : max_carrier - static_cast<std::size_t>(std::countl_zero(bits_));
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<element> to_vector() const { return {begin(), end()}; }

  constexpr element_set& operator|=(element_set o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr element_set& operator&=(element_set o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr element_set& operator-=(element_set o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr element_set operator|(element_set a, element_set b) { return a |= b; }
  friend constexpr element_set operator&(element_set a, element_set b) { return a &= b; }
  /// Set difference.
  friend constexpr element_set operator-(element_set a, element_set b) { return a -= b; }

  friend constexpr bool operator==(element_set, element_set) = default;
  friend constexpr auto operator<=>(element_set a, element_set b) { return a.bits_ <=> b.bits_; }

  /// Set literal form, e.g. "{0,3,5}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (element e : *this) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, element_set s) { return os << s.to_string(); }

 private:
  static constexpr bits_type bit(element e) {
    assert(e < max_carrier);
    return bits_type{1} << e;
  }

  bits_type bits_ = 0;
};

}  // namespace addcomb
