#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "element_set.hpp"
#include "semigroup.hpp"

namespace addcomb {

/// X + Y = {x + y : x in X, y in Y}.
inline element_set sumset(const finite_semigroup& a, element_set x, element_set y) {
  element_set out;
  for (element u : x)
    for (element v : y) out.insert(a.op(u, v));
  return out;
}

/// Z_1 + ... + Z_k, left to right. Empty list yields the empty set.
inline element_set sumset(const finite_semigroup& a, std::span<const element_set> summands) {
  if (summands.empty()) return {};
  element_set acc = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) acc = sumset(a, acc, summands[i]);
  return acc;
}

/// z + X
inline element_set translate_left(const finite_semigroup& a, element z, element_set x) {
  return sumset(a, element_set::singleton(z), x);
}

/// X + z
inline element_set translate_right(const finite_semigroup& a, element_set x, element z) {
  return sumset(a, x, element_set::singleton(z));
}

/// kZ by strictly left-to-right repeated sumset.
inline element_set n_fold_left_to_right(const finite_semigroup& a, element_set z, std::size_t k) {
  assert(k >= 1);
  element_set acc = z;
  for (std::size_t i = 1; i < k; ++i) acc = sumset(a, acc, z);
  return acc;
}

/// kZ by binary doubling. Valid in any semigroup since kZ does not depend on
/// parenthesization.
inline element_set n_fold_doubling(const finite_semigroup& a, element_set z, std::size_t k) {
  assert(k >= 1);
  std::optional<element_set> acc;
  element_set power = z;  // 2^i Z
  for (;;) {
    if (k & 1) acc = acc ? sumset(a, *acc, power) : power;
    k >>= 1;
    if (k == 0) break;
    power = sumset(a, power, power);
  }
  return *acc;
}

/// kZ; doubling on commutative semigroups, left to right otherwise.
inline element_set n_fold(const finite_semigroup& a, element_set z, std::size_t k) {
  return a.is_commutative() ? n_fold_doubling(a, z, k) : n_fold_left_to_right(a, z, k);
}

/// X - Y = {z : (z + Y) meets X}, by full carrier scan.
inline element_set right_difference(const finite_semigroup& a, element_set x, element_set y) {
  element_set out;
  for (element z = 0; z < a.size(); ++z)
    for (element v : y)
      if (x.contains(a.op(z, v))) {
        out.insert(z);
        break;
      }
  return out;
}

/// -X + Y = {z : (X + z) meets Y}, by full carrier scan.
inline element_set left_difference(const finite_semigroup& a, element_set x, element_set y) {
  element_set out;
  for (element z = 0; z < a.size(); ++z)
    for (element u : x)
      if (y.contains(a.op(u, z))) {
        out.insert(z);
        break;
      }
  return out;
}

struct span_check_result {
  bool doubling_absorbed;   // X + 2Y within X + Y
  bool all_multiples;       // X + nY within X + Y for every n >= 1
  bool closure_equal;       // X + <Y> = X + Y

  bool consistent() const {
    return doubling_absorbed == all_multiples && all_multiples == closure_equal;
  }
  friend bool operator==(const span_check_result&, const span_check_result&) = default;
};

/// Evaluates the three equivalent absorption conditions independently.
/// The multiples are walked until the sequence nY repeats, so the middle
/// condition really covers every n.
inline span_check_result span_check(const finite_semigroup& a, element_set x, element_set y) {
  const element_set xy = sumset(a, x, y);
  span_check_result r{};
  r.doubling_absorbed = sumset(a, xy, y).subset_of(xy);

  r.all_multiples = true;
  std::set<element_set> seen;
  element_set multiple = y;  // nY
  while (seen.insert(multiple).second) {
    if (!sumset(a, x, multiple).subset_of(xy)) {
      r.all_multiples = false;
      break;
    }
    multiple = sumset(a, multiple, y);
  }

  r.closure_equal = sumset(a, x, generated_subsemigroup(a, y)) == xy;
  return r;
}

/// Sumset engine for hot loops over one fixed semigroup: x + Y is assembled
/// from per-byte translation tables, so X + Y costs |X| * ceil(n / 8) lookups.
class sumset_kernel {
 public:
  explicit sumset_kernel(const finite_semigroup& a)
      : n_(a.size()), chunks_((a.size() + 7) / 8), table_(a.size() * chunks_ * 256) {
    for (element x = 0; x < n_; ++x)
      for (std::size_t c = 0; c < chunks_; ++c)
        for (std::size_t byte = 1; byte < 256; ++byte) {
          // extend from the value with the lowest bit cleared
          const std::size_t low = static_cast<std::size_t>(std::countr_zero(byte));
          const element y = static_cast<element>(c * 8 + low);
          element_set::bits_type acc = slot(x, c, byte & (byte - 1));
          if (y < n_) acc |= element_set::bits_type{1} << a.op(x, y);
          slot(x, c, byte) = acc;
        }
  }

  element_set translate(element x, element_set y) const {
    element_set::bits_type acc = 0;
    const element_set::bits_type bits = y.bits();
    for (std::size_t c = 0; c < chunks_; ++c) acc |= slot(x, c, (bits >> (8 * c)) & 0xff);
    return element_set(acc);
  }

  element_set sum(element_set x, element_set y) const {
    element_set::bits_type acc = 0;
    for (element u : x) acc |= translate(u, y).bits();
    return element_set(acc);
  }

 private:
  element_set::bits_type& slot(element x, std::size_t c, std::size_t byte) {
    return table_[(x * chunks_ + c) * 256 + byte];
  }
  element_set::bits_type slot(element x, std::size_t c, std::size_t byte) const {
    return table_[(x * chunks_ + c) * 256 + byte];
  }

  std::size_t n_;
  std::size_t chunks_;
  std::vector<element_set::bits_type> table_;
};

}  // namespace addcomb
