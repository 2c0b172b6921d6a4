#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "semigroup.hpp"

namespace addcomb {

namespace detail {
inline void require_size(std::size_t n, const char* what) {
  if (n == 0 || n > max_carrier) {
    throw error(error_kind::unknown_spec, std::string(what) + " needs a carrier size in [1," +
                                              std::to_string(max_carrier) + "], got " +
                                              std::to_string(n));
  }
}
}  // namespace detail

/// Z/mZ under addition.
inline finite_semigroup cyclic(std::size_t m) {
  detail::require_size(m, "cyclic");
  std::vector<element> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = static_cast<element>((a + b) % m);
  return finite_semigroup::build(m, std::move(t));
}

/// Dihedral group of order 2k. Index i < k is the rotation r^i, index k + i is
/// the reflection s r^i; composition uses r s = s r^{-1}.
inline finite_semigroup dihedral(std::size_t k) {
  detail::require_size(2 * k, "dihedral");
  const std::size_t n = 2 * k;
  std::vector<element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t fa = a / k, ra = a % k, fb = b / k, rb = b % k;
      // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^((-1)^fb ra + rb)
      const std::size_t rot = (fb == 0 ? ra : (k - ra) % k) + rb;
      t[a * n + b] = static_cast<element>(((fa + fb) % 2) * k + rot % k);
    }
  return finite_semigroup::build(n, std::move(t));
}

/// Quaternion group: indices 0..3 are 1, i, j, k and 4..7 their negatives.
inline finite_semigroup quaternion8() {
  // unit products: basis[a][b] = (sign, unit) for a, b in {1, i, j, k}
  struct signed_unit {
    int negative;
    int unit;
  };
  static constexpr std::array<std::array<signed_unit, 4>, 4> basis{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<element> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const signed_unit p = basis[a % 4][b % 4];
      const int sign = (a / 4 + b / 4 + p.negative) % 2;
      t[a * 8 + b] = static_cast<element>(sign * 4 + p.unit);
    }
  return finite_semigroup::build(8, std::move(t));
}

/// Direct product; the pair (a, b) has index a * |B| + b.
inline finite_semigroup direct_product(const finite_semigroup& lhs, const finite_semigroup& rhs) {
  const std::size_t n1 = lhs.size(), n2 = rhs.size(), n = n1 * n2;
  detail::require_size(n, "product");
  std::vector<element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const element first = lhs.op(static_cast<element>(a / n2), static_cast<element>(b / n2));
      const element second = rhs.op(static_cast<element>(a % n2), static_cast<element>(b % n2));
      t[a * n + b] = static_cast<element>(first * n2 + second);
    }
  return finite_semigroup::build(n, std::move(t));
}

/// a + b = a. No identity once n >= 2.
inline finite_semigroup left_zero(std::size_t n) {
  detail::require_size(n, "leftzero");
  std::vector<element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<element>(a);
  return finite_semigroup::build(n, std::move(t));
}

/// ({0, ..., n-1}, max): a commutative idempotent monoid with identity 0.
inline finite_semigroup max_chain(std::size_t n) {
  detail::require_size(n, "maxchain");
  std::vector<element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<element>(a > b ? a : b);
  return finite_semigroup::build(n, std::move(t));
}

}  // namespace addcomb
