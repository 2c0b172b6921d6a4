#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"
#include "extended_nat.hpp"
#include "constructions.hpp"
#include "semigroup.hpp"

namespace addcomb {

struct omega_row {
  element unit;           // z0, a unit in Z
  extended_nat inner_inf; // min over z in Z \ {z0} of ord(z - z0)

  friend bool operator==(const omega_row&, const omega_row&) = default;
};

struct omega_breakdown {
  std::vector<omega_row> rows;  // ascending by unit
  extended_nat overall;         // max over rows, 0 without rows

  friend bool operator==(const omega_breakdown&, const omega_breakdown&) = default;
};

/// omega(Z): over units z0 in Z, the smallest order of z - z0 (taken as the
/// element z + inverse(z0)) for z in Z \ {z0}; then the largest such value.
/// Empty supremum is 0 and empty infimum is Infinity.
inline omega_breakdown omega(const finite_semigroup& a, element_set z) {
  omega_breakdown out;
  out.overall = 0;
  for (element z0 : z & a.units()) {
    const element back = *a.inverse(z0);
    extended_nat inner = extended_nat::infinity();
    for (element w : z)
      if (w != z0) inner = min(inner, extended_nat(a.order(a.op(w, back))));
    out.rows.push_back({z0, inner});
    out.overall = max(out.overall, inner);
  }
  return out;
}

/// max(omega(X), omega(Y)).
inline extended_nat omega_pair(const finite_semigroup& a, element_set x, element_set y) {
  return max(omega(a, x).overall, omega(a, y).overall);
}

/// The Cauchy-Davenport constant from precomputed omega values. Carriers are
/// finite, so the branch for infinite operands never arises.
inline extended_nat cd_constant(std::size_t x_size, extended_nat omega_x, std::size_t y_size,
                                extended_nat omega_y) {
  if (x_size == 0 || y_size == 0) return 0;
  return min(max(omega_x, omega_y), extended_nat(x_size + y_size - 1));
}

inline extended_nat cd_constant(const finite_semigroup& a, element_set x, element_set y) {
  if (x.empty() || y.empty()) return 0;
  return cd_constant(x.size(), omega(a, x).overall, y.size(), omega(a, y).overall);
}

namespace detail {
inline void require_in_modulus(std::size_t m, element_set z) {
  if (m == 0 || z.span() > m) {
    throw error(error_kind::index_out_of_range,
                "set " + z.to_string() + " is not a subset of Z/" + std::to_string(m) + "Z");
  }
}
inline std::size_t gcd_of_difference(std::size_t m, element z, element z0) {
  return std::gcd(m, (z + m - z0) % m);
}
}  // namespace detail

/// delta_Z on Z/mZ: min over z0 in Z of max over z in Z \ {z0} of gcd(m, z - z0);
/// 1 for singletons.
inline std::size_t delta(std::size_t m, element_set z) {
  if (z.empty()) throw error(error_kind::empty_set, "delta of the empty set");
  detail::require_in_modulus(m, z);
  if (z.size() == 1) return 1;
  std::size_t best = m;
  for (element z0 : z) {
    std::size_t worst = 0;
    for (element w : z)
      if (w != z0) worst = std::max(worst, detail::gcd_of_difference(m, w, z0));
    best = std::min(best, worst);
  }
  return best;
}

/// The coarser delta of Pillai's theorem: max of gcd(m, y - y0) over distinct
/// y, y0 in Y; 1 for singletons.
inline std::size_t pillai_delta(std::size_t m, element_set y) {
  if (y.empty()) throw error(error_kind::empty_set, "delta of the empty set");
  detail::require_in_modulus(m, y);
  std::size_t worst = 1;
  for (element y0 : y)
    for (element w : y)
      if (w != y0) worst = std::max(worst, detail::gcd_of_difference(m, w, y0));
  return worst;
}

/// (omega(Z) from element orders, m / delta_Z from gcds); the two agree.
inline std::pair<extended_nat, extended_nat> omega_gcd_crosscheck(const finite_semigroup& zm,
                                                                  element_set z) {
  const auto m = zm.cyclic_modulus();
  if (!m) throw error(error_kind::not_cyclic, "ambient is not Z/mZ");
  if (z.size() < 2) throw error(error_kind::empty_set, "cross-check needs |Z| >= 2");
  return {omega(zm, z).overall, extended_nat(*m / delta(*m, z))};
}

inline std::pair<extended_nat, extended_nat> omega_gcd_crosscheck(std::size_t m, element_set z) {
  if (z.size() < 2) throw error(error_kind::empty_set, "cross-check needs |Z| >= 2");
  detail::require_in_modulus(m, z);
  return omega_gcd_crosscheck(cyclic(m), z);
}

}  // namespace addcomb
