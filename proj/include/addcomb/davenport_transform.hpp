#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "element_set.hpp"
#include "error.hpp"
#include "semigroup.hpp"
#include "set_calculus.hpp"

namespace addcomb {

/// One generalized Davenport transform (X, Y_z) of (X, Y) relative to z.
struct transform_result {
  std::size_t m = 1;       // exponent in mX + 2Y
  element z = 0;           // in (mX + 2Y) \ (X + Y)
  element x_z = 0;         // in (m-1)X, with 0X = {identity}
  element y_z = 0;         // in Y with z in x_z + X + Y + y_z
  element_set y_tilde;     // {y in Y : z in x_z + X + Y + y}
  element_set y_prime;     // Y \ y_tilde

  friend bool operator==(const transform_result&, const transform_result&) = default;
};

enum class audit_state { holds, fails, not_applicable };

constexpr const char* to_string(audit_state s) {
  switch (s) {
    case audit_state::holds: return "holds";
    case audit_state::fails: return "FAILS";
    case audit_state::not_applicable: return "not applicable";
  }
  return "?";
}

/// Items (i)-(v) of the transform's structural properties. An item whose
/// hypothesis fails is not_applicable, never fails.
struct transform_audit {
  audit_state partition;        // (i) Y_z, Y~_z non-empty, disjoint, proper; Y~_z = Y \ Y_z
  audit_state inclusion;        // (ii) (x_z+X+Y_z) u (z - Y~_z) within x_z+X+Y; cancellative
  audit_state disjointness;     // (iii) (x_z+X+Y_z) n (z - Y~_z) empty; <Y> commutative
  audit_state difference_size;  // (iv) |z - Y~_z| >= |Y~_z|; cancellative
  audit_state size_exchange;    // (v) |X+Y| + |Y_z| >= |X+Y_z| + |Y|; both
  std::size_t exchange_lhs = 0; // |X+Y| + |Y_z|
  std::size_t exchange_rhs = 0; // |X+Y_z| + |Y|

  bool any_failure() const {
    for (audit_state s : {partition, inclusion, disjointness, difference_size, size_exchange})
      if (s == audit_state::fails) return true;
    return false;
  }

  friend bool operator==(const transform_audit&, const transform_audit&) = default;
};

/// Z = (mX + 2Y) \ (X + Y). The ambient must be unital.
inline element_set transform_candidates(const finite_semigroup& a, element_set x, element_set y,
                                        std::size_t m = 1) {
  if (!a.is_unital()) throw error(error_kind::not_unital, "transform needs a unital ambient");
  if (x.empty() || y.empty()) return {};
  if (m == 0) throw error(error_kind::index_out_of_range, "exponent m must be positive");
  const element_set twice_y = sumset(a, y, y);
  return sumset(a, n_fold(a, x, m), twice_y) - sumset(a, x, y);
}

/// Builds the transform relative to z, choosing the lexicographically smallest
/// witness pair (x_z, y_z).
inline transform_result apply_transform(const finite_semigroup& a, element_set x, element_set y,
                                        std::size_t m, element z) {
  if (!transform_candidates(a, x, y, m).contains(z)) {
    throw error(error_kind::candidate_invalid,
                std::to_string(z) + " is not in (mX+2Y) \\ (X+Y)");
  }
  const element_set shifts =
      m == 1 ? element_set::singleton(*a.identity()) : n_fold(a, x, m - 1);
  const element_set xy = sumset(a, x, y);

  for (element xz : shifts) {
    const element_set base = translate_left(a, xz, xy);  // x_z + X + Y
    element_set tilde;
    for (element v : y)
      if (translate_right(a, base, v).contains(z)) tilde.insert(v);
    if (tilde.empty()) continue;
    transform_result r;
    r.m = m;
    r.z = z;
    r.x_z = xz;
    r.y_z = tilde.front();
    r.y_tilde = tilde;
    r.y_prime = y - tilde;
    return r;
  }
  // z in (m-1)X + X + Y + Y guarantees a witness.
  throw error(error_kind::no_witness, "no (x_z, y_z) for z = " + std::to_string(z));
}

/// Checks items (i)-(v) for the given transform. Requires Y_z non-empty.
inline transform_audit audit_transform(const finite_semigroup& a, element_set x, element_set y,
                                       const transform_result& t) {
  if (t.y_prime.empty()) throw error(error_kind::empty_transform, "Y_z is empty");
  const bool cancellative = a.is_cancellative();
  const bool y_commutative = generates_commutative(a, y);
  auto verdict = [](bool hypothesis, bool claim) {
    return !hypothesis ? audit_state::not_applicable
                       : claim ? audit_state::holds : audit_state::fails;
  };

  const element_set base = translate_left(a, t.x_z, sumset(a, x, y));              // x_z+X+Y
  const element_set reduced = translate_left(a, t.x_z, sumset(a, x, t.y_prime));  // x_z+X+Y_z
  const element_set back = right_difference(a, element_set::singleton(t.z), t.y_tilde);

  transform_audit out;
  out.partition = verdict(true, !t.y_prime.empty() && !t.y_tilde.empty() &&
                                    !t.y_prime.intersects(t.y_tilde) &&
                                    t.y_prime.subset_of(y) && t.y_prime != y &&
                                    t.y_tilde.subset_of(y) && t.y_tilde != y &&
                                    t.y_tilde == y - t.y_prime);
  out.inclusion = verdict(cancellative, (reduced | back).subset_of(base));
  out.disjointness = verdict(y_commutative, !reduced.intersects(back));
  out.difference_size = verdict(cancellative, back.size() >= t.y_tilde.size());
  out.exchange_lhs = sumset(a, x, y).size() + t.y_prime.size();
  out.exchange_rhs = sumset(a, x, t.y_prime).size() + y.size();
  out.size_exchange = verdict(cancellative && y_commutative, out.exchange_lhs >= out.exchange_rhs);
  return out;
}

}  // namespace addcomb
