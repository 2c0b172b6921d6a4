#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"
#include "extended_nat.hpp"

namespace addcomb {

/// A finite semigroup on the carrier {0, ..., n-1}, given by its Cayley table
/// (table[a][b] = a + b). Immutable once built; construction validates
/// associativity and computes every structural flag eagerly.
class finite_semigroup {
 public:
  /// Validates a row-major n*n table. Throws index_out_of_range or
  /// non_associative (with a witness triple).
  static finite_semigroup build(std::size_t n, std::vector<element> table) {
    if (n == 0) throw error(error_kind::index_out_of_range, "carrier must be non-empty");
    if (n > max_carrier) {
      throw error(error_kind::index_out_of_range,
                  "carrier size " + std::to_string(n) + " exceeds " + std::to_string(max_carrier));
    }
    if (table.size() != n * n) {
      throw error(error_kind::index_out_of_range,
                  "table has " + std::to_string(table.size()) + " entries, expected " +
                      std::to_string(n * n));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        throw error(error_kind::index_out_of_range,
                    "entry table[" + std::to_string(i / n) + "][" + std::to_string(i % n) +
                        "] = " + std::to_string(table[i]) + " not in [0," + std::to_string(n) + ")");
      }
    }
    finite_semigroup s(n, std::move(table));
    s.check_associative();
    s.compute_flags();
    return s;
  }

  static finite_semigroup build(const std::vector<std::vector<element>>& rows) {
    std::vector<element> flat;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      if (rows[a].size() != rows.size()) {
        throw error(error_kind::index_out_of_range,
                    "row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) +
                        " entries, expected " + std::to_string(rows.size()));
      }
      flat.insert(flat.end(), rows[a].begin(), rows[a].end());
    }
    return build(rows.size(), std::move(flat));
  }

  std::size_t size() const { return n_; }
  element_set carrier() const { return element_set::full(n_); }

  element op(element a, element b) const { return table_[a * n_ + b]; }
  std::span<const element> row(element a) const { return {table_.data() + a * n_, n_}; }
  const std::vector<element>& table() const { return table_; }

  const std::optional<element>& identity() const { return identity_; }
  bool is_unital() const { return identity_.has_value(); }
  element_set units() const { return units_; }
  bool is_unit(element z) const { return units_.contains(z); }
  /// Inverse of a unit; empty for non-units.
  std::optional<element> inverse(element z) const { return inverse_[z]; }

  bool is_commutative() const { return commutative_; }
  bool is_cancellative() const { return cancellative_; }
  /// A finite cancellative semigroup is a group.
  bool is_group() const { return is_unital() && units_.size() == n_; }

  /// m when the table is literally addition modulo m on {0, ..., m-1}.
  std::optional<std::size_t> cyclic_modulus() const { return cyclic_modulus_; }

  /// |<z>|, the number of distinct multiples z, 2z, 3z, ...
  std::size_t order(element z) const { return orders_[z]; }

  friend bool operator==(const finite_semigroup& a, const finite_semigroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  finite_semigroup(std::size_t n, std::vector<element> table) : n_(n), table_(std::move(table)) {}

  void check_associative() const {
    for (element a = 0; a < n_; ++a)
      for (element b = 0; b < n_; ++b) {
        element ab = op(a, b);
        for (element c = 0; c < n_; ++c) {
          if (op(ab, c) != op(a, op(b, c))) {
            std::ostringstream msg;
            msg << "(" << a << "+" << b << ")+" << c << " = " << op(ab, c) << " but " << a << "+("
                << b << "+" << c << ") = " << op(a, op(b, c)) << "; witness (" << a << "," << b
                << "," << c << ")";
            throw error(error_kind::non_associative, msg.str());
          }
        }
      }
  }

  void compute_flags() {
    for (element e = 0; e < n_ && !identity_; ++e) {
      bool ok = true;
      for (element z = 0; z < n_ && ok; ++z) ok = op(e, z) == z && op(z, e) == z;
      if (ok) identity_ = e;
    }

    inverse_.assign(n_, std::nullopt);
    if (identity_) {
      for (element z = 0; z < n_; ++z)
        for (element w = 0; w < n_; ++w)
          if (op(z, w) == *identity_ && op(w, z) == *identity_) {
            inverse_[z] = w;
            units_.insert(z);
            break;
          }
    }

    commutative_ = true;
    for (element a = 0; a < n_ && commutative_; ++a)
      for (element b = a + 1; b < n_ && commutative_; ++b) commutative_ = op(a, b) == op(b, a);

    // Latin-square criterion: every row and every column is a permutation.
    const element_set all = carrier();
    cancellative_ = true;
    for (element a = 0; a < n_ && cancellative_; ++a) {
      element_set row_image, col_image;
      for (element b = 0; b < n_; ++b) {
        row_image.insert(op(a, b));
        col_image.insert(op(b, a));
      }
      cancellative_ = row_image == all && col_image == all;
    }

    orders_.resize(n_);
    for (element z = 0; z < n_; ++z) {
      element_set seen;
      element cur = z;
      while (!seen.contains(cur)) {
        seen.insert(cur);
        cur = op(cur, z);
      }
      orders_[z] = seen.size();
    }

    bool cyclic = true;
    for (element a = 0; a < n_ && cyclic; ++a)
      for (element b = 0; b < n_ && cyclic; ++b) cyclic = op(a, b) == (a + b) % n_;
    if (cyclic) cyclic_modulus_ = n_;
  }

  std::size_t n_;
  std::vector<element> table_;
  std::optional<element> identity_;
  element_set units_;
  std::vector<std::optional<element>> inverse_;
  std::vector<std::size_t> orders_;
  std::optional<std::size_t> cyclic_modulus_;
  bool commutative_ = false;
  bool cancellative_ = false;
};

/// Order of z as an extended natural; always finite on a finite carrier.
inline extended_nat ord(const finite_semigroup& a, element z) { return a.order(z); }

/// A itself when unital; otherwise A with a fresh two-sided identity adjoined
/// as element n.
inline finite_semigroup unitization(const finite_semigroup& a) {
  if (a.is_unital()) return a;
  const std::size_t n = a.size();
  if (n + 1 > max_carrier) {
    throw error(error_kind::index_out_of_range, "unitization would exceed the carrier limit");
  }
  std::vector<element> table((n + 1) * (n + 1));
  for (element x = 0; x <= n; ++x)
    for (element y = 0; y <= n; ++y)
      table[x * (n + 1) + y] = x == n ? y : y == n ? x : a.op(x, y);
  return finite_semigroup::build(n + 1, std::move(table));
}

/// <Z>: the closure of Z under the operation, i.e. the union of kZ over k >= 1.
inline element_set generated_subsemigroup(const finite_semigroup& a, element_set z) {
  element_set closure = z;
  for (;;) {
    element_set next = closure;
    for (element u : closure)
      for (element v : z) next.insert(a.op(u, v));
    if (next == closure) return closure;
    closure = next;
  }
}

/// Whether every pair of members of s commutes.
inline bool commutes_pairwise(const finite_semigroup& a, element_set s) {
  for (element u : s)
    for (element v : s)
      if (v > u && a.op(u, v) != a.op(v, u)) return false;
  return true;
}

/// Whether the subsemigroup generated by z is commutative.
inline bool generates_commutative(const finite_semigroup& a, element_set z) {
  return commutes_pairwise(a, generated_subsemigroup(a, z));
}

/// Minimum order of a non-identity element of the unitization; Infinity when
/// the unitization is trivial.
inline extended_nat p_constant(const finite_semigroup& a) {
  const finite_semigroup u = unitization(a);
  extended_nat best = extended_nat::infinity();
  for (element z = 0; z < u.size(); ++z)
    if (z != *u.identity()) best = min(best, extended_nat(u.order(z)));
  return best;
}

/// C_A(X) = {z : z + x = x + z for every x in X}.
inline element_set centralizer(const finite_semigroup& a, element_set x) {
  element_set out;
  for (element z = 0; z < a.size(); ++z) {
    bool central = true;
    for (element m : x) {
      if (a.op(z, m) != a.op(m, z)) {
        central = false;
        break;
      }
    }
    if (central) out.insert(z);
  }
  return out;
}

}  // namespace addcomb
