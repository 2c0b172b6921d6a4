#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cd_constants.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "semigroup.hpp"
#include "set_calculus.hpp"

namespace addcomb {

/// The k-by-l matrix with entry x_i + y_j.
struct sum_matrix {
  std::vector<element> row_labels;  // x_1..x_k
  std::vector<element> col_labels;  // y_1..y_l
  std::vector<std::vector<element>> entries;

  std::size_t rows() const { return row_labels.size(); }
  std::size_t cols() const { return col_labels.size(); }

  element_set entry_set() const {
    element_set s;
    for (const auto& r : entries)
      for (element e : r) s.insert(e);
    return s;
  }

  friend bool operator==(const sum_matrix&, const sum_matrix&) = default;
};

/// Builds the matrix under the given numberings; ascending element order when
/// a numbering is omitted.
inline sum_matrix make_sum_matrix(const finite_semigroup& a, element_set x, element_set y,
                                  std::optional<std::vector<element>> x_order = std::nullopt,
                                  std::optional<std::vector<element>> y_order = std::nullopt) {
  sum_matrix m;
  m.row_labels = x_order ? *x_order : x.to_vector();
  m.col_labels = y_order ? *y_order : y.to_vector();
  for (element u : m.row_labels) {
    std::vector<element> row;
    row.reserve(m.col_labels.size());
    for (element v : m.col_labels) row.push_back(a.op(u, v));
    m.entries.push_back(std::move(row));
  }
  return m;
}

struct hall_result {
  bool has_sdr = false;
  std::vector<std::size_t> witness;  // indices whose union is too small
  std::vector<element> representatives;  // one per set when has_sdr

  friend bool operator==(const hall_result&, const hall_result&) = default;
};

/// Maximum bipartite matching between sets and elements by augmenting paths,
/// scanning sets and elements in ascending order. On failure the witness is
/// the set of rows reachable by alternating paths from an unmatched row.
inline hall_result hall_check(const std::vector<element_set>& sets) {
  constexpr std::size_t unmatched = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(max_carrier, unmatched);  // element -> row
  std::vector<element> pick(sets.size(), 0);

  // visited_rows doubles as the alternating-tree record for the witness
  std::vector<bool> visited_rows;
  element_set visited_cols;
  auto augment = [&](auto&& self, std::size_t row) -> bool {
    visited_rows[row] = true;
    for (element e : sets[row]) {
      if (visited_cols.contains(e)) continue;
      visited_cols.insert(e);
      if (owner[e] == unmatched || self(self, owner[e])) {
        owner[e] = row;
        pick[row] = e;
        return true;
      }
    }
    return false;
  };

  hall_result out;
  for (std::size_t row = 0; row < sets.size(); ++row) {
    visited_rows.assign(sets.size(), false);
    visited_cols = {};
    if (!augment(augment, row)) {
      for (std::size_t r = 0; r < sets.size(); ++r)
        if (visited_rows[r]) out.witness.push_back(r);
      return out;
    }
  }
  out.has_sdr = true;
  out.representatives = pick;
  return out;
}

/// Hall's union condition by enumerating all 2^k index subsets (k <= 20).
/// The witness is the violating subset with the smallest bit pattern.
inline hall_result hall_check_exhaustive(const std::vector<element_set>& sets) {
  const std::size_t k = sets.size();
  if (k > 20) throw error(error_kind::index_out_of_range, "exhaustive Hall check needs k <= 20");
  std::vector<element_set> unions(std::size_t{1} << k);
  hall_result out;
  for (std::uint32_t mask = 1; mask < unions.size(); ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    unions[mask] = unions[mask & (mask - 1)] | sets[low];
    if (unions[mask].size() < static_cast<std::size_t>(std::popcount(mask))) {
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1) out.witness.push_back(i);
      return out;
    }
  }
  out.has_sdr = true;
  return out;
}

struct localization_result {
  sum_matrix matrix;
  element_set z;                          // the fixed (l-1)-subset of X + Y
  std::vector<element_set> row_sets;      // Z_i = (x_i + Y) \ Z
  std::vector<element> representatives;   // one per row, distinct, outside Z
  std::vector<std::size_t> chosen_columns;  // representatives[i] = entries[i][chosen_columns[i]]

  element_set witness_set() const {
    element_set s = z;
    for (element e : representatives) s.insert(e);
    return s;
  }

  friend bool operator==(const localization_result&, const localization_result&) = default;
};

/// Picks one entry per row of the sum matrix so that, together with Z, they
/// are k + l - 1 distinct elements of X + Y. Default Z = x_1 + {y_1..y_{l-1}}.
inline localization_result localize(const finite_semigroup& a, element_set x, element_set y,
                                    std::optional<element_set> z = std::nullopt) {
  if (x.empty() || y.empty()) throw error(error_kind::empty_set, "X and Y must be non-empty");
  const element_set xy = sumset(a, x, y);
  const extended_nat omega_y = omega(a, y).overall;
  std::string failed;
  if (!a.is_cancellative()) failed += " [cancellative]";
  if (!generates_commutative(a, y)) failed += " [<Y> commutative]";
  if (!(extended_nat(xy.size()) < omega_y)) {
    failed += " [|X+Y| < omega(Y): " + std::to_string(xy.size()) + " vs " + omega_y.to_string() + "]";
  }
  if (!failed.empty()) throw error(error_kind::precondition_failed, "failed:" + failed);

  localization_result out;
  out.matrix = make_sum_matrix(a, x, y);
  const std::size_t ell = y.size();
  if (z) {
    if (z->size() != ell - 1 || !z->subset_of(xy)) {
      throw error(error_kind::bad_z, z->to_string() + " must be a subset of X+Y of size " +
                                         std::to_string(ell - 1));
    }
    out.z = *z;
  } else {
    for (std::size_t j = 0; j + 1 < ell; ++j) out.z.insert(out.matrix.entries[0][j]);
  }

  for (element u : out.matrix.row_labels) out.row_sets.push_back(translate_left(a, u, y) - out.z);
  const hall_result match = hall_check(out.row_sets);
  if (!match.has_sdr) throw std::logic_error("localization: Hall's condition failed");
  out.representatives = match.representatives;
  for (std::size_t i = 0; i < out.representatives.size(); ++i) {
    const auto& row = out.matrix.entries[i];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] == out.representatives[i]) {
        out.chosen_columns.push_back(j);
        break;
      }
  }
  return out;
}

}  // namespace addcomb
