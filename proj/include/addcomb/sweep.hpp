#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"
#include "theorems.hpp"

namespace addcomb {

/// Full sweeps enumerate 2^n x 2^n pairs; beyond this a size cap is required.
inline constexpr std::size_t max_full_sweep_carrier = 16;

struct sweep_options {
  std::optional<std::size_t> max_size;  // cap on |X| and |Y|
  std::size_t jobs = 1;
};

struct pair_witness {
  element_set x;
  element_set y;
  std::size_t lhs = 0;
  extended_nat rhs;
  friend bool operator==(const pair_witness&, const pair_witness&) = default;
};

struct comparison_witness {
  element_set x;
  element_set y;
  bound_comparison comparison;
  friend bool operator==(const comparison_witness&, const comparison_witness&) = default;
};

struct sweep_summary {
  std::string semigroup;
  statement id = statement::thm2_2;
  std::optional<std::size_t> max_size;
  std::uint64_t pairs = 0;
  std::uint64_t applicable = 0;
  std::uint64_t tight = 0;
  std::vector<pair_witness> violations;
  std::optional<pair_witness> first_tight;
  std::uint64_t comparisons = 0;
  std::uint64_t strict_comparisons = 0;
  std::vector<comparison_witness> comparison_failures;
  std::optional<comparison_witness> first_strict;
  double wall_seconds = 0;  // not part of equality

  bool clean() const { return violations.empty() && comparison_failures.empty(); }

  friend bool operator==(const sweep_summary& a, const sweep_summary& b) {
    return a.semigroup == b.semigroup && a.id == b.id && a.max_size == b.max_size &&
           a.pairs == b.pairs && a.applicable == b.applicable && a.tight == b.tight &&
           a.violations == b.violations && a.first_tight == b.first_tight &&
           a.comparisons == b.comparisons && a.strict_comparisons == b.strict_comparisons &&
           a.comparison_failures == b.comparison_failures && a.first_strict == b.first_strict;
  }
};

/// Non-empty subsets of {0..n-1} with at most max_size members, ascending by
/// bit pattern.
inline std::vector<element_set> enumerate_subsets(std::size_t n,
                                                  std::optional<std::size_t> max_size) {
  const std::size_t cap = max_size.value_or(n);
  std::vector<element_set> out;
  if (n <= max_full_sweep_carrier) {
    for (element_set::bits_type bits = 1; bits < (element_set::bits_type{1} << n); ++bits)
      if (static_cast<std::size_t>(std::popcount(bits)) <= cap) out.emplace_back(bits);
    return out;
  }
  // Depth-first over combinations, then sorted into bit order.
  auto extend = [&](auto&& self, element next, element_set current) -> void {
    if (!current.empty()) out.push_back(current);
    if (current.size() == cap) return;
    for (element e = next; e < n; ++e) {
      element_set grown = current;
      grown.insert(e);
      self(self, e + 1, grown);
    }
  };
  extend(extend, 0, element_set{});
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline void sweep_range(statement s, const ambient& amb, const std::vector<set_profile>& profiles,
                        std::size_t lo, std::size_t hi, sweep_summary& out) {
  const sumset_kernel& kernel = amb.kernel();
  for (std::size_t ix = lo; ix < hi; ++ix) {
    const set_profile& px = profiles[ix];
    for (const set_profile& py : profiles) {
      ++out.pairs;
      const bound_verdict v = evaluate(s, amb, px, py);
      if (!v.applicable) continue;
      ++out.applicable;
      const std::size_t lhs = kernel.sum(px.set, py.set).size();
      const extended_nat left(lhs);
      if (left < v.rhs) out.violations.push_back({px.set, py.set, lhs, v.rhs});
      if (left == v.rhs) {
        ++out.tight;
        if (!out.first_tight) out.first_tight = pair_witness{px.set, py.set, lhs, v.rhs};
      }
      if (v.comparison) {
        ++out.comparisons;
        if (!v.comparison->holds()) out.comparison_failures.push_back({px.set, py.set, *v.comparison});
        if (v.comparison->strict()) {
          ++out.strict_comparisons;
          if (!out.first_strict) out.first_strict = comparison_witness{px.set, py.set, *v.comparison};
        }
      }
    }
  }
}

}  // namespace detail

/// Runs one verifier over every pair (X, Y) of non-empty subsets. X-space is
/// split into contiguous ranges, one per worker, and merged in range order, so
/// the summary does not depend on the worker count.
inline sweep_summary sweep(const ambient& amb, statement s, const sweep_options& opts = {},
                           std::string label = {}) {
  const auto start = std::chrono::steady_clock::now();
  const finite_semigroup& a = amb.semigroup();
  if (a.size() > max_full_sweep_carrier && !opts.max_size) {
    throw error(error_kind::carrier_too_large,
                "carrier of size " + std::to_string(a.size()) + " needs --max-size");
  }
  if (s == statement::hk && !a.is_group()) {
    throw error(error_kind::not_group, "the Hamidoune-Karolyi bound needs a group");
  }

  const std::vector<element_set> sets = enumerate_subsets(a.size(), opts.max_size);
  std::vector<set_profile> profiles;
  profiles.reserve(sets.size());
  for (element_set x : sets) profiles.push_back(amb.profile(x));

  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(1, sets.size()));
  std::vector<sweep_summary> parts(jobs);
  {
    std::vector<std::jthread> workers;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t lo = sets.size() * j / jobs;
      const std::size_t hi = sets.size() * (j + 1) / jobs;
      workers.emplace_back([&, lo, hi, j] { detail::sweep_range(s, amb, profiles, lo, hi, parts[j]); });
    }
  }

  sweep_summary out;
  out.semigroup = std::move(label);
  out.id = s;
  out.max_size = opts.max_size;
  for (sweep_summary& part : parts) {
    out.pairs += part.pairs;
    out.applicable += part.applicable;
    out.tight += part.tight;
    out.comparisons += part.comparisons;
    out.strict_comparisons += part.strict_comparisons;
    out.violations.insert(out.violations.end(), part.violations.begin(), part.violations.end());
    out.comparison_failures.insert(out.comparison_failures.end(), part.comparison_failures.begin(),
                                   part.comparison_failures.end());
    if (!out.first_tight) out.first_tight = part.first_tight;
    if (!out.first_strict) out.first_strict = part.first_strict;
  }
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline sweep_summary sweep(const finite_semigroup& a, statement s, const sweep_options& opts = {},
                           std::string label = {}) {
  return sweep(ambient(a), s, opts, std::move(label));
}

}  // namespace addcomb
