#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cd_constants.hpp"
#include "constructions.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "extended_nat.hpp"
#include "semigroup.hpp"
#include "set_calculus.hpp"

namespace addcomb {

/// Sumset lower bounds that can be checked on a pair (X, Y).
enum class statement {
  cd_1813,         // Cauchy-Davenport, groups of prime order
  chowla,          // Z/mZ, 0 in Y, Y \ {0} coprime to m
  pillai,          // Z/mZ, max pairwise gcd over Y
  hk,              // Hamidoune-Karolyi, groups, min(p(A), |X|+|Y|-1)
  kemperman_weak,  // cancellative, all non-identity orders >= |X|+|Y|-1
  thm2_2,          // cancellative, <Y> commutative, min(omega(Y), |X|+|Y|-1)
  cor2_4,          // mirror with <X> commutative and omega(X)
  cor2_7,          // both commutative, Omega(X, Y)
  cor2_9,          // Z/mZ, delta = min(delta_X, delta_Y)
};

inline constexpr std::array<statement, 9> all_statements{
    statement::cd_1813, statement::chowla, statement::pillai,
    statement::hk,      statement::kemperman_weak, statement::thm2_2,
    statement::cor2_4,  statement::cor2_7, statement::cor2_9};

constexpr std::string_view to_string(statement s) {
  switch (s) {
    case statement::cd_1813: return "CD-1813";
    case statement::chowla: return "Chowla";
    case statement::pillai: return "Pillai";
    case statement::hk: return "HK";
    case statement::kemperman_weak: return "Kemperman-weak";
    case statement::thm2_2: return "Thm2.2";
    case statement::cor2_4: return "Cor2.4";
    case statement::cor2_7: return "Cor2.7";
    case statement::cor2_9: return "Cor2.9";
  }
  return "?";
}

/// Case-insensitive; also accepts "cd" for CD-1813.
inline statement parse_statement(std::string_view text) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const std::string key = lower(text);
  if (key == "cd") return statement::cd_1813;
  for (statement s : all_statements)
    if (lower(to_string(s)) == key) return s;
  throw error(error_kind::parse_error, "unknown statement '" + std::string(text) + "'");
}

/// Hypothesis names per statement, in report order.
inline std::span<const std::string_view> hypothesis_names(statement s) {
  static constexpr std::array<std::string_view, 2> cd{"group", "prime order"};
  static constexpr std::array<std::string_view, 3> chowla{"ambient Z/mZ", "0 in Y",
                                                          "Y\\{0} coprime to m"};
  static constexpr std::array<std::string_view, 1> zmod{"ambient Z/mZ"};
  static constexpr std::array<std::string_view, 1> group{"group"};
  static constexpr std::array<std::string_view, 3> kemperman{
      "cancellative", "orders >= |X|+|Y|-1", "<X> or <Y> commutative"};
  static constexpr std::array<std::string_view, 2> main{"cancellative", "<Y> commutative"};
  static constexpr std::array<std::string_view, 2> mirror{"cancellative", "<X> commutative"};
  static constexpr std::array<std::string_view, 3> both{"cancellative", "<X> commutative",
                                                        "<Y> commutative"};
  switch (s) {
    case statement::cd_1813: return cd;
    case statement::chowla: return chowla;
    case statement::pillai: return zmod;
    case statement::hk: return group;
    case statement::kemperman_weak: return kemperman;
    case statement::thm2_2: return main;
    case statement::cor2_4: return mirror;
    case statement::cor2_7: return both;
    case statement::cor2_9: return zmod;
  }
  return {};
}

/// Everything the verifiers need to know about one operand, computed once.
struct set_profile {
  element_set set;
  extended_nat omega;
  bool commutative_closure = false;
  // Z/mZ ambients only
  std::size_t delta = 1;
  std::size_t pillai_delta = 1;
  bool nonzero_coprime = false;  // every non-zero member is coprime to m
};

/// A semigroup together with the derived data shared by all verifiers.
class ambient {
 public:
  explicit ambient(finite_semigroup a)
      : a_(std::move(a)), kernel_(a_), p_(p_constant(a_)), prime_order_(is_prime(a_.size())) {}

  const finite_semigroup& semigroup() const { return a_; }
  const sumset_kernel& kernel() const { return kernel_; }
  extended_nat p() const { return p_; }
  bool prime_order() const { return prime_order_; }
  std::optional<std::size_t> modulus() const { return a_.cyclic_modulus(); }

  set_profile profile(element_set s) const {
    set_profile p;
    p.set = s;
    p.omega = omega(a_, s).overall;
    p.commutative_closure = generates_commutative(a_, s);
    if (const auto m = modulus(); m && !s.empty()) {
      p.delta = delta(*m, s);
      p.pillai_delta = pillai_delta(*m, s);
      p.nonzero_coprime = true;
      for (element y : s)
        if (y != 0 && std::gcd(*m, static_cast<std::size_t>(y)) != 1) p.nonzero_coprime = false;
    }
    return p;
  }

 private:
  static bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  finite_semigroup a_;
  sumset_kernel kernel_;
  extended_nat p_;
  bool prime_order_;
};

/// rhs(stronger) >= rhs(weaker), recorded when both bounds apply.
struct bound_comparison {
  statement stronger;
  statement weaker;
  extended_nat stronger_rhs;
  extended_nat weaker_rhs;

  bool holds() const { return stronger_rhs >= weaker_rhs; }
  bool strict() const { return stronger_rhs > weaker_rhs; }
  friend bool operator==(const bound_comparison&, const bound_comparison&) = default;
};

/// Allocation-free verdict used by sweeps; a bound_report adds names.
struct bound_verdict {
  std::uint8_t hypothesis_bits = 0;  // bit i: hypothesis i holds
  bool applicable = false;
  extended_nat rhs;
  std::optional<bound_comparison> comparison;
};

struct hypothesis {
  std::string name;
  bool holds = false;
  friend bool operator==(const hypothesis&, const hypothesis&) = default;
};

struct bound_report {
  statement id = statement::thm2_2;
  std::vector<hypothesis> hypotheses;
  std::size_t lhs = 0;  // |X + Y|
  extended_nat rhs;
  bool applicable = false;
  bool satisfied = false;  // applicable and lhs >= rhs
  std::optional<bound_comparison> comparison;

  bool violated() const { return applicable && !satisfied; }
  bool tight() const { return applicable && rhs.is_finite() && rhs.value() == lhs; }
  friend bool operator==(const bound_report&, const bound_report&) = default;
};

namespace detail {

inline extended_nat sum_bound(const set_profile& x, const set_profile& y) {
  return x.set.size() + y.set.size() - 1;
}

inline bound_verdict gate(std::initializer_list<bool> flags) {
  bound_verdict v;
  std::uint8_t bit = 1;
  v.applicable = true;
  for (bool f : flags) {
    if (f) v.hypothesis_bits |= bit;
    v.applicable = v.applicable && f;
    bit <<= 1;
  }
  return v;
}

}  // namespace detail

/// Hypotheses and right-hand side of one statement for non-empty X, Y.
inline bound_verdict evaluate(statement s, const ambient& amb, const set_profile& x,
                              const set_profile& y) {
  const finite_semigroup& a = amb.semigroup();
  const extended_nat cap = detail::sum_bound(x, y);
  const bool cancellative = a.is_cancellative();
  bound_verdict v;
  switch (s) {
    case statement::cd_1813:
      v = detail::gate({a.is_group(), amb.prime_order()});
      v.rhs = min(a.size(), cap);
      break;
    case statement::chowla: {
      const bool zm = amb.modulus().has_value();
      v = detail::gate({zm, y.set.contains(0), zm && y.nonzero_coprime});
      v.rhs = min(a.size(), cap);
      break;
    }
    case statement::pillai:
      v = detail::gate({amb.modulus().has_value()});
      v.rhs = min(a.size() / y.pillai_delta, cap);
      break;
    case statement::cor2_9: {
      v = detail::gate({amb.modulus().has_value()});
      v.rhs = min(a.size() / std::min(x.delta, y.delta), cap);
      if (v.applicable) {
        v.comparison = bound_comparison{statement::cor2_9, statement::pillai, v.rhs,
                                        min(a.size() / y.pillai_delta, cap)};
      }
      break;
    }
    case statement::hk: {
      v = detail::gate({a.is_group()});
      v.rhs = min(amb.p(), cap);
      if (v.applicable && y.commutative_closure) {
        v.comparison = bound_comparison{statement::thm2_2, statement::hk, min(y.omega, cap), v.rhs};
      }
      break;
    }
    case statement::kemperman_weak:
      v = detail::gate({cancellative, amb.p() >= cap,
                        x.commutative_closure || y.commutative_closure});
      v.rhs = cap;
      break;
    case statement::thm2_2:
      v = detail::gate({cancellative, y.commutative_closure});
      v.rhs = min(y.omega, cap);
      break;
    case statement::cor2_4:
      v = detail::gate({cancellative, x.commutative_closure});
      v.rhs = min(x.omega, cap);
      break;
    case statement::cor2_7:
      v = detail::gate({cancellative, x.commutative_closure, y.commutative_closure});
      v.rhs = cd_constant(x.set.size(), x.omega, y.set.size(), y.omega);
      break;
  }
  return v;
}

inline bound_report make_report(statement s, const bound_verdict& v, std::size_t lhs) {
  bound_report r;
  r.id = s;
  const auto names = hypothesis_names(s);
  for (std::size_t i = 0; i < names.size(); ++i)
    r.hypotheses.push_back({std::string(names[i]), ((v.hypothesis_bits >> i) & 1) != 0});
  r.lhs = lhs;
  r.rhs = v.rhs;
  r.applicable = v.applicable;
  r.satisfied = v.applicable && extended_nat(lhs) >= v.rhs;
  r.comparison = v.comparison;
  return r;
}

inline bound_report verify(statement s, const ambient& amb, element_set x, element_set y) {
  if (x.empty() || y.empty()) throw error(error_kind::empty_set, "X and Y must be non-empty");
  const element_set carrier = amb.semigroup().carrier();
  if (!x.subset_of(carrier) || !y.subset_of(carrier)) {
    throw error(error_kind::index_out_of_range, "X or Y leaves the carrier");
  }
  if (s == statement::hk && !amb.semigroup().is_group()) {
    throw error(error_kind::not_group, "the Hamidoune-Karolyi bound needs a group");
  }
  const bound_verdict v = evaluate(s, amb, amb.profile(x), amb.profile(y));
  return make_report(s, v, sumset(amb.semigroup(), x, y).size());
}

inline bound_report verify(statement s, const finite_semigroup& a, element_set x, element_set y) {
  return verify(s, ambient(a), x, y);
}

/// Main bound: A cancellative, <Y> commutative.
inline bound_report verify_main(const finite_semigroup& a, element_set x, element_set y) {
  return verify(statement::thm2_2, a, x, y);
}

/// Mirror bound (<X> commutative) and the symmetric Omega bound.
inline std::vector<bound_report> verify_mirror(const finite_semigroup& a, element_set x,
                                               element_set y) {
  const ambient amb(a);
  return {verify(statement::cor2_4, amb, x, y), verify(statement::cor2_7, amb, x, y)};
}

inline bound_report verify_kemperman_weak(const finite_semigroup& a, element_set x, element_set y) {
  return verify(statement::kemperman_weak, a, x, y);
}

/// Throws not_group outside groups.
inline bound_report verify_hk(const finite_semigroup& a, element_set x, element_set y) {
  return verify(statement::hk, a, x, y);
}

/// Chowla, Pillai and the gcd corollary on Z/mZ (the last one carries the
/// comparison against Pillai).
inline std::vector<bound_report> verify_zmod(const finite_semigroup& zm, element_set x,
                                             element_set y) {
  if (!zm.cyclic_modulus()) throw error(error_kind::not_cyclic, "ambient is not Z/mZ");
  const ambient amb(zm);
  return {verify(statement::chowla, amb, x, y), verify(statement::pillai, amb, x, y),
          verify(statement::cor2_9, amb, x, y)};
}

inline std::vector<bound_report> verify_zmod(std::size_t m, element_set x, element_set y) {
  detail::require_in_modulus(m, x | y);
  return verify_zmod(cyclic(m), x, y);
}

}  // namespace addcomb
