#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cd_constants.hpp"
#include "davenport_transform.hpp"
#include "element_set.hpp"
#include "extended_nat.hpp"
#include "localization.hpp"
#include "sweep.hpp"
#include "theorems.hpp"

// Machine format. Infinity is the string "infinity"; sets are ascending index
// arrays.

namespace addcomb {

using json = nlohmann::json;

inline void to_json(json& j, const extended_nat& e) {
  if (e.is_infinite()) j = "infinity";
  else j = e.value();
}

inline void from_json(const json& j, extended_nat& e) {
  if (j.is_string()) {
    if (j.get<std::string>() != "infinity") throw error(error_kind::parse_error, "bad extended natural " + j.dump());
    e = extended_nat::infinity();
  } else {
    e = extended_nat(j.get<extended_nat::value_type>());
  }
}

inline void to_json(json& j, const element_set& s) { j = s.to_vector(); }

inline void from_json(const json& j, element_set& s) {
  s = {};
  for (const auto& e : j) s.insert(e.get<element>());
}

inline void to_json(json& j, statement s) { j = std::string(to_string(s)); }
inline void from_json(const json& j, statement& s) { s = parse_statement(j.get<std::string>()); }

inline void to_json(json& j, audit_state s) {
  switch (s) {
    case audit_state::holds: j = "holds"; break;
    case audit_state::fails: j = "fails"; break;
    case audit_state::not_applicable: j = "not_applicable"; break;
  }
}

inline void from_json(const json& j, audit_state& s) {
  const auto t = j.get<std::string>();
  if (t == "holds") s = audit_state::holds;
  else if (t == "fails") s = audit_state::fails;
  else if (t == "not_applicable") s = audit_state::not_applicable;
  else throw error(error_kind::parse_error, "bad audit state " + t);
}

namespace detail {
template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}
template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (j.at(key).is_null()) v.reset();
  else v = j.at(key).get<T>();
}
}  // namespace detail

inline void to_json(json& j, const omega_row& r) { j = {{"unit", r.unit}, {"inner_inf", r.inner_inf}}; }
inline void from_json(const json& j, omega_row& r) {
  j.at("unit").get_to(r.unit);
  j.at("inner_inf").get_to(r.inner_inf);
}

inline void to_json(json& j, const omega_breakdown& o) { j = {{"rows", o.rows}, {"overall", o.overall}}; }
inline void from_json(const json& j, omega_breakdown& o) {
  j.at("rows").get_to(o.rows);
  j.at("overall").get_to(o.overall);
}

inline void to_json(json& j, const hypothesis& h) { j = {{"name", h.name}, {"holds", h.holds}}; }
inline void from_json(const json& j, hypothesis& h) {
  j.at("name").get_to(h.name);
  j.at("holds").get_to(h.holds);
}

inline void to_json(json& j, const bound_comparison& c) {
  j = {{"stronger", c.stronger}, {"weaker", c.weaker}, {"stronger_rhs", c.stronger_rhs},
       {"weaker_rhs", c.weaker_rhs}, {"holds", c.holds()}};
}
inline void from_json(const json& j, bound_comparison& c) {
  j.at("stronger").get_to(c.stronger);
  j.at("weaker").get_to(c.weaker);
  j.at("stronger_rhs").get_to(c.stronger_rhs);
  j.at("weaker_rhs").get_to(c.weaker_rhs);
}

inline void to_json(json& j, const bound_report& r) {
  j = {{"statement", r.id}, {"hypotheses", r.hypotheses}, {"lhs", r.lhs}, {"rhs", r.rhs},
       {"applicable", r.applicable}, {"satisfied", r.satisfied}};
  detail::put_optional(j, "comparison", r.comparison);
}
inline void from_json(const json& j, bound_report& r) {
  j.at("statement").get_to(r.id);
  j.at("hypotheses").get_to(r.hypotheses);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  j.at("applicable").get_to(r.applicable);
  j.at("satisfied").get_to(r.satisfied);
  detail::get_optional(j, "comparison", r.comparison);
}

inline void to_json(json& j, const pair_witness& w) {
  j = {{"x", w.x}, {"y", w.y}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}
inline void from_json(const json& j, pair_witness& w) {
  j.at("x").get_to(w.x);
  j.at("y").get_to(w.y);
  j.at("lhs").get_to(w.lhs);
  j.at("rhs").get_to(w.rhs);
}

inline void to_json(json& j, const comparison_witness& w) {
  j = {{"x", w.x}, {"y", w.y}, {"comparison", w.comparison}};
}
inline void from_json(const json& j, comparison_witness& w) {
  j.at("x").get_to(w.x);
  j.at("y").get_to(w.y);
  j.at("comparison").get_to(w.comparison);
}

/// Wall time is left out so that the output is reproducible.
inline void to_json(json& j, const sweep_summary& s) {
  j = {{"semigroup", s.semigroup},
       {"statement", s.id},
       {"pairs", s.pairs},
       {"applicable", s.applicable},
       {"tight", s.tight},
       {"violations", s.violations},
       {"comparisons", s.comparisons},
       {"strict_comparisons", s.strict_comparisons},
       {"comparison_failures", s.comparison_failures}};
  detail::put_optional(j, "max_size", s.max_size);
  detail::put_optional(j, "first_tight", s.first_tight);
  detail::put_optional(j, "first_strict", s.first_strict);
}
inline void from_json(const json& j, sweep_summary& s) {
  j.at("semigroup").get_to(s.semigroup);
  j.at("statement").get_to(s.id);
  j.at("pairs").get_to(s.pairs);
  j.at("applicable").get_to(s.applicable);
  j.at("tight").get_to(s.tight);
  j.at("violations").get_to(s.violations);
  j.at("comparisons").get_to(s.comparisons);
  j.at("strict_comparisons").get_to(s.strict_comparisons);
  j.at("comparison_failures").get_to(s.comparison_failures);
  detail::get_optional(j, "max_size", s.max_size);
  detail::get_optional(j, "first_tight", s.first_tight);
  detail::get_optional(j, "first_strict", s.first_strict);
}

inline void to_json(json& j, const transform_result& t) {
  j = {{"m", t.m},     {"z", t.z},           {"x_z", t.x_z},
       {"y_z", t.y_z}, {"y_tilde", t.y_tilde}, {"y_prime", t.y_prime}};
}
inline void from_json(const json& j, transform_result& t) {
  j.at("m").get_to(t.m);
  j.at("z").get_to(t.z);
  j.at("x_z").get_to(t.x_z);
  j.at("y_z").get_to(t.y_z);
  j.at("y_tilde").get_to(t.y_tilde);
  j.at("y_prime").get_to(t.y_prime);
}

inline void to_json(json& j, const transform_audit& a) {
  j = {{"partition", a.partition},
       {"inclusion", a.inclusion},
       {"disjointness", a.disjointness},
       {"difference_size", a.difference_size},
       {"size_exchange", a.size_exchange},
       {"exchange_lhs", a.exchange_lhs},
       {"exchange_rhs", a.exchange_rhs}};
}
inline void from_json(const json& j, transform_audit& a) {
  j.at("partition").get_to(a.partition);
  j.at("inclusion").get_to(a.inclusion);
  j.at("disjointness").get_to(a.disjointness);
  j.at("difference_size").get_to(a.difference_size);
  j.at("size_exchange").get_to(a.size_exchange);
  j.at("exchange_lhs").get_to(a.exchange_lhs);
  j.at("exchange_rhs").get_to(a.exchange_rhs);
}

inline void to_json(json& j, const sum_matrix& m) {
  j = {{"rows", m.row_labels}, {"cols", m.col_labels}, {"entries", m.entries}};
}
inline void from_json(const json& j, sum_matrix& m) {
  j.at("rows").get_to(m.row_labels);
  j.at("cols").get_to(m.col_labels);
  j.at("entries").get_to(m.entries);
}

inline void to_json(json& j, const localization_result& r) {
  j = {{"matrix", r.matrix},
       {"z", r.z},
       {"row_sets", r.row_sets},
       {"representatives", r.representatives},
       {"chosen_columns", r.chosen_columns},
       {"witness_set", r.witness_set()}};
}
inline void from_json(const json& j, localization_result& r) {
  j.at("matrix").get_to(r.matrix);
  j.at("z").get_to(r.z);
  j.at("row_sets").get_to(r.row_sets);
  j.at("representatives").get_to(r.representatives);
  j.at("chosen_columns").get_to(r.chosen_columns);
}

struct sumset_payload {
  element_set x;
  element_set y;
  element_set sum;
  friend bool operator==(const sumset_payload&, const sumset_payload&) = default;
};

struct omega_payload {
  element_set z;
  omega_breakdown breakdown;
  friend bool operator==(const omega_payload&, const omega_payload&) = default;
};

struct transform_payload {
  element_set x;
  element_set y;
  element_set candidates;
  transform_result result;
  std::optional<transform_audit> audit;  // absent when Y_z is empty
  friend bool operator==(const transform_payload&, const transform_payload&) = default;
};

inline void to_json(json& j, const sumset_payload& p) { j = {{"x", p.x}, {"y", p.y}, {"sum", p.sum}}; }
inline void from_json(const json& j, sumset_payload& p) {
  j.at("x").get_to(p.x);
  j.at("y").get_to(p.y);
  j.at("sum").get_to(p.sum);
}

inline void to_json(json& j, const omega_payload& p) { j = {{"z", p.z}, {"omega", p.breakdown}}; }
inline void from_json(const json& j, omega_payload& p) {
  j.at("z").get_to(p.z);
  j.at("omega").get_to(p.breakdown);
}

inline void to_json(json& j, const transform_payload& p) {
  j = {{"x", p.x}, {"y", p.y}, {"candidates", p.candidates}, {"transform", p.result}};
  detail::put_optional(j, "audit", p.audit);
}
inline void from_json(const json& j, transform_payload& p) {
  j.at("x").get_to(p.x);
  j.at("y").get_to(p.y);
  j.at("candidates").get_to(p.candidates);
  j.at("transform").get_to(p.result);
  detail::get_optional(j, "audit", p.audit);
}

using run_payload = std::variant<sumset_payload, omega_payload, bound_report, sweep_summary,
                                 transform_payload, localization_result>;

/// One CLI invocation: what was asked, on which semigroup, and the result.
struct run_report {
  std::vector<std::string> command;
  std::string semigroup;  // canonical spec
  run_payload payload;

  friend bool operator==(const run_report&, const run_report&) = default;
};

inline constexpr std::array<const char*, 6> payload_types{"sumset", "omega", "verify",
                                                          "sweep",  "transform", "localize"};

inline void to_json(json& j, const run_report& r) {
  j = {{"command", r.command},
       {"semigroup", r.semigroup},
       {"type", payload_types[r.payload.index()]}};
  std::visit([&](const auto& p) { j["result"] = p; }, r.payload);
}

inline void from_json(const json& j, run_report& r) {
  j.at("command").get_to(r.command);
  j.at("semigroup").get_to(r.semigroup);
  const auto type = j.at("type").get<std::string>();
  const json& res = j.at("result");
  if (type == "sumset") r.payload = res.get<sumset_payload>();
  else if (type == "omega") r.payload = res.get<omega_payload>();
  else if (type == "verify") r.payload = res.get<bound_report>();
  else if (type == "sweep") r.payload = res.get<sweep_summary>();
  else if (type == "transform") r.payload = res.get<transform_payload>();
  else if (type == "localize") r.payload = res.get<localization_result>();
  else throw error(error_kind::parse_error, "unknown report type '" + type + "'");
}

}  // namespace addcomb
