#pragma once

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "davenport_transform.hpp"
#include "io.hpp"
#include "localization.hpp"
#include "report.hpp"
#include "sweep.hpp"
#include "theorems.hpp"

namespace addcomb::cli {

/// Process exit codes.
enum exit_code : int {
  ok = 0,
  usage = 1,
  precondition = 2,
  violation = 3,  // a bound failed on a pair; never expected
};

struct run_outcome {
  int code = ok;
  std::string out;
  std::string err;
  std::optional<run_report> report;
};

namespace detail {

struct context {
  std::string spec_text;
  semigroup_spec spec;
  finite_semigroup semigroup = cyclic(1);
  std::vector<std::string> labels;
  bool json = false;
  bool timing = false;
};

inline std::string label_of(const context& c, element e) {
  return c.labels.empty() ? std::to_string(e) : c.labels.at(e);
}

inline std::string format_set(const context& c, element_set s) {
  std::string out = "{";
  bool first = true;
  for (element e : s) {
    out += (first ? "" : ",") + label_of(c, e);
    first = false;
  }
  return out + "}";
}

inline element_set in_carrier(const context& c, element_set s, const char* flag) {
  if (!s.subset_of(c.semigroup.carrier())) {
    throw error(error_kind::index_out_of_range, std::string(flag) + " " + s.to_string() +
                                                    " leaves the carrier of size " +
                                                    std::to_string(c.semigroup.size()));
  }
  return s;
}

inline int code_for(error_kind k) {
  switch (k) {
    case error_kind::parse_error:
    case error_kind::unknown_spec:
    case error_kind::index_out_of_range:
    case error_kind::non_associative:
    case error_kind::carrier_too_large:
      return usage;
    default:
      return precondition;
  }
}

inline void emit_report(const context& c, run_outcome& r, run_report report, double seconds) {
  if (c.json) {
    json j = report;
    if (c.timing) j["seconds"] = seconds;
    r.out = j.dump(2) + "\n";
  }
  r.report = std::move(report);
}

inline std::string format_report(const context& c, const bound_report& b) {
  std::ostringstream o;
  o << "statement: " << to_string(b.id) << "\n";
  for (const auto& h : b.hypotheses) o << "  hypothesis " << h.name << ": " << (h.holds ? "yes" : "no") << "\n";
  if (!b.applicable) {
    std::string missing;
    for (const auto& h : b.hypotheses)
      if (!h.holds) missing += (missing.empty() ? "" : ", ") + ("not " + h.name);
    o << "not applicable (" << missing << ")\n";
  }
  o << "|X+Y| = " << b.lhs << ", bound = " << b.rhs << "\n";
  if (b.applicable) o << (b.satisfied ? "satisfied" : "VIOLATED") << (b.tight() ? " (tight)" : "") << "\n";
  if (b.comparison) {
    o << "  " << to_string(b.comparison->stronger) << " bound " << b.comparison->stronger_rhs
      << " vs " << to_string(b.comparison->weaker) << " bound " << b.comparison->weaker_rhs
      << (b.comparison->holds() ? "" : "  INCONSISTENT") << "\n";
  }
  (void)c;
  return o.str();
}

inline std::string format_witness(const context& c, const pair_witness& w) {
  return "X=" + format_set(c, w.x) + " Y=" + format_set(c, w.y) + " |X+Y|=" +
         std::to_string(w.lhs) + " bound=" + w.rhs.to_string();
}

}  // namespace detail

/// Parses argv (argv[0] is the program name) and runs one subcommand.
inline run_outcome run(const std::vector<std::string>& argv) {
  using namespace detail;
  run_outcome result;
  CLI::App app{"Sumsets, Cauchy-Davenport constants and bound verification on finite semigroups",
               argv.empty() ? "addcomb" : argv.front()};
  app.require_subcommand(1);

  context ctx;
  std::string labels_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--semigroup", ctx.spec_text,
                    "cyclic:m | dihedral:k | quaternion8 | product:(a,b) | leftzero:n | maxchain:n | cayley:<path>")
        ->required();
    sub->add_flag("--json", ctx.json, "machine-readable output");
    sub->add_option("--labels", labels_path, "file with one display name per element");
  };

  std::string x_text, y_text, z_text, statement_text;
  std::optional<std::size_t> max_size;
  std::size_t jobs = 1, exponent = 1;
  std::optional<std::size_t> z_element;

  auto* sumset_cmd = app.add_subcommand("sumset", "print X+Y");
  common(sumset_cmd);
  sumset_cmd->add_option("--x", x_text)->required();
  sumset_cmd->add_option("--y", y_text)->required();

  auto* omega_cmd = app.add_subcommand("omega", "omega(Z) with one row per unit of Z");
  common(omega_cmd);
  omega_cmd->add_option("--z", z_text)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check one bound on one pair");
  common(verify_cmd);
  verify_cmd->add_option("--x", x_text)->required();
  verify_cmd->add_option("--y", y_text)->required();
  verify_cmd->add_option("--statement", statement_text,
                         "cd-1813 | chowla | pillai | hk | kemperman-weak | thm2.2 | cor2.4 | cor2.7 | cor2.9")
      ->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "check one bound on every pair");
  common(sweep_cmd);
  sweep_cmd->add_option("--statement", statement_text)->required();
  sweep_cmd->add_option("--max-size", max_size, "cap on |X| and |Y|");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--timing", ctx.timing, "include wall time in --json output");

  auto* transform_cmd = app.add_subcommand("transform", "generalized Davenport transform and audit");
  common(transform_cmd);
  transform_cmd->add_option("--x", x_text)->required();
  transform_cmd->add_option("--y", y_text)->required();
  transform_cmd->add_option("--z", z_element, "candidate element (default: smallest)");
  transform_cmd->add_option("--m", exponent, "exponent in mX+2Y")->check(CLI::PositiveNumber);

  auto* localize_cmd = app.add_subcommand("localize", "one sum per matrix row via distinct representatives");
  common(localize_cmd);
  localize_cmd->add_option("--x", x_text)->required();
  localize_cmd->add_option("--y", y_text)->required();
  localize_cmd->add_option("--z", z_text, "fixed subset of X+Y of size |Y|-1");

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.code = usage;
    result.err = std::string(e.what()) + "\n" + app.help();
    return result;
  }

  // execution knobs are left out so the record only depends on what was computed
  std::vector<std::string> command;
  for (std::size_t i = 1; i < argv.size(); ++i) {
    if (argv[i] == "--timing") continue;
    if (argv[i] == "--jobs" || argv[i] == "-j") {
      ++i;
      continue;
    }
    if (argv[i].rfind("--jobs=", 0) == 0) continue;
    command.push_back(argv[i]);
  }
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  std::ostringstream out;

  try {
    ctx.spec = parse_spec(ctx.spec_text);
    ctx.semigroup = resolve(ctx.spec);
    if (!labels_path.empty()) ctx.labels = parse_labels(addcomb::detail::read_file(labels_path), ctx.semigroup.size());
    const std::string spec_name = ctx.spec.to_string();

    if (sumset_cmd->parsed()) {
      const element_set x = in_carrier(ctx, parse_set(x_text), "--x");
      const element_set y = in_carrier(ctx, parse_set(y_text), "--y");
      const element_set s = sumset(ctx.semigroup, x, y);
      out << format_set(ctx, s) << "\n";
      emit_report(ctx, result, {command, spec_name, sumset_payload{x, y, s}}, elapsed());
    } else if (omega_cmd->parsed()) {
      const element_set z = in_carrier(ctx, parse_set(z_text), "--z");
      const omega_breakdown o = omega(ctx.semigroup, z);
      out << std::left << std::setw(10) << "unit z0" << "min ord(z - z0)\n";
      for (const auto& row : o.rows) out << std::setw(10) << label_of(ctx, row.unit) << row.inner_inf << "\n";
      if (o.rows.empty()) out << "(no units in Z)\n";
      out << "omega = " << o.overall << "\n";
      emit_report(ctx, result, {command, spec_name, omega_payload{z, o}}, elapsed());
    } else if (verify_cmd->parsed()) {
      const element_set x = in_carrier(ctx, parse_set(x_text), "--x");
      const element_set y = in_carrier(ctx, parse_set(y_text), "--y");
      const bound_report b = verify(parse_statement(statement_text), ctx.semigroup, x, y);
      out << format_report(ctx, b);
      if (b.violated() || (b.comparison && !b.comparison->holds())) result.code = violation;
      emit_report(ctx, result, {command, spec_name, b}, elapsed());
    } else if (sweep_cmd->parsed()) {
      sweep_options opts;
      opts.max_size = max_size;
      opts.jobs = jobs;
      const sweep_summary s = sweep(ctx.semigroup, parse_statement(statement_text), opts, spec_name);
      out << "semigroup: " << s.semigroup << "\nstatement: " << to_string(s.id) << "\n"
          << "pairs: " << s.pairs << "\napplicable: " << s.applicable << "\ntight: " << s.tight
          << "\nviolations: " << s.violations.size() << "\n";
      if (s.first_tight) out << "first tight pair: " << format_witness(ctx, *s.first_tight) << "\n";
      if (s.comparisons) {
        out << "comparisons: " << s.comparisons << " (strict " << s.strict_comparisons
            << ", inconsistent " << s.comparison_failures.size() << ")\n";
      }
      for (const auto& v : s.violations) out << "VIOLATION " << format_witness(ctx, v) << "\n";
      out << "wall time: " << std::fixed << std::setprecision(3) << s.wall_seconds << " s\n";
      if (!s.clean()) result.code = violation;
      emit_report(ctx, result, {command, spec_name, s}, s.wall_seconds);
    } else if (transform_cmd->parsed()) {
      if (!ctx.semigroup.is_unital()) {
        out << "note: semigroup is not unital; working in its unitization (identity "
            << ctx.semigroup.size() << ")\n";
        ctx.semigroup = unitization(ctx.semigroup);
        if (!ctx.labels.empty()) ctx.labels.push_back("1");
      }
      const element_set x = in_carrier(ctx, parse_set(x_text), "--x");
      const element_set y = in_carrier(ctx, parse_set(y_text), "--y");
      const element_set candidates = transform_candidates(ctx.semigroup, x, y, exponent);
      out << "candidates (mX+2Y)\\(X+Y): " << format_set(ctx, candidates) << "\n";
      if (candidates.empty()) {
        throw error(error_kind::candidate_invalid, "no candidates: mX+2Y is inside X+Y");
      }
      const element z = z_element ? static_cast<element>(*z_element) : candidates.front();
      transform_payload p{x, y, candidates, apply_transform(ctx.semigroup, x, y, exponent, z), std::nullopt};
      const transform_result& t = p.result;
      out << "z = " << label_of(ctx, t.z) << "\nx_z = " << label_of(ctx, t.x_z)
          << "\ny_z = " << label_of(ctx, t.y_z) << "\nY~_z = " << format_set(ctx, t.y_tilde)
          << "\nY_z = " << format_set(ctx, t.y_prime) << "\n";
      if (t.y_prime.empty()) {
        out << "audit skipped: Y_z is empty\n";
        result.code = precondition;
      } else {
        p.audit = audit_transform(ctx.semigroup, x, y, t);
        const transform_audit& a = *p.audit;
        out << "(i)   partition        " << to_string(a.partition) << "\n"
            << "(ii)  inclusion        " << to_string(a.inclusion) << "\n"
            << "(iii) disjointness     " << to_string(a.disjointness) << "\n"
            << "(iv)  difference size  " << to_string(a.difference_size) << "\n"
            << "(v)   size exchange    " << to_string(a.size_exchange) << "  (" << a.exchange_lhs
            << " >= " << a.exchange_rhs << ")\n";
        if (a.any_failure()) result.code = violation;
      }
      emit_report(ctx, result, {command, spec_name, p}, elapsed());
    } else if (localize_cmd->parsed()) {
      const element_set x = in_carrier(ctx, parse_set(x_text), "--x");
      const element_set y = in_carrier(ctx, parse_set(y_text), "--y");
      std::optional<element_set> z;
      if (!z_text.empty()) z = parse_set(z_text);
      const localization_result l = localize(ctx.semigroup, x, y, z);
      out << "Z = " << format_set(ctx, l.z) << "\n";
      for (std::size_t i = 0; i < l.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < l.matrix.cols(); ++j) {
          const std::string cell = label_of(ctx, l.matrix.entries[i][j]);
          out << (j ? " " : "") << (l.chosen_columns[i] == j ? "[" + cell + "]" : " " + cell + " ");
        }
        out << "\n";
      }
      out << "witness set (" << l.witness_set().size() << " = k+l-1): " << format_set(ctx, l.witness_set())
          << "\n";
      emit_report(ctx, result, {command, spec_name, l}, elapsed());
    }
  } catch (const error& e) {
    result.code = code_for(e.kind());
    if (!ctx.json) result.out = out.str();
    result.err = std::string(e.what()) + "\n";
    return result;
  }

  if (!ctx.json) result.out = out.str();
  return result;
}

}  // namespace addcomb::cli
