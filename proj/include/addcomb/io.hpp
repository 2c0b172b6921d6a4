#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "constructions.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "semigroup.hpp"

namespace addcomb {

namespace detail {

inline std::string located(std::string_view text, std::size_t pos, const std::string& msg) {
  return msg + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'";
}

inline bool parse_index(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(error_kind::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

/// Parses "{0,3,5}" (whitespace allowed); "{}" is the empty set.
inline element_set parse_set(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw error(error_kind::parse_error, "set literal must look like {0,1,2}: '" + std::string(text) + "'");
  }
  element_set out;
  std::string_view body = s.substr(1, s.size() - 2);
  if (detail::trim(body).empty()) return out;
  std::size_t offset = 1;
  for (;;) {
    const std::size_t comma = body.find(',');
    const std::string_view token = detail::trim(body.substr(0, comma));
    std::size_t value = 0;
    if (!detail::parse_index(token, value)) {
      throw error(error_kind::parse_error,
                  detail::located(text, offset, "bad element '" + std::string(token) + "'"));
    }
    if (value >= max_carrier) {
      throw error(error_kind::index_out_of_range,
                  detail::located(text, offset, "element " + std::to_string(value) + " too large"));
    }
    out.insert(static_cast<element>(value));
    if (comma == std::string_view::npos) break;
    offset += comma + 1;
    body.remove_prefix(comma + 1);
  }
  return out;
}

/// Cayley table text: a line with n, then n rows of n indices.
inline finite_semigroup parse_cayley_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&](std::size_t& line_no) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!detail::trim(line).empty()) return true;
    }
    return false;
  };
  std::size_t line_no = 0;
  if (!next_line(line_no)) throw error(error_kind::parse_error, "empty Cayley table");
  std::size_t n = 0;
  if (!detail::parse_index(detail::trim(line), n) || n == 0) {
    throw error(error_kind::parse_error, "line 1: expected a positive size, got '" + line + "'");
  }
  if (n > max_carrier) {
    throw error(error_kind::index_out_of_range, "size " + std::to_string(n) + " exceeds " +
                                                    std::to_string(max_carrier));
  }
  std::vector<element> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_line(line_no)) {
      throw error(error_kind::parse_error, "expected " + std::to_string(n) + " rows, got " +
                                               std::to_string(r));
    }
    std::istringstream row(line);
    std::string token;
    std::size_t count = 0;
    while (row >> token) {
      std::size_t v = 0;
      if (!detail::parse_index(token, v)) {
        throw error(error_kind::parse_error,
                    "line " + std::to_string(line_no) + ": bad entry '" + token + "'");
      }
      if (v >= n) {
        throw error(error_kind::index_out_of_range, "line " + std::to_string(line_no) + ": entry " +
                                                        std::to_string(v) + " not in [0," +
                                                        std::to_string(n) + ")");
      }
      table.push_back(static_cast<element>(v));
      ++count;
    }
    if (count != n) {
      throw error(error_kind::parse_error, "line " + std::to_string(line_no) + ": ragged row with " +
                                               std::to_string(count) + " entries, expected " +
                                               std::to_string(n));
    }
  }
  if (next_line(line_no)) {
    throw error(error_kind::parse_error, "line " + std::to_string(line_no) + ": trailing content");
  }
  return finite_semigroup::build(n, std::move(table));
}

inline std::string format_cayley_table(const finite_semigroup& a) {
  std::ostringstream out;
  out << a.size() << '\n';
  for (element r = 0; r < a.size(); ++r) {
    for (element c = 0; c < a.size(); ++c) out << (c ? " " : "") << a.op(r, c);
    out << '\n';
  }
  return out.str();
}

/// A named construction or a Cayley table file.
struct semigroup_spec {
  enum class kind { cyclic, dihedral, quaternion8, product, leftzero, maxchain, cayley };

  kind type = kind::cyclic;
  std::size_t n = 0;                   // cyclic m, dihedral k, leftzero n, maxchain n
  std::string path;                    // cayley
  std::vector<semigroup_spec> factors; // product: exactly two

  std::string to_string() const {
    switch (type) {
      case kind::cyclic: return "cyclic:" + std::to_string(n);
      case kind::dihedral: return "dihedral:" + std::to_string(n);
      case kind::quaternion8: return "quaternion8";
      case kind::product:
        return "product:(" + factors[0].to_string() + "," + factors[1].to_string() + ")";
      case kind::leftzero: return "leftzero:" + std::to_string(n);
      case kind::maxchain: return "maxchain:" + std::to_string(n);
      case kind::cayley: return "cayley:" + path;
    }
    return {};
  }

  friend bool operator==(const semigroup_spec&, const semigroup_spec&) = default;
};

namespace detail {

class spec_parser {
 public:
  explicit spec_parser(std::string_view text) : text_(text) {}

  semigroup_spec parse_all() {
    semigroup_spec s = parse(false);
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
    return s;
  }

 private:
  semigroup_spec parse(bool nested) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    semigroup_spec s;
    if (name == "quaternion8") {
      s.type = semigroup_spec::kind::quaternion8;
      return s;
    }
    if (name == "cyclic") s.type = semigroup_spec::kind::cyclic;
    else if (name == "dihedral") s.type = semigroup_spec::kind::dihedral;
    else if (name == "leftzero") s.type = semigroup_spec::kind::leftzero;
    else if (name == "maxchain") s.type = semigroup_spec::kind::maxchain;
    else if (name == "product") s.type = semigroup_spec::kind::product;
    else if (name == "cayley") s.type = semigroup_spec::kind::cayley;
    else {
      pos_ = start;
      throw error(error_kind::unknown_spec,
                  located(text_, start, "unknown construction '" + name + "'"));
    }
    expect(':');
    switch (s.type) {
      case semigroup_spec::kind::product:
        expect('(');
        s.factors.push_back(parse(true));
        expect(',');
        s.factors.push_back(parse(true));
        expect(')');
        break;
      case semigroup_spec::kind::cayley: {
        const std::size_t from = pos_;
        if (nested) {
          while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
        } else {
          pos_ = text_.size();
        }
        s.path = std::string(text_.substr(from, pos_ - from));
        if (s.path.empty()) fail("missing path");
        break;
      }
      default: {
        const std::size_t from = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (!parse_index(text_.substr(from, pos_ - from), s.n)) {
          pos_ = from;
          fail("expected a number");
        }
      }
    }
    return s;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw error(error_kind::parse_error, located(text_, pos_, msg));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline semigroup_spec parse_spec(std::string_view text) {
  return detail::spec_parser(detail::trim(text)).parse_all();
}

/// Builds the semigroup a spec describes.
inline finite_semigroup resolve(const semigroup_spec& s) {
  switch (s.type) {
    case semigroup_spec::kind::cyclic: return cyclic(s.n);
    case semigroup_spec::kind::dihedral: return dihedral(s.n);
    case semigroup_spec::kind::quaternion8: return quaternion8();
    case semigroup_spec::kind::product:
      return direct_product(resolve(s.factors[0]), resolve(s.factors[1]));
    case semigroup_spec::kind::leftzero: return left_zero(s.n);
    case semigroup_spec::kind::maxchain: return max_chain(s.n);
    case semigroup_spec::kind::cayley: return parse_cayley_table(detail::read_file(s.path));
  }
  throw error(error_kind::unknown_spec, s.to_string());
}

inline finite_semigroup resolve(std::string_view text) { return resolve(parse_spec(text)); }

/// Display names for elements, read as whitespace-separated tokens.
inline std::vector<std::string> parse_labels(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> labels;
  for (std::string token; in >> token;) labels.push_back(token);
  if (labels.size() != n) {
    throw error(error_kind::parse_error, "expected " + std::to_string(n) + " labels, got " +
                                             std::to_string(labels.size()));
  }
  return labels;
}

}  // namespace addcomb
