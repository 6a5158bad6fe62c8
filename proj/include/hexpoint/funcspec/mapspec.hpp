#pragma once

// Map definitions: one expression per output coordinate, separated by ';'.
//
//   spec    := expr (';' expr)*
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | primary
//   primary := number | variable | function '(' expr (',' expr)* ')' | '(' expr ')'
//
// Variables are `x` on [0,1], `x`, `y` on the unit square and `l0`..`lm` on
// the simplex of dimension m. Functions: min, max, abs, sin, cos, sqrt,
// clamp01.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hexpoint/error.hpp"
#include "hexpoint/funcspec/expr.hpp"

namespace hexpoint::funcspec {

inline constexpr double kRangeTolerance = 1e-9;

class Domain {
 public:
  enum class Kind { Interval, Square, Simplex };

  static Domain interval() { return Domain(Kind::Interval, 1); }
  static Domain square() { return Domain(Kind::Square, 2); }
  static Domain simplex(int m) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "simplex dimension must be at least 1");
    return Domain(Kind::Simplex, m);
  }
  /// 1 -> [0,1], 2 -> unit square.
  static Domain from_arity(int arity) {
    if (arity == 1) return interval();
    if (arity == 2) return square();
    throw Error(ErrorCode::ArityError, "arity must be 1 or 2, got " + std::to_string(arity));
  }

  Kind kind() const { return kind_; }
  /// Simplex dimension m; for the box domains the number of variables.
  int dimension() const { return dim_; }
  /// Number of coordinates of a point, which is also the number of outputs.
  std::size_t coordinates() const {
    return kind_ == Kind::Simplex ? static_cast<std::size_t>(dim_) + 1 : static_cast<std::size_t>(dim_);
  }

  std::vector<std::string> variable_names() const {
    if (kind_ == Kind::Interval) return {"x"};
    if (kind_ == Kind::Square) return {"x", "y"};
    std::vector<std::string> out;
    for (int i = 0; i <= dim_; ++i) out.push_back("l" + std::to_string(i));
    return out;
  }

  /// Whether `p` lies in the domain, within `tol`.
  bool contains(const std::vector<double>& p, double tol = kRangeTolerance) const {
    if (p.size() != coordinates()) return false;
    double sum = 0;
    for (double v : p) {
      if (!std::isfinite(v) || v < -tol) return false;
      if (kind_ != Kind::Simplex && v > 1 + tol) return false;
      sum += v;
    }
    return kind_ != Kind::Simplex || std::fabs(sum - 1.0) <= tol;
  }

  std::string describe() const {
    if (kind_ == Kind::Interval) return "[0,1]";
    if (kind_ == Kind::Square) return "[0,1]^2";
    return "simplex of dimension " + std::to_string(dim_);
  }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(Kind kind, int dim) : kind_(kind), dim_(dim) {}
  Kind kind_;
  int dim_;
};

/// A parsed map from a domain into itself. Immutable; evaluation is reentrant.
class MapSpec {
 public:
  MapSpec(Domain domain, std::vector<NodePtr> exprs, std::string source)
      : domain_(domain), exprs_(std::move(exprs)), source_(std::move(source)) {}

  const Domain& domain() const { return domain_; }
  const std::vector<NodePtr>& exprs() const { return exprs_; }
  const std::string& source() const { return source_; }

  /// Raw componentwise evaluation, no range check.
  std::vector<double> evaluate_raw(const std::vector<double>& p) const {
    std::vector<double> out;
    out.reserve(exprs_.size());
    for (const auto& e : exprs_) out.push_back(evaluate(*e, p));
    return out;
  }

  /// Evaluates and checks that the image lies in the domain within 1e-9.
  std::vector<double> operator()(const std::vector<double>& p) const {
    if (p.size() != domain_.coordinates()) {
      throw Error(ErrorCode::ArityError, "point has " + std::to_string(p.size()) +
                                             " coordinates, map expects " +
                                             std::to_string(domain_.coordinates()));
    }
    auto out = evaluate_raw(p);
    if (!domain_.contains(out)) {
      std::string img;
      for (std::size_t i = 0; i < out.size(); ++i) img += (i ? ", " : "") + format_number(out[i]);
      std::string at;
      for (std::size_t i = 0; i < p.size(); ++i) at += (i ? ", " : "") + format_number(p[i]);
      throw Error(ErrorCode::MapRangeError,
                  "image (" + img + ") of (" + at + ") leaves " + domain_.describe());
    }
    return out;
  }

  /// Canonical text; parsing it gives a structurally identical map.
  std::string print() const {
    const auto names = domain_.variable_names();
    std::string out;
    for (std::size_t i = 0; i < exprs_.size(); ++i) {
      if (i) out += "; ";
      out += funcspec::print(*exprs_[i], names);
    }
    return out;
  }

  bool same_structure(const MapSpec& other) const {
    if (!(domain_ == other.domain_) || exprs_.size() != other.exprs_.size()) return false;
    for (std::size_t i = 0; i < exprs_.size(); ++i) {
      if (!funcspec::same_structure(*exprs_[i], *other.exprs_[i])) return false;
    }
    return true;
  }

 private:
  Domain domain_;
  std::vector<NodePtr> exprs_;
  std::string source_;
};

/// Evaluates f at p and checks the image, convenience for callers holding a point.
inline std::vector<double> eval(const MapSpec& f, const std::vector<double>& p) { return f(p); }

namespace detail {

class Parser {
 public:
  Parser(std::string_view src, const Domain& domain) : src_(src), domain_(domain) {}

  std::vector<NodePtr> parse_spec() {
    std::vector<NodePtr> exprs{parse_expr()};
    skip_space();
    while (peek() == ';') {
      ++pos_;
      exprs.push_back(parse_expr());
      skip_space();
    }
    if (pos_ < src_.size()) fail({"'+'", "'-'", "'*'", "'/'", "';'", "end of input"});
    return exprs;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::set<std::string>& expected) const { fail_at(pos_, expected); }

  [[noreturn]] void fail_at(std::size_t offset, const std::set<std::string>& expected) const {
    std::string found = offset < src_.size() ? "'" + std::string(1, src_[offset]) + "'" : "end of input";
    std::string list;
    for (const auto& e : expected) list += (list.empty() ? "" : ", ") + e;
    throw Error(ErrorCode::SyntaxError, "offset " + std::to_string(offset) + ": found " + found +
                                            ", expected one of {" + list + "}");
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = Node::binary(c == '+' ? Op::Add : Op::Sub, lhs, parse_term());
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      lhs = Node::binary(c == '*' ? Op::Mul : Op::Div, lhs, parse_unary());
    }
  }

  NodePtr parse_unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return Node::negate(parse_unary());
    }
    if (peek() == '+') {
      ++pos_;
      return parse_unary();
    }
    return parse_primary();
  }

  NodePtr parse_primary() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      skip_space();
      if (peek() != ')') fail({"')'", "'+'", "'-'", "'*'", "'/'"});
      ++pos_;
      return inner;
    }
    fail({"number", "variable", "function", "'('", "'-'"});
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ - start == 1 && src_[start] == '.') fail_at(start, {"number"});
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
      } else {
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    return Node::number(std::strtod(text.c_str(), nullptr));
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string name(src_.substr(start, pos_ - start));

    if (const FuncInfo* f = find_function(name)) {
      skip_space();
      if (peek() != '(') fail({"'('"});
      ++pos_;
      std::vector<NodePtr> args{parse_expr()};
      skip_space();
      while (peek() == ',') {
        ++pos_;
        args.push_back(parse_expr());
        skip_space();
      }
      if (peek() != ')') fail({"')'", "','"});
      if (static_cast<int>(args.size()) != f->arity) {
        throw Error(ErrorCode::SyntaxError, "offset " + std::to_string(start) + ": " + name +
                                                " takes " + std::to_string(f->arity) +
                                                " argument(s), got " + std::to_string(args.size()));
      }
      ++pos_;
      return Node::call(f->func, std::move(args));
    }

    const auto names = domain_.variable_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return Node::var(static_cast<int>(i));
    }
    if (looks_like_variable(name)) {
      throw Error(ErrorCode::ArityError, "offset " + std::to_string(start) + ": variable '" + name +
                                             "' is not defined on " + domain_.describe());
    }
    fail_at(start, {"variable", "function"});
  }

  static bool looks_like_variable(const std::string& name) {
    if (name == "x" || name == "y") return true;
    if (name.size() >= 2 && name[0] == 'l') {
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
      }
      return true;
    }
    return false;
  }

  std::string_view src_;
  Domain domain_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MapSpec parse(std::string_view src, const Domain& domain) {
  detail::Parser parser(src, domain);
  auto exprs = parser.parse_spec();
  if (exprs.size() != domain.coordinates()) {
    throw Error(ErrorCode::ArityError, "map on " + domain.describe() + " needs " +
                                           std::to_string(domain.coordinates()) +
                                           " coordinate expression(s), got " +
                                           std::to_string(exprs.size()));
  }
  return MapSpec(domain, std::move(exprs), std::string(src));
}

/// arity 1: [0,1]; arity 2: unit square.
inline MapSpec parse(std::string_view src, int arity) { return parse(src, Domain::from_arity(arity)); }

}  // namespace hexpoint::funcspec
