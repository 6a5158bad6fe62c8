#pragma once

// Expression trees for map definitions, with evaluation and printing.

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hexpoint/error.hpp"

namespace hexpoint::funcspec {

enum class Op { Add, Sub, Mul, Div };
enum class Func { Min, Max, Abs, Sin, Cos, Sqrt, Clamp01 };

struct FuncInfo {
  Func func;
  std::string_view name;
  int arity;
};

inline constexpr FuncInfo kFunctions[] = {
    {Func::Min, "min", 2},   {Func::Max, "max", 2},   {Func::Abs, "abs", 1},
    {Func::Sin, "sin", 1},   {Func::Cos, "cos", 1},   {Func::Sqrt, "sqrt", 1},
    {Func::Clamp01, "clamp01", 1},
};

inline const FuncInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

inline const FuncInfo& function_info(Func func) {
  for (const auto& f : kFunctions) {
    if (f.func == func) return f;
  }
  return kFunctions[0];
}

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Number, Variable, Negate, Binary, Call };

  Kind kind = Kind::Number;
  double value = 0.0;    // Number
  int variable = 0;      // Variable: index into the point
  Op op = Op::Add;       // Binary
  Func func = Func::Abs; // Call
  std::vector<NodePtr> args;

  static NodePtr number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Number;
    n->value = v;
    return n;
  }
  static NodePtr var(int index) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->variable = index;
    return n;
  }
  static NodePtr negate(NodePtr a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Negate;
    n->args = {std::move(a)};
    return n;
  }
  static NodePtr binary(Op op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Binary;
    n->op = op;
    n->args = {std::move(a), std::move(b)};
    return n;
  }
  static NodePtr call(Func f, std::vector<NodePtr> args) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Call;
    n->func = f;
    n->args = std::move(args);
    return n;
  }
};

inline bool same_structure(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case Node::Kind::Number:
      if (a.value != b.value) return false;
      break;
    case Node::Kind::Variable:
      if (a.variable != b.variable) return false;
      break;
    case Node::Kind::Binary:
      if (a.op != b.op) return false;
      break;
    case Node::Kind::Call:
      if (a.func != b.func) return false;
      break;
    case Node::Kind::Negate:
      break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_structure(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

inline constexpr double kDivisionGuard = 1e-12;

inline double evaluate(const Node& n, const std::vector<double>& point) {
  switch (n.kind) {
    case Node::Kind::Number:
      return n.value;
    case Node::Kind::Variable:
      return point.at(static_cast<std::size_t>(n.variable));
    case Node::Kind::Negate:
      return -evaluate(*n.args[0], point);
    case Node::Kind::Binary: {
      const double a = evaluate(*n.args[0], point);
      const double b = evaluate(*n.args[1], point);
      switch (n.op) {
        case Op::Add: return a + b;
        case Op::Sub: return a - b;
        case Op::Mul: return a * b;
        case Op::Div:
          if (std::fabs(b) < kDivisionGuard) {
            throw Error(ErrorCode::DivisionByZero, "division by a value smaller than 1e-12");
          }
          return a / b;
      }
      break;
    }
    case Node::Kind::Call: {
      const double a = evaluate(*n.args[0], point);
      switch (n.func) {
        case Func::Min: return std::fmin(a, evaluate(*n.args[1], point));
        case Func::Max: return std::fmax(a, evaluate(*n.args[1], point));
        case Func::Abs: return std::fabs(a);
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Sqrt:
          if (a < -kDivisionGuard) {
            throw Error(ErrorCode::NegativeSqrt, "square root of a negative value");
          }
          return std::sqrt(std::fmax(a, 0.0));
        case Func::Clamp01: return std::fmin(std::fmax(a, 0.0), 1.0);
      }
      break;
    }
  }
  return 0.0;
}

/// Shortest decimal form that parses back to the same double.
inline std::string format_number(double v) {
  char buf[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

/// Prints with the minimum parentheses needed to reparse to the same tree.
/// `names` maps variable indices to identifiers.
inline std::string print(const Node& n, const std::vector<std::string>& names, int parent_prec = 0,
                         bool right_operand = false) {
  auto prec_of = [](const Node& x) {
    if (x.kind == Node::Kind::Binary) return (x.op == Op::Add || x.op == Op::Sub) ? 1 : 2;
    if (x.kind == Node::Kind::Negate) return 3;
    return 4;
  };
  const int prec = prec_of(n);
  std::string out;
  switch (n.kind) {
    case Node::Kind::Number:
      out = format_number(n.value);
      // Literals are unsigned in the grammar; a negative value prints as a negation.
      if (n.value < 0 || (n.value == 0 && std::signbit(n.value))) {
        out = "-" + format_number(-n.value);
        return parent_prec >= 3 ? "(" + out + ")" : out;
      }
      return out;
    case Node::Kind::Variable:
      return names.at(static_cast<std::size_t>(n.variable));
    case Node::Kind::Negate:
      out = "-" + print(*n.args[0], names, 3);
      break;
    case Node::Kind::Binary: {
      const char* sym = n.op == Op::Add ? " + " : n.op == Op::Sub ? " - " : n.op == Op::Mul ? " * " : " / ";
      out = print(*n.args[0], names, prec) + sym + print(*n.args[1], names, prec, true);
      break;
    }
    case Node::Kind::Call: {
      out = std::string(function_info(n.func).name) + "(";
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) out += ", ";
        out += print(*n.args[i], names);
      }
      return out + ")";
    }
  }
  // Binary operators associate left, so an equal-precedence right operand needs parens.
  const bool wrap = prec < parent_prec || (right_operand && prec == parent_prec && prec < 3);
  return wrap ? "(" + out + ")" : out;
}

}  // namespace hexpoint::funcspec
