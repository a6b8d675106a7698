#pragma once

// A small expression language for coefficient functionals phi(r).
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'
//
// Identifiers are the bound variable `r` or parameters supplied at parse
// time. Functions: gamma, rgamma, fact (fact(t) = gamma(t+1)), exp, sqrt.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "coefficient.hpp"
#include "error.hpp"
#include "special.hpp"

namespace rmt {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnboundIdentifierError : public ParseError {
 public:
  UnboundIdentifierError(const std::string& name, std::size_t position)
      : ParseError("unbound identifier '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ArityError : public ParseError {
 public:
  using ParseError::ParseError;
};

enum class Builtin { Gamma, RGamma, Fact, Exp, Sqrt };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, Variable, Param, Binary, Negate, Call };

  Kind kind = Kind::Number;
  double number = 0.0;
  std::string name;  // Param name or function name
  char op = 0;       // Binary operator
  Builtin fn = Builtin::Gamma;
  std::vector<ExprPtr> args;
};

namespace detail {

struct BuiltinInfo {
  std::string_view name;
  Builtin id;
};

inline constexpr BuiltinInfo kBuiltins[] = {
    {"gamma", Builtin::Gamma}, {"rgamma", Builtin::RGamma}, {"fact", Builtin::Fact},
    {"exp", Builtin::Exp},     {"sqrt", Builtin::Sqrt},
};

class Parser {
 public:
  Parser(std::string_view src, const CoefficientFn::Params& params)
      : src_(src), params_(params) {}

  ExprPtr parse() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
    ExprPtr e = expr();
    skip_ws();
    if (pos_ < src_.size())
      throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  std::string_view src_;
  const CoefficientFn::Params& params_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size())
        throw ParseError(std::string("expected '") + c + "' but reached end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  static ExprPtr binary(char op, ExprPtr lhs, ExprPtr rhs) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Binary;
    n->op = op;
    n->args = {std::move(lhs), std::move(rhs)};
    return n;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+')) lhs = binary('+', lhs, term());
      else if (accept('-')) lhs = binary('-', lhs, term());
      else return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (accept('*')) lhs = binary('*', lhs, unary());
      else if (accept('/')) lhs = binary('/', lhs, unary());
      else return lhs;
    }
  }

  ExprPtr unary() {
    if (accept('-')) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Negate;
      n->args = {unary()};
      return n;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (accept('^')) return binary('^', base, unary());
    return base;
  }

  ExprPtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    double value = 0.0;
    auto [end, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), value);
    if (ec != std::errc()) throw ParseError("malformed number", start);
    pos_ = static_cast<std::size_t>(end - src_.data());
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Number;
    n->number = value;
    return n;
  }

  ExprPtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string name(src_.substr(start, pos_ - start));

    if (accept('(')) {
      const BuiltinInfo* info = nullptr;
      for (const auto& b : kBuiltins)
        if (b.name == name) info = &b;
      if (!info) throw ParseError("unknown function '" + name + "'", start);
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Call;
      n->name = name;
      n->fn = info->id;
      if (!accept(')')) {
        n->args.push_back(expr());
        while (accept(',')) n->args.push_back(expr());
        expect(')');
      }
      if (n->args.size() != 1)
        throw ArityError("function '" + name + "' takes 1 argument, got " +
                             std::to_string(n->args.size()),
                         start);
      return n;
    }

    auto n = std::make_shared<ExprNode>();
    if (name == "r") {
      n->kind = ExprNode::Kind::Variable;
      return n;
    }
    if (!params_.contains(name)) throw UnboundIdentifierError(name, start);
    n->kind = ExprNode::Kind::Param;
    n->name = name;
    return n;
  }
};

}  // namespace detail

/// Parses a phi-definition. Identifiers other than `r` must appear in params.
inline ExprPtr parse_expr(std::string_view source, const CoefficientFn::Params& params = {}) {
  return detail::Parser(source, params).parse();
}

/// Evaluates an expression at r. Poles raise PoleError, other undefined
/// operations (sqrt of a negative, fractional power of a negative) DomainError.
inline double eval_expr(const ExprNode& e, double r, const CoefficientFn::Params& params) {
  using K = ExprNode::Kind;
  switch (e.kind) {
    case K::Number: return e.number;
    case K::Variable: return r;
    case K::Param: {
      auto it = params.find(e.name);
      if (it == params.end()) throw DomainError("unbound parameter '" + e.name + "'");
      return it->second;
    }
    case K::Negate: return -eval_expr(*e.args[0], r, params);
    case K::Binary: {
      const double x = eval_expr(*e.args[0], r, params);
      const double y = eval_expr(*e.args[1], r, params);
      switch (e.op) {
        case '+': return x + y;
        case '-': return x - y;
        case '*': return x * y;
        case '/':
          if (y == 0.0) throw PoleError("division by zero");
          return x / y;
        case '^': {
          const double v = std::pow(x, y);
          if (std::isnan(v)) throw DomainError("undefined power");
          return v;
        }
      }
      throw DomainError("unknown operator");
    }
    case K::Call: {
      const double x = eval_expr(*e.args[0], r, params);
      switch (e.fn) {
        case Builtin::Gamma: return gamma(x);
        case Builtin::RGamma: return rgamma(x);
        case Builtin::Fact: return gamma(x + 1.0);
        case Builtin::Exp: return std::exp(x);
        case Builtin::Sqrt:
          if (x < 0.0) throw DomainError("sqrt of a negative number");
          return std::sqrt(x);
      }
    }
  }
  throw DomainError("malformed expression");
}

namespace detail {

inline std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace detail

/// Fully parenthesized rendering that parses back to the same tree.
inline std::string to_string(const ExprNode& e) {
  using K = ExprNode::Kind;
  switch (e.kind) {
    case K::Number: return detail::format_number(e.number);
    case K::Variable: return "r";
    case K::Param: return e.name;
    case K::Negate: return "(-" + to_string(*e.args[0]) + ")";
    case K::Binary:
      return "(" + to_string(*e.args[0]) + " " + e.op + " " + to_string(*e.args[1]) + ")";
    case K::Call: return e.name + "(" + to_string(*e.args[0]) + ")";
  }
  return {};
}

/// Structural equality of two expression trees.
inline bool same_structure(const ExprNode& x, const ExprNode& y) {
  if (x.kind != y.kind || x.args.size() != y.args.size()) return false;
  using K = ExprNode::Kind;
  switch (x.kind) {
    case K::Number:
      if (x.number != y.number) return false;
      break;
    case K::Param:
      if (x.name != y.name) return false;
      break;
    case K::Binary:
      if (x.op != y.op) return false;
      break;
    case K::Call:
      if (x.fn != y.fn) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!same_structure(*x.args[i], *y.args[i])) return false;
  return true;
}

/// Builds a coefficient functional from DSL source.
inline CoefficientFn parse_phi(std::string_view source, const CoefficientFn::Params& params = {}) {
  ExprPtr ast = parse_expr(source, params);
  return CoefficientFn(std::string(source), params,
                       [ast, params](double r) { return eval_expr(*ast, r, params); });
}

}  // namespace rmt
