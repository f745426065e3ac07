// SPDX-License-Identifier: Apache-2.0
//
// Integrand expressions in one variable t.
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?              (right-associative)
//   atom   := NUMBER | 't' | 'pi' | 'e' | IDENT '(' expr (',' expr)* ')' | '(' expr ')'
//
// Functions: log exp sqrt sin cos abs (one argument), pow (two).
#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "logquad/errors.hpp"
#include "logquad/transforms.hpp"

namespace logquad {

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Log, Exp, Sqrt, Sin, Cos, Abs, Pow };
enum class Constant { Pi, E };

std::string_view to_string(Function fn);
std::size_t arity(Function fn);

class Expr {
 public:
  struct Number {
    long double value;
  };
  struct Variable {};
  struct Named {
    Constant id;
  };
  struct Negate {
    std::shared_ptr<const Expr> operand;
  };
  struct Binary {
    BinaryOp op;
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
  };
  struct Call {
    Function fn;
    std::vector<std::shared_ptr<const Expr>> args;
  };
  using Node = std::variant<Number, Variable, Named, Negate, Binary, Call>;

  explicit Expr(Node node) : node_(std::move(node)) {}

  static Expr number(long double v) { return Expr(Number{v}); }
  static Expr variable() { return Expr(Variable{}); }
  static Expr named(Constant c) { return Expr(Named{c}); }
  static Expr negate(Expr operand);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr call(Function fn, std::vector<Expr> args);

  const Node& node() const { return node_; }
  bool is_variable() const { return std::holds_alternative<Variable>(node_); }

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  Node node_;
};

/// Throws SyntaxError with the byte offset of the offending token.
Expr parse(std::string_view src);

/// Fully parenthesized rendering that parses back to the same tree.
std::string print(const Expr& expr);

/// Evaluates at t = point.t. `log(t)` whose argument is exactly the variable
/// is taken from point.log_t. Throws DomainError for log or sqrt of a
/// negative number.
template <typename Scalar>
Scalar eval(const Expr& expr, const MapPoint<Scalar>& point) {
  using std::abs;
  using std::cos;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sin;
  using std::sqrt;

  struct Visitor {
    const MapPoint<Scalar>& point;

    Scalar operator()(const Expr::Number& n) const { return static_cast<Scalar>(n.value); }
    Scalar operator()(const Expr::Variable&) const { return point.t; }
    Scalar operator()(const Expr::Named& c) const {
      return c.id == Constant::Pi ? pi_value<Scalar>() : e_value<Scalar>();
    }
    Scalar operator()(const Expr::Negate& u) const { return -eval(*u.operand, point); }
    Scalar operator()(const Expr::Binary& b) const {
      const Scalar l = eval(*b.lhs, point);
      const Scalar r = eval(*b.rhs, point);
      switch (b.op) {
        case BinaryOp::Add: return l + r;
        case BinaryOp::Sub: return l - r;
        case BinaryOp::Mul: return l * r;
        case BinaryOp::Div: return l / r;
        case BinaryOp::Pow: return pow(l, r);
      }
      return l;
    }
    Scalar operator()(const Expr::Call& c) const {
      if (c.fn == Function::Log && c.args[0]->is_variable()) {
        return point.log_t;
      }
      const Scalar a = eval(*c.args[0], point);
      switch (c.fn) {
        case Function::Log:
          if (a < Scalar(0)) throw DomainError("log of a negative number");
          return log(a);
        case Function::Sqrt:
          if (a < Scalar(0)) throw DomainError("sqrt of a negative number");
          return sqrt(a);
        case Function::Exp: return exp(a);
        case Function::Sin: return sin(a);
        case Function::Cos: return cos(a);
        case Function::Abs: return abs(a);
        case Function::Pow: return pow(a, eval(*c.args[1], point));
      }
      return a;
    }
  };
  return std::visit(Visitor{point}, expr.node());
}

}  // namespace logquad
