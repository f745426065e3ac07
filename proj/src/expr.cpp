// SPDX-License-Identifier: Apache-2.0
#include "logquad/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>

namespace logquad {

std::string_view to_string(Function fn) {
  switch (fn) {
    case Function::Log: return "log";
    case Function::Exp: return "exp";
    case Function::Sqrt: return "sqrt";
    case Function::Sin: return "sin";
    case Function::Cos: return "cos";
    case Function::Abs: return "abs";
    case Function::Pow: return "pow";
  }
  return "?";
}

std::size_t arity(Function fn) { return fn == Function::Pow ? 2 : 1; }

Expr Expr::negate(Expr operand) { return Expr(Negate{std::make_shared<const Expr>(std::move(operand))}); }

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(Binary{op, std::make_shared<const Expr>(std::move(lhs)), std::make_shared<const Expr>(std::move(rhs))});
}

Expr Expr::call(Function fn, std::vector<Expr> args) {
  Call c{fn, {}};
  c.args.reserve(args.size());
  for (auto& a : args) c.args.push_back(std::make_shared<const Expr>(std::move(a)));
  return Expr(std::move(c));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_.index() != b.node_.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node_);
        if constexpr (std::is_same_v<T, Expr::Number>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          return true;
        } else if constexpr (std::is_same_v<T, Expr::Named>) {
          return lhs.id == rhs.id;
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return *lhs.operand == *rhs.operand;
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          return lhs.op == rhs.op && *lhs.lhs == *rhs.lhs && *lhs.rhs == *rhs.rhs;
        } else {
          if (lhs.fn != rhs.fn || lhs.args.size() != rhs.args.size()) return false;
          for (std::size_t i = 0; i < lhs.args.size(); ++i) {
            if (!(*lhs.args[i] == *rhs.args[i])) return false;
          }
          return true;
        }
      },
      a.node_);
}

namespace {

std::optional<Function> lookup_function(std::string_view name) {
  if (name == "log") return Function::Log;
  if (name == "exp") return Function::Exp;
  if (name == "sqrt") return Function::Sqrt;
  if (name == "sin") return Function::Sin;
  if (name == "cos") return Function::Cos;
  if (name == "abs") return Function::Abs;
  if (name == "pow") return Function::Pow;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("operator or end of input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::string expected) const { throw SyntaxError(pos_, std::move(expected)); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::Add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::Mul, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::Div, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return Expr::negate(unary());
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (accept('^')) return Expr::binary(BinaryOp::Pow, std::move(base), unary());
    return base;
  }

  Expr atom() {
    skip_space();
    if (pos_ >= src_.size()) fail("expression");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (accept('(')) {
      Expr inner = expr();
      expect(')');
      return inner;
    }
    fail("expression");
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ - start == 1 && src_[start] == '.') {
      pos_ = start;
      fail("number");
    }
    // Exponent only when digits follow, so "2e" stays "2" followed by "e".
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    const long double value = std::strtold(text.c_str(), nullptr);
    if (!std::isfinite(value)) {
      pos_ = start;
      fail("finite number");
    }
    return Expr::number(value);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "t") return Expr::variable();
    if (name == "pi") return Expr::named(Constant::Pi);
    if (name == "e") return Expr::named(Constant::E);

    const auto fn = lookup_function(name);
    if (!fn) {
      pos_ = start;
      fail("t, pi, e, or a function name (log, exp, sqrt, sin, cos, abs, pow)");
    }
    expect('(');
    std::vector<Expr> args;
    args.push_back(expr());
    while (accept(',')) args.push_back(expr());
    if (args.size() != arity(*fn)) {
      skip_space();
      fail(std::string(to_string(*fn)) + " takes " + std::to_string(arity(*fn)) + " argument(s)");
    }
    expect(')');
    return Expr::call(*fn, std::move(args));
  }
};

std::string format_literal(long double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

Expr parse(std::string_view src) { return Parser(src).parse_all(); }

std::string print(const Expr& expr) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Number>) {
          const std::string s = format_literal(node.value);
          return node.value < 0 ? "(" + s + ")" : s;
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          return "t";
        } else if constexpr (std::is_same_v<T, Expr::Named>) {
          return node.id == Constant::Pi ? "pi" : "e";
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return "(-" + print(*node.operand) + ")";
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          static constexpr const char* kOps[] = {" + ", " - ", " * ", " / ", " ^ "};
          return "(" + print(*node.lhs) + kOps[static_cast<int>(node.op)] + print(*node.rhs) + ")";
        } else {
          std::string s(to_string(node.fn));
          s += '(';
          for (std::size_t i = 0; i < node.args.size(); ++i) {
            if (i) s += ", ";
            s += print(*node.args[i]);
          }
          return s + ')';
        }
      },
      expr.node());
}

}  // namespace logquad
