#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace freecrit {

/// Parsed polynomial expression: identifiers, integers, + - * ^, parentheses,
/// division by an integer literal.
struct Expr {
  enum class Op { number, ident, add, sub, mul, neg, pow, div };

  Op op = Op::number;
  std::string text;  // literal digits or identifier
  unsigned exponent = 0;
  std::vector<Expr> args;
  std::size_t pos = 0;
};

/// Throws ParseError with the byte offset of the first bad token.
Expr parse_expr(std::string_view src);

void collect_identifiers(const Expr& e, std::set<std::string>& out);

/// Evaluates with a context supplying number/ident/add/sub/mul/neg/pow/div.
/// Products are formed left to right.
template <class Ctx>
auto evaluate(const Expr& e, Ctx& ctx) -> typename Ctx::value_type {
  switch (e.op) {
    case Expr::Op::number:
      return ctx.number(e.text);
    case Expr::Op::ident:
      return ctx.ident(e.text, e.pos);
    case Expr::Op::add:
      return ctx.add(evaluate(e.args[0], ctx), evaluate(e.args[1], ctx));
    case Expr::Op::sub:
      return ctx.sub(evaluate(e.args[0], ctx), evaluate(e.args[1], ctx));
    case Expr::Op::mul:
      return ctx.mul(evaluate(e.args[0], ctx), evaluate(e.args[1], ctx));
    case Expr::Op::neg:
      return ctx.neg(evaluate(e.args[0], ctx));
    case Expr::Op::pow:
      return ctx.pow(evaluate(e.args[0], ctx), e.exponent);
    case Expr::Op::div:
      return ctx.div(evaluate(e.args[0], ctx), e.text);
  }
  return ctx.number("0");
}

}  // namespace freecrit
