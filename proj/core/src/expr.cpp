#include "freecrit/expr.hpp"

#include <cctype>

#include "freecrit/errors.hpp"

namespace freecrit {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr run() {
    skip();
    if (at_end()) throw ParseError("empty expression", 0);
    Expr e = sum();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return e;
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (!at_end() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  static Expr binary(Expr::Op op, Expr a, Expr b, std::size_t pos) {
    Expr e;
    e.op = op;
    e.pos = pos;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      skip();
      std::size_t pos = i_;
      if (eat('+')) {
        lhs = binary(Expr::Op::add, std::move(lhs), product(), pos);
      } else if (eat('-')) {
        lhs = binary(Expr::Op::sub, std::move(lhs), product(), pos);
      } else {
        return lhs;
      }
    }
  }

  Expr product() {
    Expr lhs = unary();
    for (;;) {
      skip();
      std::size_t pos = i_;
      if (eat('*')) {
        lhs = binary(Expr::Op::mul, std::move(lhs), unary(), pos);
      } else if (eat('/')) {
        skip();
        Expr d;
        d.op = Expr::Op::div;
        d.pos = pos;
        d.text = digits();
        if (d.text.find_first_not_of('0') == std::string::npos) throw ParseError("division by zero", pos);
        d.args.push_back(std::move(lhs));
        lhs = std::move(d);
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip();
    std::size_t pos = i_;
    if (eat('-')) {
      Expr e;
      e.op = Expr::Op::neg;
      e.pos = pos;
      e.args.push_back(unary());
      return e;
    }
    if (eat('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip();
    std::size_t pos = i_;
    if (eat('^')) {
      skip();
      std::string n = digits();
      if (n.size() > 6) throw ParseError("exponent too large", pos);
      Expr e;
      e.op = Expr::Op::pow;
      e.pos = pos;
      e.exponent = static_cast<unsigned>(std::stoul(n));
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  Expr atom() {
    skip();
    if (at_end()) throw ParseError("unexpected end of expression", i_);
    std::size_t pos = i_;
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Expr e = sum();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return e;
    }
    Expr e;
    e.pos = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e.op = Expr::Op::number;
      e.text = digits();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      e.op = Expr::Op::ident;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\''))
        e.text += s_[i_++];
      return e;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos);
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) out += s_[i_++];
    if (out.empty()) throw ParseError("expected an integer", i_);
    return out;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).run(); }

void collect_identifiers(const Expr& e, std::set<std::string>& out) {
  if (e.op == Expr::Op::ident) out.insert(e.text);
  for (const auto& a : e.args) collect_identifiers(a, out);
}

}  // namespace freecrit
