#pragma once

#include <gmpxx.h>

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "gwb/error.hpp"
#include "gwb/graded/ring.hpp"
#include "gwb/hilbert/series.hpp"

namespace gwb {

/// Syntax error with a 0-based column into the source text.
class ParseError : public InputError {
 public:
  ParseError(std::size_t column, const std::string& what)
      : InputError("parse error at column " + std::to_string(column) + ": " + what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parse tree for polynomial and series expressions.
struct Expr {
  enum class Kind { constant, variable, add, sub, mul, div, neg, pow };
  Kind kind = Kind::constant;
  mpz_class value;       // constant
  std::string name;      // variable
  long exponent = 0;     // pow
  std::size_t begin = 0, end = 0;
  std::vector<std::unique_ptr<Expr>> kids;
};

namespace detail {

struct Token {
  enum class Kind { integer, ident, op, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::integer, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Kind::op, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& src, bool allow_division) : toks_(tokenize(src)), allow_division_(allow_division) {}

  std::unique_ptr<Expr> parse() {
    if (peek().kind == Token::Kind::end) throw ParseError(peek().pos, "empty expression");
    auto e = expr();
    if (peek().kind != Token::Kind::end) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Kind::op && peek().text == op; }
  const Token& take() { return toks_[pos_++]; }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t b, std::size_t e) {
    auto n = std::make_unique<Expr>();
    n->kind = k;
    n->begin = b;
    n->end = e;
    return n;
  }
  static std::unique_ptr<Expr> binary(Expr::Kind k, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b) {
    auto n = node(k, a->begin, b->end);
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return n;
  }

  std::unique_ptr<Expr> expr() {
    std::unique_ptr<Expr> lhs;
    if (is_op("-")) {
      const auto start = take().pos;
      auto t = term();
      lhs = node(Expr::Kind::neg, start, t->end);
      lhs->kids.push_back(std::move(t));
    } else {
      lhs = term();
    }
    while (is_op("+") || is_op("-")) {
      const bool plus = take().text == "+";
      lhs = binary(plus ? Expr::Kind::add : Expr::Kind::sub, std::move(lhs), term());
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = factor();
    while (is_op("*") || is_op("/")) {
      const auto& t = take();
      if (t.text == "/" && !allow_division_) throw ParseError(t.pos, "division is not allowed here");
      lhs = binary(t.text == "*" ? Expr::Kind::mul : Expr::Kind::div, std::move(lhs), factor());
    }
    if (peek().kind == Token::Kind::integer || peek().kind == Token::Kind::ident || is_op("("))
      throw ParseError(peek().pos, "implicit multiplication is not allowed; write '*'");
    return lhs;
  }

  std::unique_ptr<Expr> factor() {
    auto base = atom();
    if (!is_op("^")) return base;
    take();
    bool paren = false;
    if (is_op("(")) {
      take();
      paren = true;
    }
    bool negative = false;
    if (is_op("-")) {
      take();
      negative = true;
    }
    if (peek().kind != Token::Kind::integer) throw ParseError(peek().pos, "exponent must be an integer");
    const auto& t = take();
    if (t.text.size() > 9) throw ParseError(t.pos, "exponent too large");
    long e = std::stol(t.text);
    std::size_t end = t.pos + t.text.size();
    if (paren) {
      if (!is_op(")")) throw ParseError(peek().pos, "expected ')'");
      end = take().pos + 1;
    }
    auto n = node(Expr::Kind::pow, base->begin, end);
    n->exponent = negative ? -e : e;
    n->kids.push_back(std::move(base));
    return n;
  }

  std::unique_ptr<Expr> atom() {
    const auto& t = peek();
    if (t.kind == Token::Kind::integer) {
      take();
      auto n = node(Expr::Kind::constant, t.pos, t.pos + t.text.size());
      n->value = mpz_class(t.text);
      return n;
    }
    if (t.kind == Token::Kind::ident) {
      take();
      auto n = node(Expr::Kind::variable, t.pos, t.pos + t.text.size());
      n->name = t.text;
      return n;
    }
    if (is_op("(")) {
      const auto start = take().pos;
      auto e = expr();
      if (!is_op(")")) throw ParseError(peek().pos, "expected ')'");
      const auto stop = take().pos + 1;
      e->begin = start;
      e->end = stop;
      return e;
    }
    if (t.kind == Token::Kind::end) throw ParseError(t.pos, "unexpected end of input");
    throw ParseError(t.pos, "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool allow_division_;
};

inline Series eval_series(const Expr& e, const std::string& var) {
  switch (e.kind) {
    case Expr::Kind::constant:
      return Series::constant(mpq_class(e.value));
    case Expr::Kind::variable:
      if (e.name != var) throw ParseError(e.begin, "unknown identifier '" + e.name + "'");
      return Series::t_power(1);
    case Expr::Kind::add:
      return eval_series(*e.kids[0], var) + eval_series(*e.kids[1], var);
    case Expr::Kind::sub:
      return eval_series(*e.kids[0], var) - eval_series(*e.kids[1], var);
    case Expr::Kind::mul:
      return eval_series(*e.kids[0], var) * eval_series(*e.kids[1], var);
    case Expr::Kind::div: {
      auto d = eval_series(*e.kids[1], var);
      if (d.is_zero()) throw ParseError(e.kids[1]->begin, "division by zero");
      return eval_series(*e.kids[0], var) / d;
    }
    case Expr::Kind::neg:
      return -eval_series(*e.kids[0], var);
    case Expr::Kind::pow: {
      auto b = eval_series(*e.kids[0], var);
      if (b.is_zero() && e.exponent < 0) throw ParseError(e.begin, "zero raised to a negative power");
      return b.pow(e.exponent);
    }
  }
  throw Error("unreachable");
}

template <ExactField F>
Poly<F> eval_poly(const Expr& e, const std::shared_ptr<const PolyRing<F>>& ring) {
  const auto& f = ring->field();
  switch (e.kind) {
    case Expr::Kind::constant:
      return Poly<F>::constant(ring, f.from_rational(mpq_class(e.value)));
    case Expr::Kind::variable: {
      auto i = ring->find_var(e.name);
      if (!i) throw ParseError(e.begin, "unknown identifier '" + e.name + "'");
      return Poly<F>::variable(ring, *i);
    }
    case Expr::Kind::add:
      return eval_poly(*e.kids[0], ring) + eval_poly(*e.kids[1], ring);
    case Expr::Kind::sub:
      return eval_poly(*e.kids[0], ring) - eval_poly(*e.kids[1], ring);
    case Expr::Kind::mul:
      return eval_poly(*e.kids[0], ring) * eval_poly(*e.kids[1], ring);
    case Expr::Kind::neg:
      return -eval_poly(*e.kids[0], ring);
    case Expr::Kind::pow:
      if (e.exponent < 0) throw ParseError(e.begin, "negative exponent in a polynomial");
      return eval_poly(*e.kids[0], ring).pow(e.exponent);
    case Expr::Kind::div:
      throw ParseError(e.begin, "division is not allowed here");
  }
  throw Error("unreachable");
}

}  // namespace detail

inline std::unique_ptr<Expr> parse_expr(const std::string& src, bool allow_division) {
  return detail::Parser(src, allow_division).parse();
}

/// Rational function in the single variable `var` (default t).
inline Series parse_series(const std::string& src, const std::string& var = "t") {
  return detail::eval_series(*parse_expr(src, true), var);
}

/// Polynomial over the given ring; with require_homogeneous the result must
/// be homogeneous for the ring's codegrees.
template <ExactField F>
Poly<F> parse_poly(const std::string& src, const std::shared_ptr<const PolyRing<F>>& ring, bool require_homogeneous = false) {
  auto p = detail::eval_poly(*parse_expr(src, false), ring);
  if (require_homogeneous && !p.is_homogeneous())
    throw InputError("'" + src + "' is not homogeneous for the declared codegrees");
  return p;
}

}  // namespace gwb
