#pragma once

// Expression text shared by algebra files and the CLI:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*')? unary)*          juxtaposition multiplies
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER ('/' INTEGER)? | 'i' | IDENT | IDENT '(' expr ')' | '(' expr ')'
//
// Identifiers are basis names; `i` is the imaginary unit. Only integer
// literals and integer fractions are accepted, never decimals.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "suprep/error.hpp"
#include "suprep/scalar.hpp"

namespace suprep {

struct Expr {
  enum class Kind { Number, Imag, Symbol, Add, Sub, Neg, Mul, Pow, Call };
  Kind kind = Kind::Number;
  mpq_class number;       // Number
  std::string name;       // Symbol, Call
  unsigned exponent = 0;  // Pow
  int column = 0;
  std::vector<Expr> args;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, int line) : text_(text), line_(line) {}

  Expr parse() {
    Expr e = parse_sum();
    skip_ws();
    if (pos_ < text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_primary() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    while (true) {
      if (peek('+') || peek('-')) {
        Expr node;
        node.kind = text_[pos_] == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
        node.column = static_cast<int>(pos_) + 1;
        ++pos_;
        node.args.push_back(std::move(lhs));
        node.args.push_back(parse_product());
        lhs = std::move(node);
      } else {
        return lhs;
      }
    }
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    while (true) {
      int col = 0;
      if (peek('*')) {
        col = static_cast<int>(pos_) + 1;
        ++pos_;
      } else if (starts_primary()) {
        col = static_cast<int>(pos_) + 1;
      } else {
        return lhs;
      }
      Expr node;
      node.kind = Expr::Kind::Mul;
      node.column = col;
      node.args.push_back(std::move(lhs));
      node.args.push_back(parse_unary());
      lhs = std::move(node);
    }
  }

  Expr parse_unary() {
    if (peek('-') || peek('+')) {
      bool neg = text_[pos_] == '-';
      int col = static_cast<int>(pos_) + 1;
      ++pos_;
      Expr inner = parse_unary();
      if (!neg) return inner;
      Expr node;
      node.kind = Expr::Kind::Neg;
      node.column = col;
      node.args.push_back(std::move(inner));
      return node;
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (peek('^')) {
      int col = static_cast<int>(pos_) + 1;
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("exponent must be a non-negative integer");
      Expr node;
      node.kind = Expr::Kind::Pow;
      node.column = col;
      node.exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      node.args.push_back(std::move(base));
      return node;
    }
    return base;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of expression");
    int col = static_cast<int>(pos_) + 1;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_sum();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        error("decimal literals are not exact; write p/q");
      std::string num(text_.substr(start, pos_ - start));
      std::string den = "1";
      // p/q binds only between two integer literals.
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t ds = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (ds == pos_) error("expected an integer denominator after '/'");
        if (pos_ < text_.size() && text_[pos_] == '.')
          error("decimal literals are not exact; write p/q");
        den = std::string(text_.substr(ds, pos_ - ds));
      } else {
        pos_ = save;
      }
      Expr node;
      node.kind = Expr::Kind::Number;
      node.column = col;
      mpz_class d(den);
      if (d == 0) error("zero denominator");
      node.number = mpq_class(mpz_class(num), d);
      node.number.canonicalize();
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\''))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        Expr node;
        node.kind = Expr::Kind::Call;
        node.name = name;
        node.column = col;
        node.args.push_back(parse_sum());
        if (!peek(')')) error("expected ')' closing " + name + "(...)");
        ++pos_;
        return node;
      }
      pos_ = save;
      Expr node;
      node.kind = name == "i" ? Expr::Kind::Imag : Expr::Kind::Symbol;
      node.name = name;
      node.column = col;
      return node;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses expression text. `line` is attached to ParseError locations.
inline Expr parse_expression(std::string_view text, int line = 0) {
  return detail::ExprParser(text, line).parse();
}

/// Generic bottom-up evaluation. `Ops` supplies number, imag, symbol, add,
/// neg, mul, pow and call for a value type V.
template <typename V, typename Ops>
V evaluate(const Expr& e, Ops& ops) {
  switch (e.kind) {
    case Expr::Kind::Number: return ops.number(e.number, e);
    case Expr::Kind::Imag: return ops.imag(e);
    case Expr::Kind::Symbol: return ops.symbol(e.name, e);
    case Expr::Kind::Add: return ops.add(evaluate<V>(e.args[0], ops), evaluate<V>(e.args[1], ops), e);
    case Expr::Kind::Sub:
      return ops.add(evaluate<V>(e.args[0], ops), ops.neg(evaluate<V>(e.args[1], ops), e), e);
    case Expr::Kind::Neg: return ops.neg(evaluate<V>(e.args[0], ops), e);
    case Expr::Kind::Mul: return ops.mul(evaluate<V>(e.args[0], ops), evaluate<V>(e.args[1], ops), e);
    case Expr::Kind::Pow: return ops.pow(evaluate<V>(e.args[0], ops), e.exponent, e);
    case Expr::Kind::Call: return ops.call(e.name, evaluate<V>(e.args[0], ops), e);
  }
  throw ParseError("malformed expression tree");
}

}  // namespace suprep
