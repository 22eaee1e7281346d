#pragma once

// Recursive-descent parser shared by the scalar and polynomial grammars.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
//
// The Ops policy supplies the value semantics:
//   Value integer(const mpz_class&)
//   Value identifier(std::string_view name, std::size_t column)
//   Value add/sub/mul(const Value&, const Value&)
//   Value neg(const Value&)
//   Value divide(const Value&, const Value&, std::size_t column)
//   Value power(const Value&, unsigned long exponent)

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "kahler/error.hpp"

namespace kahler::detail {

inline bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '\'';
}

template <class Value, class Ops>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, Ops& ops) : text_(text), ops_(ops) {}

  Value parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("empty expression");
    Value v = expr();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = ops_.add(v, term());
      } else if (accept('-')) {
        v = ops_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      skip_space();
      std::size_t column = pos_ + 1;
      if (accept('*')) {
        v = ops_.mul(v, unary());
      } else if (accept('/')) {
        v = ops_.divide(v, unary(), column);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return ops_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 6) fail("exponent too large");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return ops_.power(base, e);
    }
    return base;
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ops_.integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (is_identifier_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_identifier_char(text_[pos_])) ++pos_;
      return ops_.identifier(text_.substr(start, pos_ - start), start + 1);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  Ops& ops_;
  std::size_t pos_ = 0;
};

}  // namespace kahler::detail
