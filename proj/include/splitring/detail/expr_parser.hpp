#pragma once

// Recursive-descent parser for ring expressions, shared by element and
// multivariate-polynomial parsing. `Ops` supplies the value type and the
// arithmetic; the parser only knows the grammar.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')' | '[' ... ']'

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "splitring/error.hpp"

namespace splitring::detail {

template <class Ops>
class ExprParser {
 public:
  using Value = typename Ops::Value;

  ExprParser(std::string_view text, Ops& ops) : text_(text), ops_(ops) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at position " + std::to_string(pos_) + " in \"" +
                                      std::string(text_) + "\"");
  }

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
      if (accept('*')) {
        v = ops_.mul(v, unary());
      } else if (accept('/')) {
        v = ops_.div(v, unary());
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
    Value v = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      v = ops_.pow(v, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return v;
  }

  Value atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == '[') {
      std::size_t start = pos_;
      int depth = 0;
      do {
        if (text_[pos_] == '[') ++depth;
        if (text_[pos_] == ']') --depth;
        ++pos_;
      } while (depth > 0 && pos_ < text_.size());
      if (depth != 0) fail("unbalanced '['");
      return ops_.bracket(text_.substr(start, pos_ - start));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ops_.integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return ops_.symbol(text_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Ops& ops_;
  std::size_t pos_ = 0;
};

}  // namespace splitring::detail
