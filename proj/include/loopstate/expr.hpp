#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "loopstate/operators.hpp"

namespace loopstate {

/// Reader for the plain-text polynomial notation used by the fixture files:
///   sums, products (explicit '*' or juxtaposition), '^' with integer exponent,
///   integers, z<k>, q (Q(w) only), and the shorthands a(i,j)=1+zi-zj,
///   b(i,j)=1-zi-zj, c(i,j)=1+zi+zj. '#' starts a comment.
template <class C>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t n_vars) : s_(text), n_(n_vars) {}

  Polynomial<C> parse() {
    Polynomial<C> p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SchemaError("expression offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  unsigned long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial<C> sum() {
    Polynomial<C> acc(n_);
    bool first = true;
    while (true) {
      bool neg = false;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        ++pos_;
        neg = true;
      } else if (!first) {
        break;
      }
      Polynomial<C> t = product();
      if (neg)
        acc -= t;
      else
        acc += t;
      first = false;
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == 'z' || c == 'q' || c == 'a' || c == 'b' || c == 'c' || std::isdigit(static_cast<unsigned char>(c));
  }

  Polynomial<C> product() {
    Polynomial<C> p = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        p *= power();
      } else if (starts_factor()) {
        p *= power();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial<C> power() {
    Polynomial<C> b = atom();
    if (peek('^')) {
      ++pos_;
      b = pow(b, static_cast<unsigned>(integer()));
    }
    return b;
  }

  std::size_t var_index() {
    std::size_t k = integer();
    if (k < 1 || k > n_) fail("variable index out of range");
    return k;
  }

  Polynomial<C> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<C> p = sum();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational r(Integer{std::string(s_.substr(start, pos_ - start))});
      return Polynomial<C>(n_, RingTraits<C>::from_rational(r));
    }
    if (c == 'z') {
      ++pos_;
      return Polynomial<C>::variable(n_, var_index());
    }
    if (c == 'q') {
      ++pos_;
      if constexpr (std::is_same_v<C, Cyclotomic>) {
        return Polynomial<C>(n_, Cyclotomic::omega());
      } else {
        fail("q is only available over Q(w)");
      }
    }
    if (c == 'a' || c == 'b' || c == 'c') {
      ++pos_;
      expect('(');
      std::size_t i = var_index();
      expect(',');
      std::size_t j = var_index();
      expect(')');
      C si = c == 'b' ? C(-1) : C(1);
      C sj = c == 'a' ? C(-1) : (c == 'b' ? C(-1) : C(1));
      Polynomial<C> zi = Polynomial<C>::variable(n_, i) * si;
      Polynomial<C> zj = Polynomial<C>::variable(n_, j) * sj;
      return Polynomial<C>(n_, C(1)) + zi + zj;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

template <class C>
Polynomial<C> parse_polynomial(std::string_view text, std::size_t n_vars) {
  return ExpressionParser<C>(text, n_vars).parse();
}

}  // namespace loopstate
