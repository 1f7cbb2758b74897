#pragma once

#include <ostream>
#include <string>

#include "loopstate/rational.hpp"

namespace loopstate {

/// re + om*w with w a primitive cube root of unity, w^2 = -1 - w.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(long re) : re_(re) {}             // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& re, const Rational& om) : re_(re), om_(om) {}

  static Cyclotomic omega() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& om() const { return om_; }
  bool is_zero() const { return re_ == 0 && om_ == 0; }
  bool is_rational() const { return om_ == 0; }

  /// a^2 - ab + b^2, the field norm down to Q.
  Rational norm() const {
    Rational n = re_ * re_ - re_ * om_ + om_ * om_;
    return n;
  }
  /// Image under w -> w^2.
  Cyclotomic conj() const { return {Rational(re_ - om_), Rational(-om_)}; }

  Cyclotomic inverse() const {
    if (is_zero()) throw PoleError("inverse of zero in Q(w)");
    Rational n = norm();
    Cyclotomic c = conj();
    c.re_ /= n;
    c.om_ /= n;
    return c;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    re_ += o.re_;
    om_ += o.om_;
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    re_ -= o.re_;
    om_ -= o.om_;
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    if (o.om_ == 0) {
      re_ *= o.re_;
      om_ *= o.re_;
      return *this;
    }
    Rational bd = om_ * o.om_;
    Rational r = re_ * o.re_ - bd;
    Rational w = re_ * o.om_ + om_ * o.re_ - bd;
    re_ = std::move(r);
    om_ = std::move(w);
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic& a) { return {Rational(-a.re_), Rational(-a.om_)}; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.re_ == b.re_ && a.om_ == b.om_;
  }

  std::string str() const {
    if (om_ == 0) return re_.get_str();
    std::string s;
    if (re_ != 0) s = re_.get_str() + (om_ > 0 ? "+" : "");
    if (om_ == 1)
      s += "w";
    else if (om_ == -1)
      s += "-w";
    else
      s += om_.get_str() + "*w";
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

 private:
  Rational re_{0};
  Rational om_{0};
};

}  // namespace loopstate
