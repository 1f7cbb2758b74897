#pragma once

#include <span>

#include "loopstate/operators.hpp"

namespace loopstate {

/// num/den with no normalization; equality by cross-multiplication.
template <class C>
class RationalFunction {
 public:
  using Poly = Polynomial<C>;

  RationalFunction() = default;
  RationalFunction(Poly num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(num_.n_vars(), C(1)) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroPolynomial("zero denominator");
    if (num_.n_vars() != den_.n_vars()) throw ArityMismatch("rational function arity");
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::size_t n_vars() const { return num_.n_vars(); }
  bool is_zero() const { return num_.is_zero(); }

  /// The polynomial num/den when the division is exact.
  std::optional<Poly> as_polynomial() const { return try_exact_div(num_, den_); }

  /// Replaces num/den by (num/den, 1) when den divides num.
  RationalFunction reduced() const {
    if (den_.is_constant()) {
      C inv = inverse(den_.constant_term());
      return RationalFunction(num_ * inv);
    }
    if (auto p = as_polynomial()) return RationalFunction(std::move(*p));
    return *this;
  }

  RationalFunction& operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ *= o.den_;
    }
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) {
    if (den_ == o.den_) {
      num_ -= o.num_;
    } else {
      num_ = num_ * o.den_ - o.num_ * den_;
      den_ *= o.den_;
    }
    return *this;
  }
  RationalFunction& operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) {
    if (o.num_.is_zero()) throw ZeroPolynomial("division by zero rational function");
    Poly n = num_ * o.den_;
    den_ *= o.num_;
    num_ = std::move(n);
    return *this;
  }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a) { return RationalFunction(-a.num_, a.den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  C evaluate_at(std::span<const C> point) const {
    C d = evaluate(den_, point);
    if (RingTraits<C>::is_zero(d)) throw PoleError("rational function pole");
    return evaluate(num_, point) / d;
  }

 private:
  Poly num_;
  Poly den_;
};

template <class C>
RationalFunction<C> swap_adjacent(const RationalFunction<C>& f, std::size_t i) {
  return RationalFunction<C>(swap_adjacent(f.num(), i), swap_adjacent(f.den(), i));
}

/// d_i on a rational function: (tau_i f - f) / (z_i - z_{i+1}).
template <class C>
RationalFunction<C> divided_difference(const RationalFunction<C>& f, std::size_t i) {
  const std::size_t n = f.n_vars();
  Polynomial<C> u = linear_form<C>(n, C(0), {{i, C(1)}, {i + 1, C(-1)}});
  RationalFunction<C> t = swap_adjacent(f, i);
  if (t.den() == f.den()) return RationalFunction<C>(divided_difference(f.num(), i), f.den());
  RationalFunction<C> diff = t - f;
  return RationalFunction<C>(diff.num(), diff.den() * u);
}

}  // namespace loopstate
