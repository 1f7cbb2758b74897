#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loopstate/monomial.hpp"
#include "loopstate/ring.hpp"

namespace loopstate {

/// Sparse polynomial in z1..zN over C (Rational or Cyclotomic).
/// Terms are kept sorted ascending in graded-lex order with no zero coefficients.
template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;
  using Traits = RingTraits<C>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n_vars) : n_(n_vars) {
    if (n_vars > kMaxVars) throw ArityMismatch("too many variables");
  }
  Polynomial(std::size_t n_vars, const C& c) : Polynomial(n_vars) {
    if (!Traits::is_zero(c)) terms_.emplace_back(Monomial(n_vars), c);
  }

  /// z_i, 1-based.
  static Polynomial variable(std::size_t n_vars, std::size_t i) {
    if (i < 1 || i > n_vars) throw IndexOutOfRange("variable index " + std::to_string(i));
    Polynomial p(n_vars);
    Monomial m(n_vars);
    m.set(i - 1, 1);
    p.terms_.emplace_back(m, C(1));
    return p;
  }

  static Polynomial monomial(const Monomial& m, const C& c) {
    Polynomial p(m.size());
    if (!Traits::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }

  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(std::size_t n_vars, std::vector<Term> terms) {
    Polynomial p(n_vars);
    for (const auto& t : terms)
      if (t.first.size() != n_vars) throw ArityMismatch("monomial arity");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else {
        if (!p.terms_.empty() && Traits::is_zero(p.terms_.back().second)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && Traits::is_zero(p.terms_.back().second)) p.terms_.pop_back();
    return p;
  }

  /// Caller guarantees strictly ascending monomials and nonzero coefficients.
  static Polynomial from_sorted(std::size_t n_vars, std::vector<Term> terms) {
    Polynomial p(n_vars);
    p.terms_ = std::move(terms);
    return p;
  }

  std::size_t n_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0); }
  C constant_term() const {
    if (!terms_.empty() && terms_[0].first.total() == 0) return terms_[0].second;
    return C(0);
  }
  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.first < x; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C(0);
  }
  /// Largest term in graded-lex order.
  const Term& leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of zero polynomial");
    return terms_.back();
  }
  int total_degree() const {
    if (terms_.empty()) throw ZeroPolynomial("degree of zero polynomial");
    return terms_.back().first.total();
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    terms_ = merge(terms_, o.terms_, false);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    terms_ = merge(terms_, o.terms_, true);
    return *this;
  }
  Polynomial& operator*=(const C& c) {
    if (Traits::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = multiply(*this, o);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  friend Polynomial operator*(Polynomial a, const C& c) { return a *= c; }
  friend Polynomial operator*(const C& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Product truncated to total degree <= max_total (no truncation when negative).
  static Polynomial multiply(const Polynomial& f, const Polynomial& g, int max_total = -1) {
    f.check(g);
    const Polynomial& big = f.size() >= g.size() ? f : g;
    const Polynomial& small = f.size() >= g.size() ? g : f;
    Polynomial r(f.n_);
    if (small.terms_.empty()) return r;
    if (small.size() <= 12) {
      for (const auto& [m, c] : small.terms_) r.terms_ = merge(r.terms_, shifted(big, m, c, max_total), false);
      return r;
    }
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(big.size() * small.size(), big.size() * 8 + 1024));
    C tmp;
    for (const auto& [ms, cs] : small.terms_) {
      for (const auto& [mb, cb] : big.terms_) {
        if (max_total >= 0 && ms.total() + mb.total() > max_total) break;
        tmp = cs;
        tmp *= cb;
        acc[ms * mb] += tmp;
      }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!Traits::is_zero(c)) r.terms_.emplace_back(m, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string c = Traits::str(it->second);
      if (it != terms_.rbegin()) s += " + ";
      s += "(" + c + ")";
      if (it->first.total()) s += "*" + it->first.str();
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void check(const Polynomial& o) const {
    if (o.n_ != n_) throw ArityMismatch("polynomial arity " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }

  static std::vector<Term> shifted(const Polynomial& p, const Monomial& m, const C& c, int max_total) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& [pm, pc] : p.terms_) {
      if (max_total >= 0 && pm.total() + m.total() > max_total) break;
      C v = pc;
      v *= c;
      out.emplace_back(pm * m, std::move(v));
    }
    return out;
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back(b[j++]);
        if (subtract) out.back().second = -out.back().second;
      } else {
        C v = a[i].second;
        if (subtract)
          v -= b[j].second;
        else
          v += b[j].second;
        if (!Traits::is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

using QPoly = Polynomial<Rational>;
using WPoly = Polynomial<Cyclotomic>;

template <class C>
Polynomial<C> pow(const Polynomial<C>& p, unsigned e) {
  Polynomial<C> r(p.n_vars(), C(1));
  Polynomial<C> b = p;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

template <class C>
Polynomial<C> product(std::size_t n_vars, const std::vector<Polynomial<C>>& factors) {
  Polynomial<C> r(n_vars, C(1));
  for (const auto& f : factors) r *= f;
  return r;
}

/// Lifts a rational polynomial to Q(w).
inline WPoly to_cyclotomic(const QPoly& p) {
  std::vector<WPoly::Term> t;
  t.reserve(p.size());
  for (const auto& [m, c] : p) t.emplace_back(m, Cyclotomic(c));
  return WPoly::from_sorted(p.n_vars(), std::move(t));
}

/// Splits f = A + B*w into rational parts.
inline std::pair<QPoly, QPoly> split_cyclotomic(const WPoly& f) {
  std::vector<QPoly::Term> a, b;
  for (const auto& [m, c] : f) {
    if (c.re() != 0) a.emplace_back(m, c.re());
    if (c.om() != 0) b.emplace_back(m, c.om());
  }
  return {QPoly::from_sorted(f.n_vars(), std::move(a)), QPoly::from_sorted(f.n_vars(), std::move(b))};
}

}  // namespace loopstate
