#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "loopstate/polynomial.hpp"

namespace loopstate {

namespace detail {
inline void check_index(std::size_t n_vars, std::size_t i, std::size_t hi_offset = 0) {
  if (i < 1 || i + hi_offset > n_vars) throw IndexOutOfRange("index " + std::to_string(i) + " for " + std::to_string(n_vars) + " variables");
}

template <class C>
Polynomial<C> transform_monomials(const Polynomial<C>& f, const std::function<void(Monomial&, C&)>& fn, std::size_t new_n) {
  std::vector<typename Polynomial<C>::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f) {
    Monomial nm = m;
    C nc = c;
    fn(nm, nc);
    out.emplace_back(nm, std::move(nc));
  }
  return Polynomial<C>::from_terms(new_n, std::move(out));
}
}  // namespace detail

/// tau_i: exchange z_i and z_{i+1}.
template <class C>
Polynomial<C> swap_adjacent(const Polynomial<C>& f, std::size_t i) {
  detail::check_index(f.n_vars(), i, 1);
  return detail::transform_monomials<C>(f, [i](Monomial& m, C&) { m.swap_vars(i - 1, i); }, f.n_vars());
}

/// Arbitrary variable exchange z_i <-> z_j.
template <class C>
Polynomial<C> swap_variables(const Polynomial<C>& f, std::size_t i, std::size_t j) {
  detail::check_index(f.n_vars(), i);
  detail::check_index(f.n_vars(), j);
  return detail::transform_monomials<C>(f, [i, j](Monomial& m, C&) { m.swap_vars(i - 1, j - 1); }, f.n_vars());
}

/// d_i f = (tau_i f - f) / (z_i - z_{i+1}), computed monomial by monomial.
template <class C>
Polynomial<C> divided_difference(const Polynomial<C>& f, std::size_t i) {
  detail::check_index(f.n_vars(), i, 1);
  const std::size_t x = i - 1, y = i;
  std::vector<typename Polynomial<C>::Term> out;
  for (const auto& [m, c] : f) {
    int a = m[x], b = m[y];
    if (a == b) continue;
    Monomial base = m;
    base.set(x, 0);
    base.set(y, 0);
    if (a > b) {
      C nc = -c;
      for (int k = 0; k < a - b; ++k) {
        Monomial t = base;
        t.set(x, a - 1 - k);
        t.set(y, b + k);
        out.emplace_back(t, nc);
      }
    } else {
      for (int k = 0; k < b - a; ++k) {
        Monomial t = base;
        t.set(x, a + k);
        t.set(y, b - 1 - k);
        out.emplace_back(t, c);
      }
    }
  }
  return Polynomial<C>::from_terms(f.n_vars(), std::move(out));
}

/// h with f = g*h, or nullopt. Division in graded-lex order by a single divisor.
template <class C>
std::optional<Polynomial<C>> try_exact_div(const Polynomial<C>& f, const Polynomial<C>& g) {
  if (g.is_zero()) throw ZeroPolynomial("division by zero polynomial");
  if (f.n_vars() != g.n_vars()) throw ArityMismatch("exact_div arity");
  if (f.is_zero()) return Polynomial<C>(f.n_vars());
  const auto& [lm, lc] = g.leading_term();
  const C lc_inv = inverse(lc);
  if (g.size() == 1) {
    std::vector<typename Polynomial<C>::Term> q;
    q.reserve(f.size());
    for (const auto& [m, c] : f) {
      if (!lm.divides(m)) return std::nullopt;
      q.emplace_back(m / lm, c * lc_inv);
    }
    return Polynomial<C>::from_sorted(f.n_vars(), std::move(q));
  }
  std::map<Monomial, C, std::greater<>> rem;
  for (const auto& [m, c] : f) rem.emplace_hint(rem.begin(), m, c);
  std::vector<typename Polynomial<C>::Term> q;
  C t;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lm.divides(it->first)) return std::nullopt;
    if (it->first.total() < lm.total()) return std::nullopt;
    Monomial qm = it->first / lm;
    C qc = it->second * lc_inv;
    rem.erase(it);
    for (auto gt = g.terms().rbegin() + 1; gt != g.terms().rend(); ++gt) {
      t = qc;
      t *= gt->second;
      auto [pos, inserted] = rem.try_emplace(qm * gt->first);
      pos->second -= t;
      if (RingTraits<C>::is_zero(pos->second)) rem.erase(pos);
    }
    q.emplace_back(qm, std::move(qc));
  }
  std::reverse(q.begin(), q.end());
  return Polynomial<C>::from_sorted(f.n_vars(), std::move(q));
}

template <class C>
Polynomial<C> exact_div(const Polynomial<C>& f, const Polynomial<C>& g) {
  auto q = try_exact_div(f, g);
  if (!q) throw NotDivisible("polynomial is not divisible by the given divisor");
  return std::move(*q);
}

/// z_i <- s * z_i.
template <class C>
Polynomial<C> scale_variable(const Polynomial<C>& f, std::size_t i, const C& s) {
  detail::check_index(f.n_vars(), i);
  std::vector<C> pw{C(1)};
  std::vector<typename Polynomial<C>::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f) {
    int e = m[i - 1];
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * s);
    C v = c * pw[e];
    if (!RingTraits<C>::is_zero(v)) out.emplace_back(m, std::move(v));
  }
  return Polynomial<C>::from_sorted(f.n_vars(), std::move(out));
}

/// z_i <- -z_i.
template <class C>
Polynomial<C> flip_sign(const Polynomial<C>& f, std::size_t i) {
  return scale_variable(f, i, C(-1));
}

/// z_i <- p, p a polynomial in the same variables.
template <class C>
Polynomial<C> substitute_poly(const Polynomial<C>& f, std::size_t i, const Polynomial<C>& p) {
  detail::check_index(f.n_vars(), i);
  if (p.n_vars() != f.n_vars()) throw ArityMismatch("substitution arity");
  std::vector<std::vector<typename Polynomial<C>::Term>> parts;
  for (const auto& [m, c] : f) {
    int e = m[i - 1];
    if (static_cast<int>(parts.size()) <= e) parts.resize(e + 1);
    Monomial r = m;
    r.set(i - 1, 0);
    parts[e].emplace_back(r, c);
  }
  Polynomial<C> result(f.n_vars());
  Polynomial<C> pw(f.n_vars(), C(1));
  for (std::size_t e = 0; e < parts.size(); ++e) {
    if (e > 0) pw *= p;
    if (parts[e].empty()) continue;
    result += Polynomial<C>::from_sorted(f.n_vars(), std::move(parts[e])) * pw;
  }
  return result;
}

/// z_i <- c.
template <class C>
Polynomial<C> substitute_constant(const Polynomial<C>& f, std::size_t i, const C& c) {
  return substitute_poly(f, i, Polynomial<C>(f.n_vars(), c));
}

/// z_i <- alpha*z_j + beta with j != i.
template <class C>
Polynomial<C> substitute_affine(const Polynomial<C>& f, std::size_t i, std::size_t j, const C& alpha, const C& beta) {
  detail::check_index(f.n_vars(), j);
  Polynomial<C> p = Polynomial<C>::variable(f.n_vars(), j) * alpha + Polynomial<C>(f.n_vars(), beta);
  return substitute_poly(f, i, p);
}

/// Value at a point given in the coefficient ring.
template <class C>
C evaluate(const Polynomial<C>& f, std::span<const C> point) {
  if (point.size() != f.n_vars()) throw ArityMismatch("evaluation point arity");
  std::vector<std::vector<C>> pw(point.size(), std::vector<C>{C(1)});
  C sum(0), t;
  for (const auto& [m, c] : f) {
    t = c;
    for (std::size_t k = 0; k < point.size(); ++k) {
      int e = m[k];
      if (!e) continue;
      auto& tab = pw[k];
      while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * point[k]);
      t *= tab[e];
    }
    sum += t;
  }
  return sum;
}

/// Rational evaluation of a rational polynomial using integer arithmetic
/// over a common denominator.
inline Rational evaluate_rational(const QPoly& f, std::span<const Rational> point) {
  const std::size_t n = f.n_vars();
  if (point.size() != n) throw ArityMismatch("evaluation point arity");
  if (f.is_zero()) return Rational(0);
  std::vector<int> maxdeg(n, 0);
  Integer lcm_den = 1;
  for (const auto& [m, c] : f) {
    for (std::size_t k = 0; k < n; ++k) maxdeg[k] = std::max(maxdeg[k], m[k]);
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<std::vector<Integer>> tab(n);
  Integer scale = lcm_den;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& p = point[k].get_num();
    const Integer& q = point[k].get_den();
    int d = maxdeg[k];
    tab[k].resize(d + 1);
    for (int e = 0; e <= d; ++e) tab[k][e] = pow_integer(p, e) * pow_integer(q, d - e);
    scale *= pow_integer(q, d);
  }
  Integer sum = 0, t;
  for (const auto& [m, c] : f) {
    t = lcm_den / c.get_den();
    t *= c.get_num();
    for (std::size_t k = 0; k < n; ++k)
      if (maxdeg[k]) t *= tab[k][m[k]];
    sum += t;
  }
  Rational r(sum, scale);
  r.canonicalize();
  return r;
}

inline Cyclotomic evaluate_rational(const WPoly& f, std::span<const Rational> point) {
  auto [a, b] = split_cyclotomic(f);
  return Cyclotomic(evaluate_rational(a, point), evaluate_rational(b, point));
}

/// z_i^d * f(.., 1/z_i, ..).
template <class C>
Polynomial<C> reciprocal_substitute(const Polynomial<C>& f, std::size_t i, int d) {
  detail::check_index(f.n_vars(), i);
  for (const auto& [m, c] : f)
    if (m[i - 1] > d) throw DegreeBoundViolation("partial degree exceeds reciprocal bound");
  return detail::transform_monomials<C>(f, [i, d](Monomial& m, C&) { m.set(i - 1, d - m[i - 1]); }, f.n_vars());
}

/// Coefficient of z_i^d; z_i is kept as a (now absent) variable.
template <class C>
Polynomial<C> leading_coefficient_in(const Polynomial<C>& f, std::size_t i, int d) {
  detail::check_index(f.n_vars(), i);
  std::vector<typename Polynomial<C>::Term> out;
  for (const auto& [m, c] : f) {
    if (m[i - 1] != d) continue;
    Monomial r = m;
    r.set(i - 1, 0);
    out.emplace_back(r, c);
  }
  return Polynomial<C>::from_sorted(f.n_vars(), std::move(out));
}

/// Removes variable i, which must not occur in f; later variables shift down.
template <class C>
Polynomial<C> drop_variable(const Polynomial<C>& f, std::size_t i) {
  detail::check_index(f.n_vars(), i);
  const std::size_t n = f.n_vars();
  std::vector<typename Polynomial<C>::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f) {
    if (m[i - 1] != 0) throw InvariantViolation("drop_variable: variable still present");
    Monomial r(n - 1);
    for (std::size_t k = 0, j = 0; k < n; ++k)
      if (k != i - 1) r.set(j++, m[k]);
    out.emplace_back(r, c);
  }
  return Polynomial<C>::from_terms(n - 1, std::move(out));
}

/// Renames variable k (1-based) to target[k-1] (1-based) in a ring with new_n variables.
template <class C>
Polynomial<C> remap_variables(const Polynomial<C>& f, std::size_t new_n, std::span<const std::size_t> target) {
  if (target.size() != f.n_vars()) throw ArityMismatch("remap arity");
  for (auto t : target) detail::check_index(new_n, t);
  std::vector<typename Polynomial<C>::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f) {
    Monomial r(new_n);
    for (std::size_t k = 0; k < f.n_vars(); ++k)
      if (m[k]) r.set(target[k] - 1, r[target[k] - 1] + m[k]);
    out.emplace_back(r, c);
  }
  return Polynomial<C>::from_terms(new_n, std::move(out));
}

/// f(z_N, ..., z_1), optionally with every variable negated.
template <class C>
Polynomial<C> reverse_variables(const Polynomial<C>& f, bool negate) {
  const std::size_t n = f.n_vars();
  return detail::transform_monomials<C>(
      f,
      [n, negate](Monomial& m, C& c) {
        Monomial r(n);
        for (std::size_t k = 0; k < n; ++k) r.set(n - 1 - k, m[k]);
        if (negate && (m.total() & 1)) c = -c;
        m = r;
      },
      n);
}

struct Degrees {
  int total = 0;
  std::vector<int> partial;
  friend bool operator==(const Degrees&, const Degrees&) = default;
};

template <class C>
Degrees degrees(const Polynomial<C>& f) {
  if (f.is_zero()) throw ZeroPolynomial("degrees of the zero polynomial");
  Degrees d;
  d.partial.assign(f.n_vars(), 0);
  for (const auto& [m, c] : f) {
    d.total = std::max(d.total, m.total());
    for (std::size_t k = 0; k < f.n_vars(); ++k) d.partial[k] = std::max(d.partial[k], m[k]);
  }
  return d;
}

template <class C>
Polynomial<C> truncate_total_degree(const Polynomial<C>& f, int d) {
  std::vector<typename Polynomial<C>::Term> out;
  for (const auto& t : f) {
    if (t.first.total() > d) break;
    out.push_back(t);
  }
  return Polynomial<C>::from_sorted(f.n_vars(), std::move(out));
}

/// Homogeneous component of maximal total degree.
template <class C>
Polynomial<C> top_homogeneous_part(const Polynomial<C>& f) {
  if (f.is_zero()) return f;
  int d = f.total_degree();
  std::vector<typename Polynomial<C>::Term> out;
  for (const auto& t : f)
    if (t.first.total() == d) out.push_back(t);
  return Polynomial<C>::from_sorted(f.n_vars(), std::move(out));
}

template <class C>
bool is_symmetric_in(const Polynomial<C>& f, std::size_t i) {
  return swap_adjacent(f, i) == f;
}

/// c0 + sum c_k z_{i_k}.
template <class C>
Polynomial<C> linear_form(std::size_t n_vars, const C& c0, std::initializer_list<std::pair<std::size_t, C>> coeffs) {
  std::vector<typename Polynomial<C>::Term> t;
  t.emplace_back(Monomial(n_vars), c0);
  for (const auto& [i, c] : coeffs) {
    detail::check_index(n_vars, i);
    Monomial m(n_vars);
    m.set(i - 1, 1);
    t.emplace_back(m, c);
  }
  return Polynomial<C>::from_terms(n_vars, std::move(t));
}

}  // namespace loopstate
