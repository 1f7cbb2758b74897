#pragma once

#include <array>
#include <deque>
#include <optional>
#include <vector>

#include "loopstate/rational_function.hpp"
#include "loopstate/vector.hpp"

namespace loopstate {

/// Brauer loop weights as functions of u = z - w.
struct BrauerWeights {
  Rational a, b, c;
};

inline BrauerWeights weight_abc(const Rational& u) {
  Rational den = (1 + u) * (2 - u);
  if (den == 0) throw PoleError("Brauer weights have poles at u = -1 and u = 2");
  return {2 * (1 - u) / den, u * (1 - u) / den, 2 * u / den};
}

/// Same weights as rational functions in one variable u.
inline std::array<RationalFunction<Rational>, 3> weight_abc_symbolic() {
  QPoly u = QPoly::variable(1, 1);
  QPoly one(1, Rational(1)), two(1, Rational(2));
  QPoly den = (one + u) * (two - u);
  return {RationalFunction<Rational>(two * (one - u), den), RationalFunction<Rational>(u * (one - u), den),
          RationalFunction<Rational>(two * u, den)};
}

/// a_ij = 1 + z_i - z_j.
template <class C = Rational>
Polynomial<C> a_factor(std::size_t n, std::size_t i, std::size_t j) {
  return linear_form<C>(n, C(1), {{i, C(1)}, {j, C(-1)}});
}
/// b_ij = 1 - z_i - z_j.
template <class C = Rational>
Polynomial<C> b_factor(std::size_t n, std::size_t i, std::size_t j) {
  return linear_form<C>(n, C(1), {{i, C(-1)}, {j, C(-1)}});
}
/// c_ij = 1 + z_i + z_j.
template <class C = Rational>
Polynomial<C> c_factor(std::size_t n, std::size_t i, std::size_t j) {
  return linear_form<C>(n, C(1), {{i, C(1)}, {j, C(1)}});
}

namespace detail {
/// u = z_i - z_{i+1}.
template <class C>
Polynomial<C> u_form(std::size_t n, std::size_t i) {
  return linear_form<C>(n, C(0), {{i, C(1)}, {i + 1, C(-1)}});
}
}  // namespace detail

/// Theta_i f = [(1+u)(2-u) tau_i f - 2(1-u) f] / (u(1-u)), u = z_i - z_{i+1}.
/// With tau_i f = f + u d_i f the numerator over u is (3-u) f + (1+u)(2-u) d_i f,
/// so only the division by 1-u can fail.
template <class C>
Polynomial<C> theta(const Polynomial<C>& f, std::size_t i) {
  const std::size_t n = f.n_vars();
  auto u = detail::u_form<C>(n, i);
  Polynomial<C> one(n, C(1));
  Polynomial<C> num = (Polynomial<C>(n, C(3)) - u) * f + (one + u) * (Polynomial<C>(n, C(2)) - u) * divided_difference(f, i);
  return exact_div(num, one - u);
}

/// Theta_i on a rational function; the result is left unreduced except for the u(1-u) factors.
template <class C>
RationalFunction<C> theta(const RationalFunction<C>& f, std::size_t i) {
  const std::size_t n = f.n_vars();
  auto u = detail::u_form<C>(n, i);
  Polynomial<C> one(n, C(1));
  auto tf = swap_adjacent(f, i);
  Polynomial<C> num = (one + u) * (Polynomial<C>(n, C(2)) - u) * tf.num() * f.den() - Polynomial<C>(n, C(2)) * (one - u) * f.num() * tf.den();
  Polynomial<C> den = f.den() * tf.den();
  for (const auto& g : {u, one - u}) {
    if (auto q = try_exact_div(num, g))
      num = std::move(*q);
    else
      den *= g;
  }
  return RationalFunction<C>(std::move(num), std::move(den));
}

/// delta_i = 2 d_i - tau_i.
template <class C>
Polynomial<C> delta_gauge(const Polynomial<C>& f, std::size_t i) {
  return divided_difference(f, i) * C(2) - swap_adjacent(f, i);
}

/// Delta_i = (1+u)(1-u/2) d_i.
template <class C>
Polynomial<C> delta_cap(const Polynomial<C>& f, std::size_t i) {
  const std::size_t n = f.n_vars();
  auto u = detail::u_form<C>(n, i);
  Polynomial<C> one(n, C(1));
  return (one + u) * (Polynomial<C>(n, C(2)) - u) * divided_difference(f, i) * C(make_rational(1, 2));
}

namespace detail {
inline std::size_t half(std::size_t N) {
  if (N == 0 || N % 2) throw std::invalid_argument("even N >= 2 required, got " + std::to_string(N));
  return N / 2;
}

/// Variables of a size N-2 object placed at z_1..z_{n-1}, z_{n+2}..z_N.
inline std::vector<std::size_t> skip_middle_pair(std::size_t N) {
  const std::size_t n = N / 2;
  std::vector<std::size_t> t;
  for (std::size_t k = 1; k <= N - 2; ++k) t.push_back(k <= n - 1 ? k : k + 2);
  return t;
}

/// One level of the P0 recursion with every intermediate truncated so that the result is exact up to degree max_deg (-1 = no truncation).
inline QPoly p0_level(std::size_t N, const QPoly& inner, int max_deg) {
  const std::size_t n = N / 2;
  auto tr = [max_deg](const QPoly& f, int d) { return max_deg < 0 ? f : truncate_total_degree(f, d); };
  auto mul = [max_deg](const QPoly& f, const QPoly& g, int d) { return QPoly::multiply(f, g, max_deg < 0 ? -1 : d); };
  const int top = max_deg + static_cast<int>(n) - 1;
  auto tgt = skip_middle_pair(N);
  QPoly g = tr(remap_variables(inner, N, tgt), top);
  for (std::size_t j = 1; j <= n - 1; ++j) {
    g = mul(g, b_factor(N, j, n + 1), top);
    g = mul(g, c_factor(N, n, n + j + 1), top);
  }
  for (std::size_t i = n - 1; i >= 1; --i) {
    g = mul(g, a_factor(N, i + 1, n + i + 1), max_deg + static_cast<int>(i));
    g = tr(delta_gauge(g, i), max_deg + static_cast<int>(i) - 1);
  }
  return g;
}

inline QPoly p0_truncated(std::size_t N, int max_deg) {
  const std::size_t n = half(N);
  if (n == 1) return QPoly(2, Rational(1));
  int inner_deg = max_deg < 0 ? -1 : max_deg + static_cast<int>(n) - 1;
  return p0_level(N, p0_truncated(N - 2, inner_deg), max_deg);
}
}  // namespace detail

enum class P0Method { recursive, closed };

/// The polynomial P0 with Psi0 = P0 * prefactor; both methods must agree.
inline QPoly build_p0(std::size_t N, P0Method method = P0Method::recursive) {
  const std::size_t n = detail::half(N);
  if (method == P0Method::recursive) return detail::p0_truncated(N, -1);
  QPoly g(N, Rational(1));
  for (std::size_t s = 1; s <= n - 1; ++s)
    for (std::size_t j = 1; j <= n - s; ++j) g *= b_factor(N, j, n + s) * c_factor(N, n + 1 - s, n + s + j);
  // Operator string delta_i a_{i+1,n+r+i}, r outer and leftmost; applied right to left.
  std::vector<std::pair<std::size_t, std::size_t>> ops;  // (i, r)
  for (std::size_t r = 1; r <= n - 1; ++r)
    for (std::size_t i = 1; i <= n - r; ++i) ops.emplace_back(i, r);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    auto [i, r] = *it;
    g *= a_factor(N, i + 1, n + r + i);
    g = delta_gauge(g, i);
  }
  return g;
}

/// prod_{i<j<=n} a_ij b_ij a_{i+n,j+n} c_{i+n,j+n} * prod_{l=2}^n prod_{m=n+1}^{n+l-1} a_{l,m}.
inline QPoly psi0_prefactor(std::size_t N) {
  const std::size_t n = detail::half(N);
  QPoly g(N, Rational(1));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      g *= a_factor(N, i, j) * b_factor(N, i, j) * a_factor(N, i + n, j + n) * c_factor(N, i + n, j + n);
  for (std::size_t l = 2; l <= n; ++l)
    for (std::size_t m = n + 1; m <= n + l - 1; ++m) g *= a_factor(N, l, m);
  return g;
}

inline QPoly psi0(std::size_t N, P0Method method = P0Method::recursive) {
  return build_p0(N, method) * psi0_prefactor(N);
}

/// Psi0(0,...,0) for N = 2, 4, ..., maxN through the degree-truncated recursion.
inline std::vector<Integer> psi0_homog_sequence(std::size_t maxN) {
  detail::half(maxN);
  std::vector<Integer> out;
  for (std::size_t N = 2; N <= maxN; N += 2) {
    Rational v = detail::p0_truncated(N, 0).constant_term();
    if (v.get_den() != 1) throw InvariantViolation("non-integer homogeneous value");
    out.push_back(v.get_num());
  }
  return out;
}

/// BFS over non-trivial f-moves from the base pattern; each new component is Theta_i of its parent.
inline GroundStateVector<Rational> build_vector(std::size_t N, const QPoly& base) {
  detail::half(N);
  GroundStateVector<Rational> v;
  v.model = Model::brauer;
  v.N = N;
  v.patterns = enumerate_crossing(N);
  std::vector<std::optional<QPoly>> comps(v.patterns.size());
  const LinkPattern p0 = base_pattern(N, PatternKind::crossing);
  comps[v.index(p0)] = base;
  std::deque<LinkPattern> queue{p0};
  while (!queue.empty()) {
    LinkPattern pi = queue.front();
    queue.pop_front();
    const QPoly& cur = *comps[v.index(pi)];
    for (std::size_t i = 1; i < N; ++i) {
      if (pi.has_little_arch(i)) continue;
      LinkPattern next = apply_f(i, pi);
      auto& slot = comps[v.index(next)];
      if (slot) continue;
      try {
        slot = theta(cur, i);
      } catch (const NotDivisible&) {
        throw NotDivisible("Theta_" + std::to_string(i) + " left the polynomial domain at pattern " + pi.str());
      }
      queue.push_back(next);
    }
  }
  for (auto& c : comps) {
    if (!c) throw InvariantViolation("pattern unreachable by f-moves");
    v.components.push_back(std::move(*c));
  }
  return v;
}

inline GroundStateVector<Rational> build_vector(std::size_t N) { return build_vector(N, psi0(N)); }

/// Coefficient of z_N^{4(n-1)}; point N's partner becomes the open strand.
inline GroundStateVector<Rational> reduce_to_odd(const GroundStateVector<Rational>& v) {
  const std::size_t n = detail::half(v.N);
  const int d = 4 * static_cast<int>(n - 1);
  GroundStateVector<Rational> out;
  out.model = v.model;
  out.N = v.N - 1;
  out.patterns = enumerate_crossing(out.N);
  out.components.assign(out.patterns.size(), QPoly(out.N));
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::vector<int> p = v.patterns[k].partners();
    int partner = p.back();
    p.pop_back();
    p[partner - 1] = 0;
    LinkPattern small(std::move(p), PatternKind::crossing);
    for (const auto& [m, c] : v.components[k])
      if (m[v.N - 1] > d) throw DegreeBoundViolation("partial degree in z_N exceeds 4(n-1)");
    out[small] = drop_variable(leading_coefficient_in(v.components[k], v.N, d), v.N);
  }
  return out;
}

/// Fraction with a denominator kept as a list of factors, cancelled greedily.
template <class C>
struct FactoredFraction {
  Polynomial<C> num;
  std::vector<Polynomial<C>> den;

  void cancel() {
    for (std::size_t k = 0; k < den.size();) {
      if (den[k].is_constant()) {
        num *= inverse(den[k].constant_term());
        den.erase(den.begin() + static_cast<long>(k));
      } else if (auto q = try_exact_div(num, den[k])) {
        num = std::move(*q);
        den.erase(den.begin() + static_cast<long>(k));
      } else {
        ++k;
      }
    }
  }

  Polynomial<C> to_polynomial() const {
    Polynomial<C> d(num.n_vars(), C(1));
    for (const auto& f : den) d *= f;
    return exact_div(num, d);
  }
};

/// g <- tau_i(p) * Theta_i(g / p).
template <class C>
FactoredFraction<C> conjugated_theta(const FactoredFraction<C>& g, std::size_t i, const Polynomial<C>& p) {
  const std::size_t n = g.num.n_vars();
  auto u = detail::u_form<C>(n, i);
  Polynomial<C> one(n, C(1));
  Polynomial<C> tp = swap_adjacent(p, i);
  Polynomial<C> d(n, C(1)), td(n, C(1));
  std::vector<Polynomial<C>> tden;
  for (const auto& f : g.den) {
    d *= f;
    tden.push_back(swap_adjacent(f, i));
    td *= tden.back();
  }
  FactoredFraction<C> r;
  r.num = (one + u) * (Polynomial<C>(n, C(2)) - u) * swap_adjacent(g.num, i) * d * p - Polynomial<C>(n, C(2)) * (one - u) * g.num * td * tp;
  r.den = {u, one - u, p};
  r.den.insert(r.den.end(), g.den.begin(), g.den.end());
  r.den.insert(r.den.end(), tden.begin(), tden.end());
  r.cancel();
  return r;
}

/// (Theta_{n-1} - 2/a_{n,n+1}) ... (Theta_1 - 2/a_{2,n+1}) Psi0, each factor written as a_{j,n+1} Theta_j (1/a_{j+1,n+1}).
inline QPoly phi_n(const QPoly& psi0_full) {
  const std::size_t N = psi0_full.n_vars();
  const std::size_t n = detail::half(N);
  FactoredFraction<Rational> g{psi0_full, {}};
  for (std::size_t j = 1; j <= n - 1; ++j) g = conjugated_theta(g, j, a_factor(N, j + 1, n + 1));
  return g.to_polynomial();
}

/// Psi0^{(N-2)}(z_1..z_{n-1}, z_{n+2}..z_N) times the product of a, b, c factors.
inline QPoly phi_n_formula(std::size_t N, const QPoly& psi0_smaller) {
  const std::size_t n = detail::half(N);
  auto tgt = detail::skip_middle_pair(N);
  QPoly g = remap_variables(psi0_smaller, N, tgt);
  for (std::size_t i = 1; i <= n - 1; ++i) {
    g *= a_factor(N, i, n) * b_factor(N, i, n) * a_factor(N, i, n + 1) * b_factor(N, i, n + 1);
    g *= a_factor(N, n, n + i + 1) * c_factor(N, n, n + i + 1) * a_factor(N, n + 1, n + i + 1) * c_factor(N, n + 1, n + i + 1);
  }
  return g;
}

/// prod_{i=1}^{2n} prod_{k=1}^{n-1} a_{i,i+k}, indices mod N.
inline QPoly periodic_psi0(std::size_t N) {
  const std::size_t n = detail::half(N);
  QPoly g(N, Rational(1));
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t k = 1; k <= n - 1; ++k) g *= a_factor(N, i, (i + k - 1) % N + 1);
  return g;
}

/// Right side of the periodic recursion: (Theta_1 + 2/a_{1,n+1}) ... (Theta_{n-1} + 2/a_{n-1,n+1}) applied to the
/// size N-2 entry times prod a_{i,n} a_{i,n+1} a_{n,n+i+1} a_{n+1,n+i+1}.
inline QPoly periodic_recursion_rhs(std::size_t N) {
  const std::size_t n = detail::half(N);
  QPoly g = n == 1 ? QPoly(N, Rational(1)) : remap_variables(periodic_psi0(N - 2), N, detail::skip_middle_pair(N));
  for (std::size_t i = 1; i <= n - 1; ++i)
    g *= a_factor(N, i, n) * a_factor(N, i, n + 1) * a_factor(N, n, n + i + 1) * a_factor(N, n + 1, n + i + 1);
  FactoredFraction<Rational> f{g, {}};
  // Theta_j + 2/a_{j,n+1} = a_{j+1,n+1} Theta_j (1/a_{j,n+1}); rightmost first.
  for (std::size_t j = n - 1; j >= 1; --j) f = conjugated_theta(f, j, a_factor(N, j, n + 1));
  return f.to_polynomial();
}

}  // namespace loopstate
