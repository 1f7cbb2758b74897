#pragma once

#include <optional>
#include <vector>

#include "loopstate/operators.hpp"
#include "loopstate/vector.hpp"

namespace loopstate {

inline const Cyclotomic& q_unit() {
  static const Cyclotomic q = Cyclotomic::omega();
  return q;
}

/// t(z, w) = (q z - w) / (q w - z).
inline Cyclotomic weight_t(const Cyclotomic& z, const Cyclotomic& w) {
  Cyclotomic den = q_unit() * w - z;
  if (den == Cyclotomic(0)) throw PoleError("t(z, w) has a pole at z = q w");
  return (q_unit() * z - w) / den;
}

namespace detail {
/// c0 + c1 z_i + c2 z_j.
inline WPoly w_linear(std::size_t n, const Cyclotomic& c0, std::size_t i, const Cyclotomic& ci, std::size_t j,
                      const Cyclotomic& cj) {
  return linear_form<Cyclotomic>(n, c0, {{i, ci}, {j, cj}});
}
/// a z_i z_j + b.
inline WPoly w_bilinear(std::size_t n, std::size_t i, std::size_t j, const Cyclotomic& a, const Cyclotomic& b) {
  return WPoly::variable(n, i) * WPoly::variable(n, j) * WPoly(n, a) + WPoly(n, b);
}
}  // namespace detail

/// Delta_i f = (q z_i - z_{i+1}) / (1 + q) * d_i f; 1/(1+q) = -q.
inline WPoly delta_tl(const WPoly& f, std::size_t i) {
  const Cyclotomic& q = q_unit();
  WPoly pre = detail::w_linear(f.n_vars(), Cyclotomic(0), i, -q * q, i + 1, q);
  return pre * divided_difference(f, i);
}

/// Component at the maximally nested pattern:
/// prod_{i<j<=n} (q z_i - z_j)(q^2 z_i z_j - 1) * prod_{n<i<j} (q^2 z_j - z_i)(q z_i z_j - 1).
inline WPoly psi0_tl(std::size_t N) {
  if (N == 0 || N % 2) throw std::invalid_argument("psi0_tl needs even N >= 2");
  const std::size_t n = N / 2;
  const Cyclotomic q = q_unit(), q2 = q * q, one(1);
  WPoly out(N, one);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      out *= detail::w_linear(N, Cyclotomic(0), i, q, j, -one) * detail::w_bilinear(N, i, j, q2, -one);
  for (std::size_t i = n + 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      out *= detail::w_linear(N, Cyclotomic(0), i, -one, j, q2) * detail::w_bilinear(N, i, j, q, -one);
  return out;
}

/// Triangular solve from the nested pattern down to the fundamental one, by decreasing box count.
/// Each pattern sigma takes its smallest valley i and pi = sigma + box at i:
/// Psi_sigma = Delta_i Psi_pi - sum of the other antecedents of pi under e_i.
inline GroundStateVector<Cyclotomic> build_vector_tl(std::size_t N) {
  if (N == 0 || N % 2) throw std::invalid_argument("build_vector_tl needs even N >= 2");
  GroundStateVector<Cyclotomic> v;
  v.model = Model::tl;
  v.N = N;
  v.patterns = enumerate_noncrossing(N);
  std::vector<std::optional<WPoly>> comps(v.size());

  std::vector<std::size_t> order(v.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::vector<int> boxes(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) boxes[k] = box_count(v.patterns[k]);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a] > boxes[b]; });

  const LinkPattern p0 = base_pattern(N, PatternKind::noncrossing);
  comps[v.index(p0)] = psi0_tl(N);
  for (std::size_t k : order) {
    const LinkPattern& sigma = v.patterns[k];
    if (sigma == p0) continue;
    DyckPath path = dyck_profile(sigma);
    auto valleys = path.addable_columns();
    if (valleys.empty()) throw std::logic_error("pattern below the top has no valley: " + sigma.str());
    const std::size_t i = valleys.front();
    const LinkPattern pi = from_dyck(path.with_box_added(i));
    const auto& top = comps[v.index(pi)];
    if (!top) throw std::logic_error("construction order: " + pi.str() + " not yet computed");
    WPoly c = delta_tl(*top, i);
    for (const auto& a : antecedents(pi, i, v.patterns)) {
      if (a == sigma) continue;
      const auto& other = comps[v.index(a)];
      if (!other) throw std::logic_error("construction order: antecedent " + a.str() + " of " + pi.str() + " missing");
      c -= *other;
    }
    comps[k] = std::move(c);
  }
  for (auto& c : comps) v.components.push_back(std::move(*c));
  for (const auto& c : v.components) {
    auto d = degrees(c);
    const int n = static_cast<int>(N / 2);
    bool ok = c.is_zero() || d.total <= 3 * n * (n - 1);
    for (int p : d.partial) ok = ok && p <= 2 * (n - 1);
    if (!ok) throw DegreeBoundViolation("TL component exceeds the degree bound");
  }
  return v;
}

struct TlReductions {
  GroundStateVector<Cyclotomic> odd;   ///< size N-1: z_N set to 0
  GroundStateVector<Cyclotomic> even;  ///< size N-2: then z_{N-1} set to 0 and divided by z_1...z_{N-2}
};

/// Odd size by z_N -> 0 (the partner of N becomes the open point); back to even size by z_{N-1} -> 0,
/// where only the patterns with N-1 open survive.
inline TlReductions reduce_odd_tl(const GroundStateVector<Cyclotomic>& v) {
  if (v.model != Model::tl || v.N < 2 || v.N % 2) throw std::invalid_argument("reduce_odd_tl needs an even-size TL vector");
  const std::size_t N = v.N;
  TlReductions r;
  r.odd.model = r.even.model = Model::tl;
  r.odd.N = N - 1;
  r.even.N = N - 2;
  r.odd.patterns = enumerate_noncrossing(N - 1);
  r.even.patterns = enumerate_noncrossing(N - 2);
  r.odd.components.assign(r.odd.size(), WPoly(N - 1));
  r.even.components.assign(r.even.size(), WPoly(N - 2));
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::vector<int> p = v.patterns[k].partners();
    int partner = p.back();
    p.pop_back();
    p[partner - 1] = 0;
    r.odd[LinkPattern(std::move(p), PatternKind::noncrossing)] =
        drop_variable(substitute_constant(v.components[k], N, Cyclotomic(0)), N);
  }
  if (N == 2) {
    r.even.components.assign(1, WPoly(0, r.odd.components.at(0).constant_term()));
    return r;
  }
  WPoly mono(N - 1, Cyclotomic(1));
  for (std::size_t m = 1; m <= N - 2; ++m) mono *= WPoly::variable(N - 1, m);
  for (std::size_t k = 0; k < r.odd.size(); ++k) {
    const LinkPattern& sigma = r.odd.patterns[k];
    WPoly at0 = substitute_constant(r.odd.components[k], N - 1, Cyclotomic(0));
    if (sigma.partner(N - 1) != 0) {
      if (!at0.is_zero()) throw NotDivisible("odd-to-even reduction: " + sigma.str() + " does not vanish at z_{N-1} = 0");
      continue;
    }
    std::vector<int> p = sigma.partners();
    p.pop_back();
    r.even[LinkPattern(std::move(p), PatternKind::noncrossing)] = drop_variable(exact_div(at0, mono), N - 1);
  }
  return r;
}

}  // namespace loopstate
