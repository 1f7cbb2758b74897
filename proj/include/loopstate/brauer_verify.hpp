#pragma once

#include <sstream>

#include "loopstate/brauer.hpp"
#include "loopstate/random_points.hpp"
#include "loopstate/report.hpp"

namespace loopstate {

struct BrauerVerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 20;  ///< random points per locus
  bool phi = true;          ///< Phi_n factorization (needs the size N-2 base entry)
};

namespace detail {

/// prod over unconnected pairs i<j of (z_i^2 - z_j^2), signed by the crossing number.
inline QPoly leading_term_prediction(const LinkPattern& pi) {
  const std::size_t N = pi.size();
  QPoly g(N, Rational(crossing_number(pi) % 2 ? -1 : 1));
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j) {
      if (pi.partner(i) == static_cast<int>(j)) continue;
      QPoly zi = QPoly::variable(N, i), zj = QPoly::variable(N, j);
      g *= zi * zi - zj * zj;
    }
  return g;
}

/// No arch joins two points of [i, j].
inline bool no_arch_within(const LinkPattern& pi, std::size_t i, std::size_t j) {
  for (std::size_t k = i; k <= j; ++k) {
    int p = pi.partner(k);
    if (p >= static_cast<int>(i) && p <= static_cast<int>(j)) return false;
  }
  return true;
}

/// Second derivation of every component, preferring the largest generator index.
inline GroundStateVector<Rational> build_vector_reverse(std::size_t N, const QPoly& base) {
  GroundStateVector<Rational> v;
  v.model = Model::brauer;
  v.N = N;
  v.patterns = enumerate_crossing(N);
  std::vector<std::optional<QPoly>> comps(v.size());
  const LinkPattern p0 = base_pattern(N, PatternKind::crossing);
  comps[v.index(p0)] = base;
  std::deque<LinkPattern> queue{p0};
  while (!queue.empty()) {
    LinkPattern pi = queue.front();
    queue.pop_front();
    for (std::size_t i = N - 1; i >= 1; --i) {
      if (pi.has_little_arch(i)) continue;
      LinkPattern next = apply_f(i, pi);
      auto& slot = comps[v.index(next)];
      if (slot) continue;
      slot = theta(*comps[v.index(pi)], i);
      queue.push_back(next);
    }
  }
  for (auto& c : comps) v.components.push_back(std::move(*c));
  return v;
}
}  // namespace detail

/// Relation and property suite for an even-size Brauer vector; smaller is the size N-2 vector (built if absent).
inline Report verify_brauer(const GroundStateVector<Rational>& psi, const BrauerVerifyOptions& opt = {},
                            const GroundStateVector<Rational>* smaller = nullptr) {
  const std::size_t N = psi.N;
  const std::size_t n = detail::half(N);
  Report rep{"brauer-relations", "brauer", N, opt.seed, {}, {}};
  RandomRationals rr(opt.seed);
  const LinkPattern p0 = base_pattern(N, PatternKind::crossing);
  const QPoly& base = psi[p0];

  auto safe_theta = [](const QPoly& f, std::size_t i) -> std::optional<QPoly> {
    try {
      return theta(f, i);
    } catch (const NotDivisible&) {
      return std::nullopt;
    }
  };

  {
    auto& c = rep.add("component-count");
    c.record(psi.size() == enumerate_crossing(N).size());
    for (const auto& comp : psi.components) c.record(!comp.is_zero(), [] { return std::string("zero component"); });
  }
  {
    auto& c = rep.add("degrees");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& comp = psi.components[k];
      if (comp.is_zero()) {
        c.record(false, [&] { return psi.patterns[k].str() + ": zero"; });
        continue;
      }
      auto d = degrees(comp);
      bool ok = d.total == 4 * static_cast<int>(n * (n - 1));
      for (int p : d.partial) ok = ok && p == 4 * static_cast<int>(n - 1);
      c.record(ok, [&] { return psi.patterns[k].str() + ": total degree " + std::to_string(d.total); });
    }
  }
  {
    auto& c = rep.add("stabilizer");
    for (std::size_t i = 1; i + 1 <= n; ++i) {
      auto t = safe_theta(base, i + n);
      auto tt = t ? safe_theta(*t, i) : std::nullopt;
      c.record(tt && *tt == base, [&] { return "Theta_" + std::to_string(i) + " Theta_" + std::to_string(i + n); });
    }
    if (n == 1) c.record(true);
  }
  {
    auto& c = rep.add("theta-relation");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& pi = psi.patterns[k];
      for (std::size_t i = 1; i < N; ++i) {
        if (pi.has_little_arch(i)) continue;
        auto t = safe_theta(psi.components[k], i);
        c.record(t && *t == psi[apply_f(i, pi)], [&] { return pi.str() + " i=" + std::to_string(i); });
      }
    }
    if (N == 2) c.record(true);
  }
  {
    auto& c = rep.add("path-independence");
    try {
      auto alt = detail::build_vector_reverse(N, base);
      for (std::size_t k = 0; k < psi.size(); ++k)
        c.record(alt.components[k] == psi.components[k], [&] { return psi.patterns[k].str(); });
    } catch (const NotDivisible&) {
      c.record(false, [] { return std::string("base component leaves the Theta domain"); });
    }
  }
  {
    auto& c = rep.add("delta-relation");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& pi = psi.patterns[k];
      for (std::size_t i = 1; i < N; ++i) {
        if (!pi.has_little_arch(i)) continue;
        QPoly rhs(N);
        for (const auto& a : antecedents(pi, i, psi.patterns)) rhs += psi[a];
        c.record(delta_cap(psi.components[k], i) == rhs, [&] { return pi.str() + " i=" + std::to_string(i); });
      }
    }
  }
  {
    auto& e1 = rep.add("evenness-z1");
    auto& eN = rep.add("evenness-zN");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& comp = psi.components[k];
      e1.record(flip_sign(comp, 1) == comp, [&] { return psi.patterns[k].str(); });
      eN.record(flip_sign(comp, N) == comp, [&] { return psi.patterns[k].str(); });
    }
  }
  {
    auto& c = rep.add("reflection");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& pi = psi.patterns[k];
      c.record(reverse_variables(psi[reflect(pi)], true) == psi.components[k], [&] { return pi.str(); });
    }
  }
  {
    auto& c = rep.add("P1-vanishing");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& pi = psi.patterns[k];
      for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i + 1; j <= N; ++j) {
          if (!detail::no_arch_within(pi, i, j)) continue;
          for (std::size_t t = 0; t < opt.trials; ++t) {
            auto pt = rr.point(N);
            pt[j - 1] = 1 + pt[i - 1];
            c.record(evaluate_rational(psi.components[k], pt) == 0, [&] {
              return pi.str() + " z" + std::to_string(j) + "=1+z" + std::to_string(i) + " at " + detail::point_str(pt);
            });
          }
        }
    }
    if (N == 2) c.record(true);
  }
  {
    auto& c = rep.add("P2-leading-terms");
    for (std::size_t k = 0; k < psi.size(); ++k)
      c.record(top_homogeneous_part(psi.components[k]) == detail::leading_term_prediction(psi.patterns[k]),
               [&] { return psi.patterns[k].str(); });
  }

  std::optional<GroundStateVector<Rational>> own_smaller;
  if (N > 2 && !smaller) {
    own_smaller = build_vector(N - 2);
    smaller = &*own_smaller;
  }
  {
    auto& c = rep.add("recursion-little-arch");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& pi = psi.patterns[k];
      for (std::size_t i = 1; i < N; ++i) {
        if (!pi.has_little_arch(i)) continue;
        const QPoly& small = N == 2 ? QPoly(0, Rational(1)) : (*smaller)[remove_arch(i, pi)];
        for (std::size_t t = 0; t < opt.trials; ++t) {
          auto pt = rr.point(N);
          pt[i] = 1 + pt[i - 1];
          std::vector<Rational> rest;
          Rational prod = 1;
          const Rational& zi = pt[i - 1];
          for (std::size_t m = 1; m <= N; ++m) {
            if (m == i || m == i + 1) continue;
            const Rational& zk = pt[m - 1];
            rest.push_back(zk);
            prod *= (2 + zi + zk) * (2 + zi - zk) * (1 + zk - zi) * (1 - zk - zi);
          }
          Rational lhs = evaluate_rational(psi.components[k], pt);
          Rational rhs = (small.n_vars() == 0 ? small.constant_term() : evaluate_rational(small, rest)) * prod;
          c.record(lhs == rhs, [&] { return pi.str() + " i=" + std::to_string(i) + " at " + detail::point_str(pt); });
        }
      }
    }
  }
  if (opt.phi) {
    auto& f = rep.add("phi-formula");
    auto& s = rep.add("phi-symmetry");
    const QPoly small0 = N == 2 ? QPoly(0, Rational(1)) : (*smaller)[base_pattern(N - 2, PatternKind::crossing)];
    try {
      QPoly phi = phi_n(base);
      f.record(phi == phi_n_formula(N, small0));
      s.record(swap_adjacent(phi, n) == phi);
    } catch (const NotDivisible&) {
      f.record(false, [] { return std::string("Phi_n is not a polynomial"); });
      s.record(false, [] { return std::string("Phi_n is not a polynomial"); });
    }
  }
  {
    auto& c = rep.add("coprimality-witness");
    for (char kind : {'a', 'b', 'c'})
      for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j) {
          if (i == j || (kind != 'a' && j < i)) continue;
          // a few points, since small rationals can land on other vanishing loci
          bool any = false;
          for (std::size_t t = 0; t < 5 && !any; ++t) {
            auto pt = rr.point(N);
            if (kind == 'a') pt[j - 1] = 1 + pt[i - 1];
            if (kind == 'b') pt[j - 1] = 1 - pt[i - 1];
            if (kind == 'c') pt[j - 1] = -1 - pt[i - 1];
            for (const auto& comp : psi.components)
              if (evaluate_rational(comp, pt) != 0) {
                any = true;
                break;
              }
          }
          c.record(any, [&] { return std::string(1, kind) + "_" + std::to_string(i) + "," + std::to_string(j); });
        }
  }
  {
    auto& c = rep.add("homogeneous-positive-integers");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      Rational h = psi.components[k].constant_term();
      c.record(h > 0 && h.get_den() == 1, [&] { return psi.patterns[k].str() + " -> " + h.get_str(); });
    }
  }
  return rep;
}

}  // namespace loopstate
