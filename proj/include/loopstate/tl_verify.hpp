#pragma once

#include <array>

#include "loopstate/random_points.hpp"
#include "loopstate/report.hpp"
#include "loopstate/tl.hpp"

namespace loopstate {

struct TlVerifyOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
};

namespace detail {
inline std::vector<Cyclotomic> w_point(RandomRationals& rr, std::size_t n) {
  auto p = rr.point(n);
  return {p.begin(), p.end()};
}

inline std::string w_point_str(const std::vector<Cyclotomic>& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + p[k].str();
  return s + ")";
}

/// No little arch (k, k+1) with i <= k < j.
inline bool no_little_arch_between(const LinkPattern& pi, std::size_t i, std::size_t j) {
  for (std::size_t k = i; k < j; ++k)
    if (pi.has_little_arch(k)) return false;
  return true;
}

/// (z_1...z_N)^d Psi_rho(1/z_N, ..., 1/z_1).
inline WPoly tl_reflected(const WPoly& f, int d) {
  WPoly g = reverse_variables(f, false);
  for (std::size_t m = 1; m <= g.n_vars(); ++m) g = reciprocal_substitute(g, m, d);
  return g;
}

/// The six units of Z[w].
inline std::array<Cyclotomic, 6> w_units() {
  const Cyclotomic q = Cyclotomic::omega(), one(1);
  return {one, -one, q, -q, q * q, -(q * q)};
}
}  // namespace detail

/// Relation and property suite for an even-size TL vector; smaller is the size N-2 vector (built if absent).
inline Report verify_tl(const GroundStateVector<Cyclotomic>& psi, const TlVerifyOptions& opt = {},
                        const GroundStateVector<Cyclotomic>* smaller = nullptr) {
  const std::size_t N = psi.N;
  if (N == 0 || N % 2) throw std::invalid_argument("verify_tl needs even N");
  const std::size_t n = N / 2;
  const int d = 2 * static_cast<int>(n - 1);
  const Cyclotomic q = Cyclotomic::omega(), q2 = q * q, one(1);
  Report rep{"tl-relations", "tl", N, opt.seed, {}, {}};
  RandomRationals rr(opt.seed);

  {
    auto& c = rep.add("component-count");
    c.record(psi.size() == enumerate_noncrossing(N).size());
    for (std::size_t k = 0; k < psi.size(); ++k)
      c.record(!psi.components[k].is_zero(), [&] { return psi.patterns[k].str() + ": zero"; });
  }
  {
    auto& c = rep.add("degree-bounds");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      auto dg = degrees(psi.components[k]);
      bool ok = dg.total <= 3 * static_cast<int>(n * (n - 1));
      for (int p : dg.partial) ok = ok && p <= d;
      c.record(ok, [&] { return psi.patterns[k].str() + ": total degree " + std::to_string(dg.total); });
    }
  }
  {
    auto& c = rep.add("delta-relation");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& pi = psi.patterns[k];
      for (std::size_t i = 1; i < N; ++i) {
        if (!pi.has_little_arch(i)) continue;
        WPoly rhs(N);
        for (const auto& a : antecedents(pi, i, psi.patterns)) rhs += psi[a];
        c.record(delta_tl(psi.components[k], i) == rhs, [&] { return pi.str() + " i=" + std::to_string(i); });
      }
    }
  }
  {
    auto& c = rep.add("P1-vanishing");
    std::size_t reverse_hits = 0, reverse_trials = 0;
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& pi = psi.patterns[k];
      for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = i + 1; j <= N; ++j) {
          if (!detail::no_little_arch_between(pi, i, j)) continue;
          for (std::size_t t = 0; t < opt.trials; ++t) {
            auto pt = detail::w_point(rr, N);
            pt[j - 1] = q * pt[i - 1];
            c.record(evaluate<Cyclotomic>(psi.components[k], pt).is_zero(), [&] {
              return pi.str() + " z" + std::to_string(j) + "=q z" + std::to_string(i) + " at " + detail::w_point_str(pt);
            });
            auto rev = detail::w_point(rr, N);
            rev[i - 1] = q * rev[j - 1];
            ++reverse_trials;
            if (evaluate<Cyclotomic>(psi.components[k], rev).is_zero()) ++reverse_hits;
          }
        }
    }
    if (N == 2) c.record(true);
    rep.notes.push_back("P1 orientation: vanishing at z_j = q z_i (i < j); the opposite orientation z_i = q z_j vanished in " +
                        std::to_string(reverse_hits) + " of " + std::to_string(reverse_trials) + " trials");
  }

  std::optional<GroundStateVector<Cyclotomic>> own_smaller;
  if (N > 2 && !smaller) {
    own_smaller = build_vector_tl(N - 2);
    smaller = &*own_smaller;
  }
  {
    auto& c = rep.add("recursion-little-arch");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& pi = psi.patterns[k];
      for (std::size_t i = 1; i < N; ++i) {
        if (!pi.has_little_arch(i)) continue;
        for (std::size_t t = 0; t < opt.trials; ++t) {
          auto pt = detail::w_point(rr, N);
          pt[i] = q * pt[i - 1];
          std::vector<Cyclotomic> rest;
          Cyclotomic prod = one;
          const Cyclotomic& zi = pt[i - 1];
          for (std::size_t m = 1; m <= N; ++m) {
            if (m == i || m == i + 1) continue;
            const Cyclotomic& zk = pt[m - 1];
            rest.push_back(zk);
            prod *= (q2 * zi - zk) * (q2 * zi * zk - one);
          }
          Cyclotomic small = N == 2 ? one : evaluate<Cyclotomic>((*smaller)[remove_arch(i, pi)], rest);
          c.record(evaluate<Cyclotomic>(psi.components[k], pt) == small * prod,
                   [&] { return pi.str() + " i=" + std::to_string(i) + " at " + detail::w_point_str(pt); });
        }
      }
    }
  }
  {
    auto& r1 = rep.add("reciprocity-z1");
    auto& rN = rep.add("reciprocity-zN");
    auto& refl = rep.add("reflection");
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const auto& pi = psi.patterns[k];
      const WPoly& f = psi.components[k];
      try {
        r1.record(reciprocal_substitute(f, 1, d) == f, [&] { return pi.str(); });
        rN.record(reciprocal_substitute(f, N, d) == f, [&] { return pi.str(); });
        refl.record(detail::tl_reflected(psi[reflect(pi)], d) == f, [&] { return pi.str(); });
      } catch (const DegreeBoundViolation&) {
        auto why = [&] { return pi.str() + ": partial degree above " + std::to_string(d); };
        r1.record(false, why);
        rN.record(false, why);
        refl.record(false, why);
      }
    }
  }
  {
    auto& sym = rep.add("sum-symmetric");
    auto& rec = rep.add("sum-reciprocal");
    const WPoly z = psi.sum();
    for (std::size_t i = 1; i < N; ++i) sym.record(swap_adjacent(z, i) == z, [&] { return "tau_" + std::to_string(i); });
    if (N == 2) sym.record(true);
    for (std::size_t i = 1; i <= N; ++i) {
      bool ok = false;
      try {
        ok = reciprocal_substitute(z, i, d) == z;
      } catch (const DegreeBoundViolation&) {
      }
      rec.record(ok, [&] { return "z_" + std::to_string(i); });
    }
  }
  {
    auto& c = rep.add("homogeneous-common-unit");
    std::vector<Cyclotomic> vals;
    const std::vector<Cyclotomic> ones(N, one);
    for (const auto& comp : psi.components) vals.push_back(evaluate<Cyclotomic>(comp, ones));
    std::optional<Cyclotomic> unit;
    for (const auto& u : detail::w_units()) {
      bool ok = true;
      for (const auto& v : vals) {
        Cyclotomic w = u * v;
        ok = ok && w.is_rational() && w.re() > 0;
      }
      if (ok) {
        unit = u;
        break;
      }
    }
    c.record(unit.has_value(), [] { return std::string("no unit makes every value at z = 1 positive"); });
    if (unit) {
      std::string s = "values at z = 1 times " + unit->str() + ":";
      for (const auto& v : vals) s += " " + (*unit * v).str();
      rep.notes.push_back(s);
    }
  }
  return rep;
}

}  // namespace loopstate
