#pragma once

#include <array>
#include <type_traits>

#include "loopstate/brauer.hpp"
#include "loopstate/random_points.hpp"
#include "loopstate/report.hpp"
#include "loopstate/sumrules.hpp"
#include "loopstate/tl.hpp"

namespace loopstate {

/// Dense matrix on the canonical pattern basis; column pi' holds the image of pi'.
template <class C>
struct PatternMatrix {
  Model model = Model::brauer;
  std::size_t N = 0;
  std::vector<LinkPattern> basis;
  std::vector<C> entries;  ///< row-major

  PatternMatrix() = default;
  PatternMatrix(Model m, std::size_t n)
      : model(m), N(n), basis(enumerate_patterns(n, pattern_kind(m))), entries(basis.size() * basis.size(), C(0)) {}

  std::size_t dim() const { return basis.size(); }
  C& at(std::size_t r, std::size_t c) { return entries[r * dim() + c]; }
  const C& at(std::size_t r, std::size_t c) const { return entries[r * dim() + c]; }

  static PatternMatrix identity(Model m, std::size_t n) {
    PatternMatrix out(m, n);
    for (std::size_t k = 0; k < out.dim(); ++k) out.at(k, k) = C(1);
    return out;
  }

  PatternMatrix operator*(const PatternMatrix& o) const {
    check_same(o);
    PatternMatrix out(*this);
    std::fill(out.entries.begin(), out.entries.end(), C(0));
    const std::size_t d = dim();
    const C zero(0);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        const C& a = at(r, k);
        if (a == zero) continue;
        for (std::size_t c = 0; c < d; ++c)
          if (!(o.at(k, c) == zero)) out.at(r, c) += a * o.at(k, c);
      }
    return out;
  }
  PatternMatrix& operator+=(const PatternMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < entries.size(); ++k) entries[k] += o.entries[k];
    return *this;
  }
  PatternMatrix operator+(const PatternMatrix& o) const { return PatternMatrix(*this) += o; }
  friend PatternMatrix operator*(const C& s, PatternMatrix m) {
    for (auto& x : m.entries) x *= s;
    return m;
  }

  /// M x for a column vector x.
  std::vector<C> apply(const std::vector<C>& x) const {
    if (x.size() != dim()) throw ArityMismatch("vector length differs from the basis size");
    std::vector<C> y(dim(), C(0));
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < dim(); ++c) y[r] += at(r, c) * x[c];
    return y;
  }
  /// y M for a covector y.
  std::vector<C> left(const std::vector<C>& y) const {
    if (y.size() != dim()) throw ArityMismatch("covector length differs from the basis size");
    std::vector<C> out(dim(), C(0));
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < dim(); ++c) out[c] += y[r] * at(r, c);
    return out;
  }

  friend bool operator==(const PatternMatrix& a, const PatternMatrix& b) {
    return a.model == b.model && a.N == b.N && a.entries == b.entries;
  }

 private:
  void check_same(const PatternMatrix& o) const {
    if (model != o.model || N != o.N) throw ArityMismatch("pattern matrices on different bases");
  }
};

/// Matrix of e_i (both models) or f_i (Brauer only).
template <class C = Rational>
PatternMatrix<C> generator_matrix(Model m, std::size_t N, char g, std::size_t i) {
  if (g != 'e' && g != 'f') throw std::invalid_argument("generator must be 'e' or 'f'");
  if (g == 'f' && m != Model::brauer) throw std::invalid_argument("f_i exists in the Brauer model only");
  PatternMatrix<C> out(m, N);
  for (std::size_t c = 0; c < out.dim(); ++c) {
    const LinkPattern& pi = out.basis[c];
    out.at(index_of(out.basis, g == 'e' ? apply_e(i, pi) : apply_f(i, pi)), c) += C(1);
  }
  return out;
}

/// a(z-w) I + b(z-w) f_i + c(z-w) e_i on crossing patterns of size N.
inline PatternMatrix<Rational> rcheck_matrix_brauer(std::size_t N, std::size_t i, const Rational& z, const Rational& w) {
  auto wt = weight_abc(z - w);
  PatternMatrix<Rational> out = wt.a * PatternMatrix<Rational>::identity(Model::brauer, N);
  out += wt.b * generator_matrix<Rational>(Model::brauer, N, 'f', i);
  out += wt.c * generator_matrix<Rational>(Model::brauer, N, 'e', i);
  return out;
}

/// t(z,w) I + (1 - t(z,w)) e_i on noncrossing patterns of size N.
inline PatternMatrix<Cyclotomic> rcheck_matrix_tl(std::size_t N, std::size_t i, const Cyclotomic& z, const Cyclotomic& w) {
  Cyclotomic t = weight_t(z, w);
  PatternMatrix<Cyclotomic> out = t * PatternMatrix<Cyclotomic>::identity(Model::tl, N);
  out += (Cyclotomic(1) - t) * generator_matrix<Cyclotomic>(Model::tl, N, 'e', i);
  return out;
}

/// The ring picks the model: Q for Brauer, Q(w) for TL.
template <class C>
PatternMatrix<C> rcheck_matrix(std::size_t N, std::size_t i, const C& z, const C& w) {
  if constexpr (std::is_same_v<C, Rational>)
    return rcheck_matrix_brauer(N, i, z, w);
  else
    return rcheck_matrix_tl(N, i, z, w);
}

struct OracleOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
};

/// Argument order of the exchange relation: ČR(z_i, z_{i+1}) as written, or ČR(z_{i+1}, z_i).
enum class Orientation { as_written, swapped };

inline const char* to_string(Orientation o) { return o == Orientation::as_written ? "CR(z_i, z_{i+1})" : "CR(z_{i+1}, z_i)"; }

namespace detail {

template <class C>
C ring_point(const Rational& r) {
  return C(r);
}

/// Evaluates every component at rational points; Q(w) components are split once.
template <class C>
class ComponentEvaluator {
 public:
  explicit ComponentEvaluator(const GroundStateVector<C>& v) {
    for (const auto& c : v.components) {
      if constexpr (std::is_same_v<C, Rational>)
        parts_.push_back(c);
      else
        parts_.push_back(split_cyclotomic(c));
    }
  }
  std::vector<C> operator()(const std::vector<Rational>& pt) const {
    std::vector<C> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) {
      if constexpr (std::is_same_v<C, Rational>)
        out.push_back(evaluate_rational(p, pt));
      else
        out.push_back(Cyclotomic(evaluate_rational(p.first, pt), evaluate_rational(p.second, pt)));
    }
    return out;
  }

 private:
  using Part = std::conditional_t<std::is_same_v<C, Rational>, QPoly, std::pair<QPoly, QPoly>>;
  std::vector<Part> parts_;
};

template <class C>
std::string vec_str(const std::vector<C>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if constexpr (std::is_same_v<C, Rational>)
      s += (k ? "," : "") + v[k].get_str();
    else
      s += (k ? "," : "") + v[k].str();
  }
  return s + "]";
}

/// Random point for ČR arguments: nonzero entries (the TL weight has its only rational pole at z = w = 0).
inline std::vector<Rational> nonzero_point(RandomRationals& rr, std::size_t n) {
  auto p = rr.point(n);
  for (auto& x : p)
    while (x == 0) x = rr.next();
  return p;
}

}  // namespace detail

/// Relations of the generators as exact matrix identities, all sizes 2..max_n.
inline Report check_algebra(Model m, std::size_t max_n) {
  Report rep{"algebra", to_string(m), max_n, 0, {}, {}};
  const bool brauer = m == Model::brauer;
  auto& ee = rep.add("e_i^2 = e_i");
  auto& eee = rep.add("e_i e_{i+-1} e_i = e_i");
  auto& ce = rep.add("[e_i, e_j] = 0 for |i-j| > 1");
  CheckResult *ff = nullptr, *fff = nullptr, *cf = nullptr, *cef = nullptr, *fe = nullptr;
  if (brauer) {
    ff = &rep.add("f_i^2 = I");
    fff = &rep.add("f_i f_{i+1} f_i = f_{i+1} f_i f_{i+1}");
    cf = &rep.add("[f_i, f_j] = 0 for |i-j| > 1");
    cef = &rep.add("[e_i, f_j] = 0 for |i-j| > 1");
    fe = &rep.add("f_i e_i = e_i f_i = e_i");
  }
  for (std::size_t N = 2; N <= max_n; ++N) {
    const auto I = PatternMatrix<Rational>::identity(m, N);
    std::vector<PatternMatrix<Rational>> e(N), f(N);
    for (std::size_t i = 1; i < N; ++i) {
      e[i] = generator_matrix<Rational>(m, N, 'e', i);
      if (brauer) f[i] = generator_matrix<Rational>(m, N, 'f', i);
    }
    auto where = [N](std::size_t i, std::size_t j) {
      return "N=" + std::to_string(N) + " i=" + std::to_string(i) + (j ? " j=" + std::to_string(j) : "");
    };
    for (std::size_t i = 1; i < N; ++i) {
      ee.record(e[i] * e[i] == e[i], [&] { return where(i, 0); });
      if (brauer) {
        ff->record(f[i] * f[i] == I, [&] { return where(i, 0); });
        fe->record(f[i] * e[i] == e[i] && e[i] * f[i] == e[i], [&] { return where(i, 0); });
      }
      for (std::size_t j = 1; j < N; ++j) {
        if (j + 1 == i || i + 1 == j) {
          eee.record(e[i] * e[j] * e[i] == e[i], [&] { return where(i, j); });
          if (brauer && j == i + 1) fff->record(f[i] * f[j] * f[i] == f[j] * f[i] * f[j], [&] { return where(i, j); });
        }
        if (i + 1 < j || j + 1 < i) {
          ce.record(e[i] * e[j] == e[j] * e[i], [&] { return where(i, j); });
          if (brauer) {
            cf->record(f[i] * f[j] == f[j] * f[i], [&] { return where(i, j); });
            cef->record(e[i] * f[j] == f[j] * e[i], [&] { return where(i, j); });
          }
        }
      }
    }
  }
  return rep;
}

/// Yang-Baxter and unitarity at random points on sizes 3..max_n. Two argument orders are tried for
/// the Yang-Baxter equation; exactly one must hold at every trial.
template <class C>
Report check_ybe_unitarity(const OracleOptions& opt = {}, std::size_t max_n = 5) {
  const Model m = std::is_same_v<C, Rational> ? Model::brauer : Model::tl;
  Report rep{"ybe-unitarity", to_string(m), max_n, opt.seed, {}, {}};
  RandomRationals rr(opt.seed);
  // ordered: R_i(b,c) R_{i+1}(a,c) R_i(a,b) = R_{i+1}(a,b) R_i(a,c) R_{i+1}(b,c)
  // same-order: R_i(a,b) R_{i+1}(a,c) R_i(b,c) = R_{i+1}(a,b) R_i(a,c) R_{i+1}(b,c)
  CheckResult ordered{"ordered", 0, 0, std::nullopt}, same{"same-order", 0, 0, std::nullopt};
  auto& unit = rep.add("unitarity");
  auto& fixed = rep.add("identity-at-equal-arguments");
  for (std::size_t N = 2; N <= max_n; ++N)
    for (std::size_t i = 1; i < N; ++i) {
      const auto I = PatternMatrix<C>::identity(m, N);
      for (std::size_t t = 0; t < opt.trials; ++t) {
        try {
          auto p = detail::nonzero_point(rr, 3);
          C a = detail::ring_point<C>(p[0]), b = detail::ring_point<C>(p[1]), c = detail::ring_point<C>(p[2]);
          std::string at = "N=" + std::to_string(N) + " i=" + std::to_string(i) + " at " + detail::point_str(p);
          // every matrix is assembled before anything is recorded, so a pole resamples cleanly
          const auto Rab = rcheck_matrix<C>(N, i, a, b), Rba = rcheck_matrix<C>(N, i, b, a), Raa = rcheck_matrix<C>(N, i, a, a);
          if (i + 2 <= N) {
            auto R1 = [&](const C& x, const C& y) { return rcheck_matrix<C>(N, i, x, y); };
            auto R2 = [&](const C& x, const C& y) { return rcheck_matrix<C>(N, i + 1, x, y); };
            const auto r1bc = R1(b, c), r1ac = R1(a, c), r2ab = R2(a, b), r2ac = R2(a, c), r2bc = R2(b, c);
            const auto rhs = r2ab * r1ac * r2bc;
            ordered.record(r1bc * r2ac * Rab == rhs, [&] { return at; });
            same.record(Rab * r2ac * r1bc == rhs, [&] { return at; });
          }
          unit.record(Rab * Rba == I, [&] { return at; });
          fixed.record(Raa == I, [&] { return at; });
        } catch (const PoleError&) {
          --t;  // resample off the poles
        }
      }
    }
  auto& ybe = rep.add("yang-baxter");
  auto& uniq = rep.add("yang-baxter-order-unique");
  const bool o = ordered.pass(), s = same.pass();
  uniq.record(o != s, [&] { return std::string(o ? "both argument orders hold" : "neither argument order holds"); });
  const CheckResult& chosen = s && !o ? same : ordered;
  ybe.trials = chosen.trials;
  ybe.failures = chosen.failures;
  ybe.counterexample = chosen.counterexample;
  rep.notes.push_back(std::string("yang-baxter argument order: ") +
                      (o && !s   ? "R_i(b,c) R_{i+1}(a,c) R_i(a,b) = R_{i+1}(a,b) R_i(a,c) R_{i+1}(b,c)"
                       : s && !o ? "R_i(a,b) R_{i+1}(a,c) R_i(b,c) = R_{i+1}(a,b) R_i(a,c) R_{i+1}(b,c)"
                                 : "not determined"));
  return rep;
}

struct ExchangeOutcome {
  Report report;
  std::optional<Orientation> orientation;  ///< the orientation that held, if any
};

/// Psi(..z_i, z_{i+1}..) = ČR_{i,i+1}(args) Psi(..z_{i+1}, z_i..) at random points, every i.
/// Without a fixed orientation both argument orders are tried; one that holds everywhere is kept
/// (both hold only when the vector is too small to tell them apart).
template <class C>
ExchangeOutcome check_exchange(const GroundStateVector<C>& psi, const OracleOptions& opt = {},
                               std::optional<Orientation> fixed = std::nullopt, const std::string& prefix = "") {
  const std::size_t N = psi.N;
  ExchangeOutcome out{Report{"exchange", to_string(psi.model), N, opt.seed, {}, {}}, std::nullopt};
  if (N < 2) return out;
  RandomRationals rr(opt.seed);
  const detail::ComponentEvaluator<C> eval(psi);
  std::array<std::vector<CheckResult>, 2> res;
  for (auto& r : res)
    for (std::size_t i = 1; i < N; ++i) r.push_back(CheckResult{prefix + "exchange-i=" + std::to_string(i), 0, 0, std::nullopt});
  for (std::size_t i = 1; i < N; ++i)
    for (std::size_t t = 0; t < opt.trials; ++t) {
      auto pt = detail::nonzero_point(rr, N);
      auto sw = pt;
      std::swap(sw[i - 1], sw[i]);
      const auto lhs = eval(pt), after = eval(sw);
      const C zi = detail::ring_point<C>(pt[i - 1]), zj = detail::ring_point<C>(pt[i]);
      std::array<PatternMatrix<C>, 2> R;
      try {
        R = {rcheck_matrix<C>(N, i, zi, zj), rcheck_matrix<C>(N, i, zj, zi)};
      } catch (const PoleError&) {
        --t;
        continue;
      }
      for (int o = 0; o < 2; ++o) {
        auto rhs = R[o].apply(after);
        res[o][i - 1].record(rhs == lhs, [&] {
          return "at " + detail::point_str(pt) + ": lhs " + detail::vec_str(lhs) + " rhs " + detail::vec_str(rhs);
        });
      }
    }
  auto passes = [&](int o) {
    for (const auto& c : res[o])
      if (!c.pass()) return false;
    return true;
  };
  int chosen = 0;
  if (fixed) {
    chosen = *fixed == Orientation::as_written ? 0 : 1;
    if (passes(chosen)) out.orientation = fixed;
  } else if (passes(0) || passes(1)) {
    chosen = passes(0) ? 0 : 1;
    out.orientation = chosen == 0 ? Orientation::as_written : Orientation::swapped;
    if (passes(0) && passes(1))
      out.report.notes.push_back(prefix + "exchange: both argument orders hold at N=" + std::to_string(N));
    else
      out.report.notes.push_back(prefix + "exchange holds with " + to_string(*out.orientation));
  }
  for (const auto& c : res[chosen]) out.report.checks.push_back(c);
  return out;
}

/// Covector identities: v_N (all ones) is fixed by e_i, f_i and ČR; for Brauer even N, b_N (permutation
/// sector) is fixed by f_i, killed by e_i and scaled by ČR for i != n, with the induced symmetries of W checked
/// symbolically on the given vector.
template <class C>
Report covector_identities(const GroundStateVector<C>& psi, const OracleOptions& opt = {}) {
  const std::size_t N = psi.N;
  const Model m = psi.model;
  Report rep{"covectors", to_string(m), N, opt.seed, {}, {}};
  RandomRationals rr(opt.seed);
  const std::vector<C> v(psi.size(), C(1));
  {
    auto& ve = rep.add("v e_i = v");
    auto& vr = rep.add("v CR = v");
    for (std::size_t i = 1; i < N; ++i) {
      ve.record(generator_matrix<C>(m, N, 'e', i).left(v) == v, [&] { return "i=" + std::to_string(i); });
      for (std::size_t t = 0; t < opt.trials; ++t) {
        try {
          auto p = detail::nonzero_point(rr, 2);
          auto R = rcheck_matrix<C>(N, i, detail::ring_point<C>(p[0]), detail::ring_point<C>(p[1]));
          vr.record(R.left(v) == v, [&] { return "i=" + std::to_string(i) + " at " + detail::point_str(p); });
        } catch (const PoleError&) {
          --t;
        }
      }
    }
    if (m == Model::brauer) {
      auto& vf = rep.add("v f_i = v");
      for (std::size_t i = 1; i < N; ++i)
        vf.record(generator_matrix<C>(m, N, 'f', i).left(v) == v, [&] { return "i=" + std::to_string(i); });
    }
    auto& zs = rep.add("Z-symmetric");
    const auto z = psi.sum();
    for (std::size_t i = 1; i < N; ++i) zs.record(swap_adjacent(z, i) == z, [&] { return "tau_" + std::to_string(i); });
  }
  if (N < 2) rep.checks.clear();
  if constexpr (std::is_same_v<C, Rational>) {
    if (m != Model::brauer || N % 2 || N < 4) return rep;
    const std::size_t n = N / 2;
    std::vector<Rational> b(psi.size(), Rational(0));
    for (std::size_t k = 0; k < psi.size(); ++k)
      if (permutation_sector(psi.patterns[k])) b[k] = 1;
    const std::vector<Rational> zero(psi.size(), Rational(0));
    auto& bf = rep.add("b f_i = b (i != n)");
    auto& be = rep.add("b e_i = 0 (i != n)");
    // ratio (1 + a_{i+1,i}) a_{i,i+1} / ((1 + a_{i,i+1}) a_{i+1,i}), a_ij = 1 + z_i - z_j
    std::array<CheckResult, 2> scaled{CheckResult{"b CR = ratio b (i != n)", 0, 0, std::nullopt},
                                      CheckResult{"b CR = ratio b (i != n)", 0, 0, std::nullopt}};
    for (std::size_t i = 1; i < N; ++i) {
      if (i == n) continue;
      bf.record(generator_matrix<Rational>(m, N, 'f', i).left(b) == b, [&] { return "i=" + std::to_string(i); });
      be.record(generator_matrix<Rational>(m, N, 'e', i).left(b) == zero, [&] { return "i=" + std::to_string(i); });
      for (std::size_t t = 0; t < opt.trials; ++t) {
        auto p = rr.point(2);
        const Rational a12 = 1 + p[0] - p[1], a21 = 1 + p[1] - p[0];
        if (a21 == 0 || a12 == -1 || p[0] - p[1] == -1 || p[0] - p[1] == 2 || p[1] - p[0] == -1 || p[1] - p[0] == 2) {
          --t;
          continue;
        }
        const Rational ratio = (1 + a21) * a12 / ((1 + a12) * a21);
        std::vector<Rational> rb = b;
        for (auto& x : rb) x *= ratio;
        for (int o = 0; o < 2; ++o) {
          auto R = o == 0 ? rcheck_matrix_brauer(N, i, p[0], p[1]) : rcheck_matrix_brauer(N, i, p[1], p[0]);
          scaled[o].record(R.left(b) == rb, [&] { return "i=" + std::to_string(i) + " at " + detail::point_str(p); });
        }
      }
    }
    {
      auto& c = rep.add(scaled[0].name);
      const bool o0 = scaled[0].pass(), o1 = scaled[1].pass();
      c = o1 && !o0 ? scaled[1] : scaled[0];
      if (o0 == o1) c.record(false, [&] { return std::string(o0 ? "both argument orders hold" : "neither argument order holds"); });
      rep.notes.push_back(std::string("b_N scaling holds with ") +
                          (o0 && !o1 ? to_string(Orientation::as_written)
                           : o1 && !o0 ? to_string(Orientation::swapped)
                                       : "no unique argument order"));
    }
    const QPoly w = component_sum(psi, Sector::permutation);
    auto a = [N](std::size_t i, std::size_t j) { return a_factor(N, i, j); };
    const QPoly one(N, Rational(1));
    auto& wt = rep.add("W transposition symmetry (i != n)");
    for (std::size_t i = 1; i < N; ++i) {
      if (i == n) continue;
      wt.record((one + a(i, i + 1)) * a(i + 1, i) * w == (one + a(i + 1, i)) * a(i, i + 1) * swap_adjacent(w, i),
                [&] { return "i=" + std::to_string(i); });
    }
    // z_i <-> z_j is a chain of adjacent swaps; every pair whose order flips contributes its ratio
    auto& wg = rep.add("W exchange within a half");
    std::size_t single_holds = 0, single_tried = 0;
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = i + 1; j <= N; ++j) {
        if ((i <= n) != (j <= n)) continue;
        const QPoly sw = swap_variables(w, i, j);
        QPoly lhs = (one + a(i, j)) * a(j, i), rhs = (one + a(j, i)) * a(i, j);
        ++single_tried;
        if (lhs * w == rhs * sw) ++single_holds;
        for (std::size_t k = i + 1; k < j; ++k) {
          lhs *= (one + a(i, k)) * a(k, i) * (one + a(k, j)) * a(j, k);
          rhs *= (one + a(k, i)) * a(i, k) * (one + a(j, k)) * a(k, j);
        }
        wg.record(lhs * w == rhs * sw, [&] { return "i=" + std::to_string(i) + " j=" + std::to_string(j); });
      }
    rep.notes.push_back("W exchange with the single ratio of (i, j) alone: holds for " + std::to_string(single_holds) +
                        " of " + std::to_string(single_tried) + " same-half pairs (adjacent pairs need nothing more)");
    auto& wr = rep.add("W boundary evenness");
    wr.record(flip_sign(w, 1) == w, [] { return std::string("z_1 -> -z_1"); });
    wr.record(flip_sign(w, N) == w, [] { return std::string("z_N -> -z_N"); });
  }
  return rep;
}

/// Argument orders of the two rows of the double-row operator: the auxiliary strand first
/// crosses the columns left to right with parameter t, turns at the right wall (t -> -t for Brauer,
/// t -> 1/t for TL), and crosses back.
struct TransferConvention {
  bool forward_aux_first = true;    ///< ČR(t, z_k) rather than ČR(z_k, t) on the way out
  bool backward_aux_first = false;  ///< ČR(t', z_k) rather than ČR(z_k, t') on the way back
};

inline std::string to_string(const TransferConvention& c) {
  return std::string("out ") + (c.forward_aux_first ? "CR(t, z_k)" : "CR(z_k, t)") + ", back " +
         (c.backward_aux_first ? "CR(t', z_k)" : "CR(z_k, t')");
}

namespace detail {
/// pi on N points -> (1,2) + pi shifted by two.
inline LinkPattern embed_with_aux(const LinkPattern& pi) {
  std::vector<int> p{2, 1};
  for (int x : pi.partners()) p.push_back(x ? x + 2 : 0);
  return LinkPattern(std::move(p), pi.kind());
}
/// Joins the strands at the two auxiliary points and drops them; a closed loop has weight 1.
inline LinkPattern close_aux(const LinkPattern& sigma) {
  std::vector<int> p = sigma.partners();
  const int a = p[0], b = p[1];
  if (a != 2) {
    if (a) p[a - 1] = b;
    if (b) p[b - 1] = a;
  }
  std::vector<int> out;
  for (std::size_t k = 2; k < p.size(); ++k) out.push_back(p[k] ? p[k] - 2 : 0);
  return LinkPattern(std::move(out), sigma.kind());
}
}  // namespace detail

/// Double-row operator T'(t | z_1..z_N) built from ČR's and trivial reflections at both walls.
template <class C>
PatternMatrix<C> double_row_transfer(const C& t, const std::vector<C>& z, const TransferConvention& conv = {}) {
  const Model m = std::is_same_v<C, Rational> ? Model::brauer : Model::tl;
  const std::size_t N = z.size();
  C tb;
  if constexpr (std::is_same_v<C, Rational>)
    tb = -t;
  else
    tb = t.inverse();
  std::vector<PatternMatrix<C>> steps;
  for (std::size_t k = 1; k <= N; ++k)
    steps.push_back(conv.forward_aux_first ? rcheck_matrix<C>(N + 2, k + 1, t, z[k - 1])
                                           : rcheck_matrix<C>(N + 2, k + 1, z[k - 1], t));
  for (std::size_t k = N; k >= 1; --k)
    steps.push_back(conv.backward_aux_first ? rcheck_matrix<C>(N + 2, k + 1, tb, z[k - 1])
                                            : rcheck_matrix<C>(N + 2, k + 1, z[k - 1], tb));
  PatternMatrix<C> out(m, N);
  const auto& ext = steps.front().basis;
  for (std::size_t c = 0; c < out.dim(); ++c) {
    std::vector<C> x(ext.size(), C(0));
    x[index_of(ext, detail::embed_with_aux(out.basis[c]))] = C(1);
    for (const auto& R : steps) x = R.apply(x);
    for (std::size_t r = 0; r < ext.size(); ++r)
      if (!(x[r] == C(0))) out.at(index_of(out.basis, detail::close_aux(ext[r])), c) += x[r];
  }
  return out;
}

/// Searches the four argument conventions for one under which T'(t) commute and T' Psi = Psi.
template <class C>
Report check_double_row_transfer(const GroundStateVector<C>& psi, const OracleOptions& opt = {}) {
  const std::size_t N = psi.N;
  Report rep{"double-row-transfer", to_string(psi.model), N, opt.seed, {}, {}};
  const detail::ComponentEvaluator<C> eval(psi);
  std::vector<TransferConvention> found;
  CheckResult best_comm{"T'(t) T'(s) = T'(s) T'(t)", 0, 0, std::nullopt}, best_eig{"T' Psi = Psi", 0, 0, std::nullopt};
  for (bool f : {true, false})
    for (bool b : {true, false}) {
      const TransferConvention conv{f, b};
      RandomRationals rr(opt.seed);
      CheckResult comm{best_comm.name, 0, 0, std::nullopt}, eig{best_eig.name, 0, 0, std::nullopt};
      for (std::size_t k = 0; k < opt.trials && comm.failures + eig.failures == 0; ++k) {
        auto p = detail::nonzero_point(rr, N + 2);
        std::vector<C> z(p.begin() + 2, p.end());
        try {
          auto T = double_row_transfer<C>(C(p[0]), z, conv), S = double_row_transfer<C>(C(p[1]), z, conv);
          comm.record(T * S == S * T, [&] { return "at " + detail::point_str(p); });
          auto v = eval(std::vector<Rational>(p.begin() + 2, p.end()));
          eig.record(T.apply(v) == v, [&] { return "at " + detail::point_str(p); });
        } catch (const PoleError&) {
          --k;
        }
      }
      if (comm.pass() && eig.pass()) {
        found.push_back(conv);
        if (found.size() == 1) best_comm = comm, best_eig = eig;
      }
    }
  if (found.empty()) {
    auto& c = rep.add("convention");
    c.record(false, [] { return std::string("convention not found"); });
    return rep;
  }
  rep.checks.push_back(best_comm);
  rep.checks.push_back(best_eig);
  for (const auto& c : found) rep.notes.push_back("double-row convention: " + to_string(c));
  return rep;
}

/// Exchange and covector checks on the vector, then exchange on its odd-size reductions
/// (and, for TL, the even size reached from the odd one) with the same orientation.
template <class C>
Report verify_oracle(const GroundStateVector<C>& psi, const OracleOptions& opt = {}) {
  Report rep{"oracle", to_string(psi.model), psi.N, opt.seed, {}, {}};
  auto ex = check_exchange(psi, opt);
  rep.append(ex.report);
  if (psi.N >= 2 && !ex.orientation) {
    auto& c = rep.add("exchange-orientation");
    c.record(false, [] { return std::string("neither argument order holds at every point"); });
  }
  rep.append(covector_identities(psi, opt));
  if (psi.N < 4) return rep;
  const Orientation o = ex.orientation.value_or(Orientation::swapped);
  if constexpr (std::is_same_v<C, Rational>) {
    auto odd = reduce_to_odd(psi);
    rep.append(check_exchange(odd, opt, o, "odd-").report);
  } else {
    auto r = reduce_odd_tl(psi);
    rep.append(check_exchange(r.odd, opt, o, "odd-").report);
    rep.append(check_exchange(r.even, opt, o, "even-").report);
  }
  return rep;
}

}  // namespace loopstate
