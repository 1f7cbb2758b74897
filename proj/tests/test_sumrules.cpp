#include <gtest/gtest.h>

#include "loopstate/fixtures.hpp"
#include "loopstate/sumrules.hpp"
#include "support.hpp"

using namespace loopstate;
using loopstate::testing::P;

namespace {

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.pass()) s += c.name + (c.counterexample ? " [" + *c.counterexample + "]" : std::string()) + "\n";
  return s;
}

Matrix<Rational> random_skew(RandomRationals& rr, std::size_t n) {
  Matrix<Rational> a(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a[i][j] = rr.next();
      a[j][i] = -a[i][j];
    }
  return a;
}

}  // namespace

TEST(Matrices, SmallPfaffiansAndDeterminants) {
  Matrix<Rational> two{{0, 3}, {-3, 0}};
  EXPECT_EQ(pfaffian(two), 3);
  Matrix<Rational> four{{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}};
  EXPECT_EQ(pfaffian(four), Rational(1 * 6 - 2 * 5 + 3 * 4));
  EXPECT_EQ(determinant(Matrix<Rational>{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant(Matrix<Rational>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1);
  // a zero pivot forces a swap
  Matrix<Rational> piv{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  EXPECT_EQ(pfaffian(piv), pfaffian_expansion(piv, Rational(1)));
  EXPECT_THROW(pfaffian(Matrix<Rational>{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), std::invalid_argument);
  EXPECT_THROW(pfaffian(Matrix<Rational>{{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Matrices, PfaffianSquaredIsDeterminant) {
  RandomRationals rr(31);
  for (std::size_t n : {2, 4, 6, 8}) {
    for (int t = 0; t < 10; ++t) {
      auto a = random_skew(rr, n);
      Rational pf = pfaffian(a);
      EXPECT_EQ(pf * pf, determinant(a));
      EXPECT_EQ(pf, pfaffian_expansion(a, Rational(1)));
    }
  }
}

TEST(Matrices, ClearedExpansionsAndBareiss) {
  // cleared Pfaffian with constant entries equals prod(den) * Pf(num/den)
  RandomRationals rr(32);
  const std::size_t n = 6;
  auto num = random_skew(rr, n), den = random_skew(rr, n);
  Matrix<Rational> q(n, std::vector<Rational>(n, Rational(0)));
  Rational prod = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (den[i][j] == 0) den[i][j] = 1;
      q[i][j] = num[i][j] / den[i][j];
      q[j][i] = -q[i][j];
      prod *= den[i][j];
    }
  std::function<QPoly(std::size_t, std::size_t)> fn = [&](std::size_t i, std::size_t j) { return QPoly(1, num[i][j]); };
  std::function<QPoly(std::size_t, std::size_t)> fd = [&](std::size_t i, std::size_t j) { return QPoly(1, den[i][j]); };
  EXPECT_EQ(pfaffian_cleared<Rational>(n, 1, fn, fd).constant_term(), prod * pfaffian(q));

  // Cauchy: det(1/(x_i - y_j)) prod(x_i - y_j) = Delta(x) Delta(y) up to the sign convention below
  for (std::size_t m : {2, 3}) {
    const std::size_t nv = 2 * m;
    std::function<QPoly(std::size_t, std::size_t)> cd = [&](std::size_t i, std::size_t j) {
      return detail::vdm_sq(nv, i + 1, m + j + 1);
    };
    QPoly lhs = determinant_cleared<Rational>(m, nv, cd);
    QPoly rhs(nv, Rational(1));
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = i + 1; j <= m; ++j)
        rhs *= detail::vdm_sq(nv, i, j) * detail::vdm_sq(nv, m + j, m + i);
    EXPECT_EQ(lhs, rhs) << m;
  }

  Matrix<QPoly> pm{{P("z1", 2), P("z2", 2), P("1", 2)},
                   {P("z2", 2), P("z1 + 1", 2), P("z1 z2", 2)},
                   {P("2", 2), P("z1", 2), P("z2^2", 2)}};
  QPoly expect = P("z1 ((z1 + 1) z2^2 - z1^2 z2) - z2 (z2^3 - 2 z1 z2) + (z1 z2 - 2 (z1 + 1))", 2);
  EXPECT_EQ(determinant_bareiss(pm, 2), expect);
}

TEST(BrauerSumRules, SymbolicSmallSizes) {
  EXPECT_EQ(brauer_Z_formula(2), QPoly(2, Rational(1)));
  Json fx = read_json_file(fixture_path("brauer-N4.json"));
  const QPoly z4 = fixture_polynomial<Rational>(fx, "sum", 4);
  EXPECT_EQ(brauer_Z_formula(4), z4);
  EXPECT_EQ(brauer_W_formula(2), QPoly(2, Rational(1)));
  EXPECT_EQ(brauer_W_formula(4), component_sum(build_vector(4), Sector::permutation));
  EXPECT_EQ(brauer_W_formula(4).constant_term(), 16);
  EXPECT_EQ(brauer_W_formula(6).constant_term(), 4096);
  EXPECT_EQ(brauer_W_formula(3).constant_term(), 4);
  EXPECT_EQ(brauer_W_formula(5).constant_term(), 256);
  EXPECT_EQ(brauer_W_leading(4), P("(z1^2 - z2^2)^2 (z3^2 - z4^2)^2", 4));
  EXPECT_EQ(brauer_Z_leading(2), QPoly(2, Rational(1)));
  EXPECT_THROW(component_sum(build_vector_tl(4), Sector::permutation), std::invalid_argument);
}

TEST(BrauerSumRules, Points) {
  RandomRationals rr(33);
  auto v4 = build_vector(4);
  for (int t = 0; t < 10; ++t) {
    auto pt = rr.point(4);
    try {
      EXPECT_EQ(brauer_Z_formula(pt), evaluate_rational(v4.sum(), pt));
    } catch (const PoleError&) {
    }
  }
  EXPECT_EQ(brauer_Z_formula(std::vector<Rational>{Rational(3), Rational(5)}), 1);
  EXPECT_THROW(brauer_Z_formula(std::vector<Rational>{Rational(1), Rational(-1)}), PoleError);
}

TEST(BrauerSumRules, HomogeneousSequence) {
  EXPECT_EQ(brauer_homog_entry(0, 1), 1);
  std::vector<std::string> expect{"1", "7", "39", "1771", "57163", "16457953", "3125503009", "5643044005273",
                                  "6357601085989209"};
  for (std::size_t N = 2; N <= 10; ++N) EXPECT_EQ(brauer_Z_homog(N).get_str(), expect[N - 2]) << N;
}

TEST(BrauerSumRules, Reports) {
  for (std::size_t N : {2, 4}) {
    auto rep = verify_sumrules_brauer(build_vector(N));
    EXPECT_TRUE(rep.pass()) << N << "\n" << failures(rep);
  }
  auto bad = build_vector(4);
  bad.components[2] += QPoly(4, Rational(1));
  EXPECT_FALSE(verify_sumrules_brauer(bad).pass());
}

TEST(TlSumRules, SymbolicAndPoints) {
  EXPECT_EQ(tl_Z_det(2), QPoly(2, Rational(1)));
  Json fx = read_json_file(fixture_path("tl-N4.json"));
  EXPECT_EQ(to_cyclotomic(tl_Z_det(4)), fixture_polynomial<Cyclotomic>(fx, "sum", 4));
  RandomRationals rr(34);
  for (int t = 0; t < 20; ++t) {
    auto pt = rr.point(4);
    try {
      Rational v = tl_Z_det(pt);
      EXPECT_EQ(tl_Z_pf_squared(pt), v * v);
    } catch (const PoleError&) {
    }
  }
  EXPECT_EQ(tl_Z_pf_squared(std::vector<Rational>{Rational(2), Rational(5)}), 1);
  EXPECT_EQ(to_cyclotomic(tl_Z_det(6)), build_vector_tl(6).sum());
}

TEST(TlSumRules, AsmCounts) {
  std::vector<int> asm_counts{1, 1, 2, 7, 42, 429, 7436};
  for (std::size_t m = 0; m < asm_counts.size(); ++m) EXPECT_EQ(count_asm(m), asm_counts[m]) << m;
  EXPECT_EQ(count_vsasm(3), 1);
  EXPECT_EQ(count_vsasm(5), 3);
  EXPECT_EQ(count_vsasm(7), 26);
  EXPECT_EQ(count_vsasm(4), 0);
}

TEST(TlSumRules, Reports) {
  for (std::size_t N : {2, 4, 6}) {
    auto rep = verify_sumrules_tl(build_vector_tl(N));
    EXPECT_TRUE(rep.pass()) << N << "\n" << failures(rep);
  }
}

TEST(BrauerSumRules, SectorHomogeneousValues) {
  for (std::size_t N = 1; N <= 5; ++N) EXPECT_EQ(Rational(brauer_W_homog(N)), brauer_W_formula(N).constant_term()) << N;
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(brauer_W_homog(2 * n), detail::pow_int(2, 2 * n * (n - 1))) << n;
  EXPECT_GT(brauer_W_homog(7), 0);
}

TEST(TlSumRules, HomogeneousQuotients) {
  auto h2 = tl_homog(build_vector_tl(2));
  EXPECT_EQ(h2.value, 1);
  EXPECT_EQ(h2.quotient, 1);
  auto h4 = tl_homog(build_vector_tl(4));
  EXPECT_EQ(h4.value, 27);
  EXPECT_EQ(h4.quotient, 3);
  auto h6 = tl_homog(build_vector_tl(6));
  EXPECT_EQ(h6.quotient, count_vsasm(7));
}
