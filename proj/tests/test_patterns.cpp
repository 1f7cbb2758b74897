#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "loopstate/patterns.hpp"

using namespace loopstate;

namespace {

LinkPattern cp(std::vector<int> p) { return LinkPattern(std::move(p), PatternKind::crossing); }
LinkPattern np(std::vector<int> p) { return LinkPattern(std::move(p), PatternKind::noncrossing); }

long double_factorial(long k) { return k <= 1 ? 1 : k * double_factorial(k - 2); }
long catalan(long n) {
  long c = 1;
  for (long k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// N=6 noncrossing patterns in the numbering used by the worked TL example.
const LinkPattern tl6_1 = np({6, 5, 4, 3, 2, 1});
const LinkPattern tl6_2 = np({6, 3, 2, 5, 4, 1});
const LinkPattern tl6_3 = np({4, 3, 2, 1, 6, 5});
const LinkPattern tl6_4 = np({2, 1, 6, 5, 4, 3});
const LinkPattern tl6_5 = np({2, 1, 4, 3, 6, 5});

}  // namespace

TEST(Patterns, Counts) {
  EXPECT_EQ(enumerate_crossing(2).size(), 1u);
  EXPECT_EQ(enumerate_crossing(4).size(), 3u);
  EXPECT_EQ(enumerate_crossing(6).size(), 15u);
  for (long n = 1; n <= 4; ++n) {
    EXPECT_EQ(static_cast<long>(enumerate_crossing(2 * n).size()), double_factorial(2 * n - 1));
    EXPECT_EQ(static_cast<long>(enumerate_crossing(2 * n - 1).size()), double_factorial(2 * n - 1));
  }
  EXPECT_EQ(enumerate_noncrossing(2).size(), 1u);
  EXPECT_EQ(enumerate_noncrossing(4).size(), 2u);
  EXPECT_EQ(enumerate_noncrossing(6).size(), 5u);
  for (long N = 1; N <= 14; ++N) EXPECT_EQ(static_cast<long>(enumerate_noncrossing(N).size()), catalan((N + 1) / 2)) << N;
}

TEST(Patterns, CanonicalOrderAndBase) {
  for (std::size_t N = 1; N <= 8; ++N) {
    for (auto kind : {PatternKind::crossing, PatternKind::noncrossing}) {
      auto all = enumerate_patterns(N, kind);
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      EXPECT_EQ(std::set<LinkPattern>(all.begin(), all.end()).size(), all.size());
    }
  }
  EXPECT_EQ(base_pattern(4, PatternKind::crossing), cp({3, 4, 1, 2}));
  EXPECT_EQ(base_pattern(6, PatternKind::noncrossing), tl6_1);
  auto nc6 = enumerate_noncrossing(6);
  EXPECT_EQ(nc6.front(), tl6_5);
  EXPECT_EQ(nc6.back(), tl6_1);
  EXPECT_EQ(index_of(nc6, tl6_3), 2u);
  EXPECT_THROW(base_pattern(5, PatternKind::crossing), std::invalid_argument);
}

TEST(Patterns, Validation) {
  EXPECT_THROW(cp({2, 2}), std::invalid_argument);
  EXPECT_THROW(cp({2, 1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(np({3, 4, 1, 2}), std::invalid_argument);
  EXPECT_THROW(np({3, 0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(cp({3, 0, 1}));
  EXPECT_EQ(cp({3, 0, 1}).str(), "(1,3)(2,inf)");
}

TEST(Patterns, FAction) {
  const auto p0 = base_pattern(4, PatternKind::crossing);
  EXPECT_EQ(apply_f(1, p0), cp({4, 3, 2, 1}));
  EXPECT_EQ(apply_f(2, p0), cp({2, 1, 4, 3}));
  for (std::size_t N = 2; N <= 7; ++N)
    for (const auto& pi : enumerate_crossing(N))
      for (std::size_t i = 1; i < N; ++i) {
        EXPECT_EQ(apply_f(i, apply_f(i, pi)), pi);
        EXPECT_EQ(apply_f(i, pi) == pi, pi.has_little_arch(i));
      }
  EXPECT_THROW(apply_f(4, p0), IndexOutOfRange);
  EXPECT_THROW(apply_f(1, tl6_1), std::invalid_argument);
}

TEST(Patterns, EAction) {
  EXPECT_EQ(apply_e(3, tl6_2), tl6_1);
  EXPECT_EQ(apply_e(1, cp({2, 1, 0})), cp({2, 1, 0}));
  EXPECT_EQ(apply_e(2, cp({2, 1, 0})), cp({0, 3, 2}));
  EXPECT_EQ(apply_e(1, np({0, 3, 2})), np({2, 1, 0}));
  for (std::size_t N = 2; N <= 8; ++N)
    for (auto kind : {PatternKind::crossing, PatternKind::noncrossing})
      for (const auto& pi : enumerate_patterns(N, kind))
        for (std::size_t i = 1; i < N; ++i) {
          auto e = apply_e(i, pi);
          EXPECT_TRUE(e.has_little_arch(i));
          EXPECT_EQ(e == pi, pi.has_little_arch(i));
        }
}

namespace {
using Gen = std::function<LinkPattern(const LinkPattern&)>;
Gen E(std::size_t i) { return [i](const LinkPattern& p) { return apply_e(i, p); }; }
Gen F(std::size_t i) { return [i](const LinkPattern& p) { return apply_f(i, p); }; }
// Word applied right to left, as an operator product.
LinkPattern act(std::initializer_list<Gen> word, LinkPattern p) {
  std::vector<Gen> w(word);
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = (*it)(p);
  return p;
}
}  // namespace

TEST(Patterns, BrauerRelations) {
  for (std::size_t N = 2; N <= 8; ++N)
    for (const auto& pi : enumerate_crossing(N))
      for (std::size_t i = 1; i < N; ++i) {
        EXPECT_EQ(act({E(i), E(i)}, pi), apply_e(i, pi));
        EXPECT_EQ(act({F(i), F(i)}, pi), pi);
        EXPECT_EQ(act({F(i), E(i)}, pi), apply_e(i, pi));
        EXPECT_EQ(act({E(i), F(i)}, pi), apply_e(i, pi));
        if (i + 1 < N) {
          EXPECT_EQ(act({E(i), E(i + 1), E(i)}, pi), apply_e(i, pi));
          EXPECT_EQ(act({E(i + 1), E(i), E(i + 1)}, pi), apply_e(i + 1, pi));
          EXPECT_EQ(act({F(i), F(i + 1), F(i)}, pi), act({F(i + 1), F(i), F(i + 1)}, pi));
        }
        for (std::size_t j = i + 2; j < N; ++j) {
          EXPECT_EQ(act({E(i), E(j)}, pi), act({E(j), E(i)}, pi));
          EXPECT_EQ(act({E(i), F(j)}, pi), act({F(j), E(i)}, pi));
          EXPECT_EQ(act({F(i), E(j)}, pi), act({E(j), F(i)}, pi));
          EXPECT_EQ(act({F(i), F(j)}, pi), act({F(j), F(i)}, pi));
        }
      }
}

TEST(Patterns, TemperleyLiebRelations) {
  for (std::size_t N = 2; N <= 12; ++N)
    for (const auto& pi : enumerate_noncrossing(N))
      for (std::size_t i = 1; i < N; ++i) {
        auto ei = apply_e(i, pi);
        EXPECT_EQ(apply_e(i, ei), ei);
        if (i + 1 < N) {
          EXPECT_EQ(act({E(i), E(i + 1), E(i)}, pi), ei);
          EXPECT_EQ(act({E(i + 1), E(i), E(i + 1)}, pi), apply_e(i + 1, pi));
        }
        for (std::size_t j = i + 2; j < N; ++j) EXPECT_EQ(act({E(i), E(j)}, pi), act({E(j), E(i)}, pi));
      }
}

TEST(Patterns, CrossingNumber) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(crossing_number(base_pattern(2 * n, PatternKind::crossing)), n * (n - 1) / 2);
  EXPECT_EQ(crossing_number(apply_f(1, base_pattern(4, PatternKind::crossing))), 0);
  for (const auto& pi : enumerate_noncrossing(8)) EXPECT_EQ(crossing_number(pi), 0);
  // noncrossing patterns are exactly the zero-crossing ones
  int zero = 0;
  for (const auto& pi : enumerate_crossing(8)) zero += crossing_number(pi) == 0;
  EXPECT_EQ(zero, 14);
}

TEST(Patterns, InsertArch) {
  EXPECT_EQ(insert_arch(1, cp({})), cp({2, 1}));
  EXPECT_EQ(insert_arch(2, cp({2, 1})), cp({4, 3, 2, 1}));
  EXPECT_EQ(insert_arch(2, cp({0})), cp({0, 3, 2}));
  EXPECT_THROW(insert_arch(4, cp({2, 1})), IndexOutOfRange);
  for (std::size_t N = 0; N <= 6; ++N)
    for (auto kind : {PatternKind::crossing, PatternKind::noncrossing})
      for (const auto& pi : enumerate_patterns(N, kind))
        for (std::size_t i = 1; i <= N + 1; ++i) {
          auto big = insert_arch(i, pi);
          EXPECT_TRUE(big.has_little_arch(i));
          EXPECT_EQ(remove_arch(i, big), pi);
          EXPECT_EQ(big.kind(), kind);
        }
}

TEST(Patterns, Reflect) {
  for (std::size_t N = 1; N <= 8; ++N)
    for (auto kind : {PatternKind::crossing, PatternKind::noncrossing})
      for (const auto& pi : enumerate_patterns(N, kind)) EXPECT_EQ(reflect(reflect(pi)), pi);
  for (std::size_t N = 2; N <= 10; N += 2) {
    EXPECT_EQ(reflect(base_pattern(N, PatternKind::crossing)), base_pattern(N, PatternKind::crossing));
    EXPECT_EQ(reflect(base_pattern(N, PatternKind::noncrossing)), base_pattern(N, PatternKind::noncrossing));
  }
  EXPECT_EQ(reflect(cp({2, 1, 4, 3})), cp({2, 1, 4, 3}));
  EXPECT_EQ(reflect(tl6_3), tl6_4);
}

TEST(Patterns, PermutationSector) {
  auto s = permutation_sector(base_pattern(4, PatternKind::crossing));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (std::vector<int>{1, 2}));
  EXPECT_FALSE(permutation_sector(cp({2, 1, 4, 3})));
  int count = 0;
  for (const auto& pi : enumerate_crossing(4)) count += permutation_sector(pi).has_value();
  EXPECT_EQ(count, 2);
  count = 0;
  for (const auto& pi : enumerate_crossing(8)) count += permutation_sector(pi).has_value();
  EXPECT_EQ(count, 24);
}

TEST(Dyck, BoxesAndProfile) {
  EXPECT_EQ(box_count(fundamental_pattern(10)), 0);
  EXPECT_EQ(box_count(tl6_1), 3);
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_noncrossing(2 * n);
    const auto p0 = base_pattern(2 * n, PatternKind::noncrossing);
    for (const auto& pi : all) {
      int b = box_count(pi);
      EXPECT_LE(b, n * (n - 1) / 2);
      EXPECT_EQ(b == n * (n - 1) / 2, pi == p0);
      auto d = dyck_profile(pi);
      int sum_h = 0;
      for (int h : d.heights) sum_h += h;
      EXPECT_EQ(b, (sum_h - n) / 2);
      EXPECT_EQ(static_cast<int>(d.boxes().size()), b);
    }
  }
  EXPECT_THROW(dyck_profile(np({2, 1, 0})), std::invalid_argument);
  EXPECT_THROW(dyck_profile(cp({3, 4, 1, 2})), std::invalid_argument);
  EXPECT_THROW(make_dyck_path({-1, 1}), std::invalid_argument);
  EXPECT_THROW(make_dyck_path({1, 1}), std::invalid_argument);
}

TEST(Dyck, Bijection) {
  for (std::size_t N = 2; N <= 12; N += 2) {
    std::set<std::vector<int>> words;
    for (const auto& pi : enumerate_noncrossing(N)) {
      auto d = dyck_profile(pi);
      EXPECT_EQ(from_dyck(d), pi);
      EXPECT_EQ(dyck_profile(from_dyck(d)), d);
      words.insert(d.steps);
    }
    // every Dyck word of length N is hit
    std::size_t total = 0;
    const std::size_t n = N;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> st(n);
      int h = 0;
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        st[k] = (mask >> k) & 1 ? 1 : -1;
        h += st[k];
        ok = h >= 0;
      }
      if (ok && h == 0) {
        ++total;
        EXPECT_TRUE(words.count(st));
        EXPECT_EQ(dyck_profile(from_dyck(make_dyck_path(st))).steps, st);
      }
    }
    EXPECT_EQ(total, words.size());
  }
}

TEST(Dyck, WordReconstructsPattern) {
  // e3 e2 e4 e6 on five little arches
  LinkPattern pi = fundamental_pattern(10);
  for (std::size_t i : {6, 4, 2, 3}) pi = apply_e(i, pi);
  EXPECT_EQ(pi, np({8, 5, 4, 3, 2, 7, 6, 1, 10, 9}));
  auto w = dyck_word(pi);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(std::multiset<std::size_t>(w.begin(), w.begin() + 3), (std::multiset<std::size_t>{2, 4, 6}));
  EXPECT_EQ(w.back(), 3u);
  auto boxes = dyck_profile(pi).boxes();
  EXPECT_EQ(boxes, (std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 2}, {6, 2}}));

  for (std::size_t N = 2; N <= 12; N += 2)
    for (const auto& target : enumerate_noncrossing(N)) {
      LinkPattern p = fundamental_pattern(N);
      for (std::size_t i : dyck_word(target)) p = apply_e(i, p);
      EXPECT_EQ(p, target);
    }
}

TEST(Dyck, RemovableBox) {
  for (std::size_t N = 2; N <= 12; N += 2)
    for (const auto& pi : enumerate_noncrossing(N)) {
      auto d = dyck_profile(pi);
      for (std::size_t i : d.removable_columns()) {
        auto smaller = from_dyck(d.with_box_removed(i));
        EXPECT_EQ(apply_e(i, smaller), pi);
        EXPECT_EQ(box_count(smaller), box_count(pi) - 1);
      }
      for (std::size_t i : d.addable_columns()) {
        auto bigger = from_dyck(d.with_box_added(i));
        EXPECT_EQ(apply_e(i, pi), bigger);
        EXPECT_EQ(box_count(bigger), box_count(pi) + 1);
      }
      if (!(pi == fundamental_pattern(N))) {
        EXPECT_FALSE(d.removable_columns().empty());
      }
    }
}

TEST(Antecedents, Examples) {
  auto all = enumerate_noncrossing(6);
  EXPECT_EQ(antecedents(tl6_1, 3, all), (std::vector<LinkPattern>{tl6_2}));
  auto a = antecedents(tl6_5, 1, all);
  EXPECT_EQ(std::set<LinkPattern>(a.begin(), a.end()), (std::set<LinkPattern>{tl6_1, tl6_3}));
  EXPECT_EQ(a.front(), tl6_3);
  EXPECT_EQ(antecedents(tl6_2, 4, all), (std::vector<LinkPattern>{tl6_3, tl6_1}));
  EXPECT_TRUE(antecedents(tl6_1, 1, all).empty());
  EXPECT_TRUE(antecedents(tl6_2, 5).empty());
}

TEST(Antecedents, SmallestIsRemovedBoxAndContainedInAll) {
  for (std::size_t N = 2; N <= 12; N += 2) {
    auto all = enumerate_noncrossing(N);
    for (const auto& pi : all) {
      auto d = dyck_profile(pi);
      auto removable = d.removable_columns();
      for (std::size_t i = 1; i < N; ++i) {
        auto ante = antecedents(pi, i, all);
        bool peak = d.steps[i - 1] == 1 && d.steps[i] == -1;
        bool removable_peak = std::find(removable.begin(), removable.end(), i) != removable.end();
        if (!peak) {
          EXPECT_TRUE(ante.empty()) << pi.str() << " i=" << i;
        }
        if (removable_peak) {
          EXPECT_FALSE(ante.empty());
        }
        if (!removable_peak) continue;
        EXPECT_EQ(ante.front(), from_dyck(d.with_box_removed(i)));
        auto h0 = dyck_profile(ante.front()).heights;
        for (std::size_t k = 1; k < ante.size(); ++k) {
          auto h = dyck_profile(ante[k]).heights;
          EXPECT_GT(box_count(ante[k]), box_count(ante.front()));
          for (std::size_t c = 0; c < h.size(); ++c) EXPECT_GE(h[c], h0[c]);
        }
      }
    }
  }
}
