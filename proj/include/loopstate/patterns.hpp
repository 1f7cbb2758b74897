#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopstate/errors.hpp"

namespace loopstate {

enum class PatternKind { crossing, noncrossing };

inline const char* to_string(PatternKind k) { return k == PatternKind::crossing ? "crossing" : "noncrossing"; }

/// Pairing of N boundary points; partner(i) is 1-based, 0 meaning the point runs to infinity (odd N).
class LinkPattern {
 public:
  LinkPattern() = default;
  LinkPattern(std::vector<int> partner, PatternKind kind) : p_(std::move(partner)), kind_(kind) { validate(); }

  std::size_t size() const { return p_.size(); }
  PatternKind kind() const { return kind_; }
  int partner(std::size_t i) const { return p_.at(i - 1); }
  const std::vector<int>& partners() const { return p_; }

  bool has_arch(std::size_t i, std::size_t j) const {
    return i >= 1 && i <= p_.size() && p_[i - 1] == static_cast<int>(j);
  }
  bool has_little_arch(std::size_t i) const { return has_arch(i, i + 1); }

  friend bool operator==(const LinkPattern& a, const LinkPattern& b) { return a.p_ == b.p_; }
  friend auto operator<=>(const LinkPattern& a, const LinkPattern& b) { return a.p_ <=> b.p_; }

  /// "(1,3)(2,4)" with "(k,inf)" for the open strand.
  std::string str() const {
    std::string s;
    for (std::size_t i = 1; i <= p_.size(); ++i) {
      int j = p_[i - 1];
      if (j == 0)
        s += "(" + std::to_string(i) + ",inf)";
      else if (j > static_cast<int>(i))
        s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return s.empty() ? "()" : s;
  }

 private:
  void validate() const {
    const int n = static_cast<int>(p_.size());
    int open = 0;
    for (int i = 1; i <= n; ++i) {
      int j = p_[i - 1];
      if (j == 0) {
        ++open;
        continue;
      }
      if (j < 1 || j > n || j == i || p_[j - 1] != i) throw std::invalid_argument("partner array is not an involution");
    }
    if (open != n % 2) throw std::invalid_argument("wrong number of points at infinity");
    if (kind_ == PatternKind::noncrossing) {
      for (int i = 1; i <= n; ++i) {
        int j = p_[i - 1];
        if (j == 0) {
          // no arch may pass over the open strand
          for (int k = 1; k < i; ++k)
            if (p_[k - 1] > i) throw std::invalid_argument("arch crosses the open strand");
          continue;
        }
        if (j < i) continue;
        for (int k = i + 1; k < j; ++k) {
          int l = p_[k - 1];
          if (l == 0 || l > j || l < i) throw std::invalid_argument("pattern is not noncrossing");
        }
      }
    }
  }

  std::vector<int> p_;
  PatternKind kind_ = PatternKind::crossing;
};

namespace detail {
inline void matchings(std::vector<int>& p, bool noncrossing, bool allow_open, std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(p.size());
  int i = 0;
  while (i < n && p[i] != -1) ++i;
  if (i == n) {
    out.push_back(p);
    return;
  }
  if (allow_open) {
    bool ok = true;
    if (noncrossing)
      for (int k = 0; k < i; ++k)
        if (p[k] > i + 1) ok = false;
    if (ok) {
      p[i] = 0;
      matchings(p, noncrossing, false, out);
      p[i] = -1;
    }
  }
  for (int j = i + 1; j < n; ++j) {
    if (p[j] != -1) continue;
    if (noncrossing) {
      // points strictly between i and j must be pairable among themselves
      bool ok = (j - i - 1) % 2 == 0;
      for (int k = i + 1; k < j && ok; ++k)
        if (p[k] != -1) ok = false;
      if (!ok) continue;
    }
    p[i] = j + 1;
    p[j] = i + 1;
    matchings(p, noncrossing, allow_open, out);
    p[i] = p[j] = -1;
  }
}

inline std::vector<LinkPattern> enumerate(std::size_t n, PatternKind kind) {
  std::vector<int> p(n, -1);
  std::vector<std::vector<int>> raw;
  matchings(p, kind == PatternKind::noncrossing, n % 2 == 1, raw);
  std::vector<LinkPattern> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r), kind);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace detail

inline std::vector<LinkPattern> enumerate_crossing(std::size_t n) { return detail::enumerate(n, PatternKind::crossing); }
inline std::vector<LinkPattern> enumerate_noncrossing(std::size_t n) { return detail::enumerate(n, PatternKind::noncrossing); }
inline std::vector<LinkPattern> enumerate_patterns(std::size_t n, PatternKind kind) { return detail::enumerate(n, kind); }

/// i <-> i+n (crossing) or i <-> 2n+1-i (noncrossing); even n only.
inline LinkPattern base_pattern(std::size_t n_points, PatternKind kind) {
  if (n_points % 2) throw std::invalid_argument("base pattern needs even N");
  const int n = static_cast<int>(n_points / 2);
  std::vector<int> p(n_points);
  for (int i = 1; i <= 2 * n; ++i) {
    if (kind == PatternKind::crossing)
      p[i - 1] = i <= n ? i + n : i - n;
    else
      p[i - 1] = 2 * n + 1 - i;
  }
  return LinkPattern(std::move(p), kind);
}

/// Index of pi in a canonically sorted basis.
inline std::size_t index_of(const std::vector<LinkPattern>& basis, const LinkPattern& pi) {
  auto it = std::lower_bound(basis.begin(), basis.end(), pi);
  if (it == basis.end() || !(*it == pi)) throw std::out_of_range("pattern not in basis: " + pi.str());
  return static_cast<std::size_t>(it - basis.begin());
}

namespace detail {
inline void check_generator_index(const LinkPattern& pi, std::size_t i) {
  if (i < 1 || i + 1 > pi.size()) throw IndexOutOfRange("generator index " + std::to_string(i));
}
}  // namespace detail

/// f_i: exchanges the endpoints of the strands at i and i+1.
inline LinkPattern apply_f(std::size_t i, const LinkPattern& pi) {
  detail::check_generator_index(pi, i);
  if (pi.kind() != PatternKind::crossing) throw std::invalid_argument("f_i acts on crossing patterns only");
  if (pi.has_little_arch(i)) return pi;
  std::vector<int> p = pi.partners();
  int a = p[i - 1], b = p[i];
  p[i - 1] = b;
  p[i] = a;
  if (a) p[a - 1] = static_cast<int>(i + 1);
  if (b) p[b - 1] = static_cast<int>(i);
  return LinkPattern(std::move(p), pi.kind());
}

/// e_i: joins the strands at i and i+1 and adds the arch (i, i+1); closed loops are dropped.
inline LinkPattern apply_e(std::size_t i, const LinkPattern& pi) {
  detail::check_generator_index(pi, i);
  if (pi.has_little_arch(i)) return pi;
  std::vector<int> p = pi.partners();
  int a = p[i - 1], b = p[i];
  if (a && b) {
    p[a - 1] = b;
    p[b - 1] = a;
  } else if (a) {
    p[a - 1] = 0;
  } else if (b) {
    p[b - 1] = 0;
  }
  p[i - 1] = static_cast<int>(i + 1);
  p[i] = static_cast<int>(i);
  return LinkPattern(std::move(p), pi.kind());
}

inline int crossing_number(const LinkPattern& pi) {
  int c = 0;
  const int n = static_cast<int>(pi.size());
  for (int i = 1; i <= n; ++i) {
    int j = pi.partner(i);
    if (j <= i) continue;
    for (int k = i + 1; k < j; ++k) {
      int l = pi.partner(k);
      if (l > j) ++c;
    }
  }
  return c;
}

/// phi_i: new arch at positions (i, i+1) of the enlarged pattern; old points >= i move up by 2.
inline LinkPattern insert_arch(std::size_t i, const LinkPattern& pi) {
  const std::size_t n = pi.size() + 2;
  if (i < 1 || i + 1 > n) throw IndexOutOfRange("insert_arch slot " + std::to_string(i));
  auto shift = [i](int k) { return k == 0 ? 0 : (k >= static_cast<int>(i) ? k + 2 : k); };
  std::vector<int> p(n);
  for (std::size_t k = 1; k <= pi.size(); ++k) p[shift(static_cast<int>(k)) - 1] = shift(pi.partner(k));
  p[i - 1] = static_cast<int>(i + 1);
  p[i] = static_cast<int>(i);
  return LinkPattern(std::move(p), pi.kind());
}

/// Inverse of insert_arch; requires the little arch (i, i+1).
inline LinkPattern remove_arch(std::size_t i, const LinkPattern& pi) {
  if (!pi.has_little_arch(i)) throw std::invalid_argument("no little arch at " + std::to_string(i));
  auto shift = [i](int k) { return k == 0 ? 0 : (k > static_cast<int>(i + 1) ? k - 2 : k); };
  std::vector<int> p;
  for (std::size_t k = 1; k <= pi.size(); ++k) {
    if (k == i || k == i + 1) continue;
    p.push_back(shift(pi.partner(k)));
  }
  return LinkPattern(std::move(p), pi.kind());
}

/// rho: i -> N+1-i.
inline LinkPattern reflect(const LinkPattern& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<int> p(n);
  for (int i = 1; i <= n; ++i) {
    int j = pi.partner(i);
    p[n - i] = j == 0 ? 0 : n + 1 - j;
  }
  return LinkPattern(std::move(p), pi.kind());
}

/// sigma with i <-> n + sigma(i) when every arch joins {1..n} to {n+1..2n}.
inline std::optional<std::vector<int>> permutation_sector(const LinkPattern& pi) {
  if (pi.size() % 2) throw std::invalid_argument("permutation sector needs even N");
  const int n = static_cast<int>(pi.size() / 2);
  std::vector<int> s(n);
  for (int i = 1; i <= n; ++i) {
    int j = pi.partner(i);
    if (j <= n) return std::nullopt;
    s[i - 1] = j - n;
  }
  return s;
}

/// Up/down path of a noncrossing pattern with its box decomposition.
struct DyckPath {
  std::vector<int> steps;    ///< +1 opens an arch, -1 closes one
  std::vector<int> heights;  ///< heights[k] after k steps, size N+1

  std::size_t size() const { return steps.size(); }
  /// Boxes in column i (1 <= i <= N-1): (h_i - (i mod 2)) / 2.
  int boxes_in_column(std::size_t i) const { return (heights[i] - static_cast<int>(i % 2)) / 2; }
  int box_count() const {
    int b = 0;
    for (std::size_t i = 1; i < steps.size(); ++i) b += boxes_in_column(i);
    return b;
  }
  /// (column, height of the box's top corner) cells; a box rests on the boxes of lower height.
  std::vector<std::pair<int, int>> boxes() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 1; i < steps.size(); ++i)
      for (int l = 1; l <= boxes_in_column(i); ++l) out.emplace_back(static_cast<int>(i), static_cast<int>(i % 2) + 2 * l);
    return out;
  }
  /// Valleys: a box fits at column i.
  std::vector<std::size_t> addable_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < steps.size(); ++i)
      if (steps[i - 1] == -1 && steps[i] == 1) out.push_back(i);
    return out;
  }
  /// Peaks standing on at least one box.
  std::vector<std::size_t> removable_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < steps.size(); ++i)
      if (steps[i - 1] == 1 && steps[i] == -1 && heights[i] >= 2) out.push_back(i);
    return out;
  }
  DyckPath with_box_added(std::size_t i) const {
    DyckPath d = *this;
    d.steps[i - 1] = 1;
    d.steps[i] = -1;
    d.heights[i] += 2;
    return d;
  }
  DyckPath with_box_removed(std::size_t i) const {
    DyckPath d = *this;
    d.steps[i - 1] = -1;
    d.steps[i] = 1;
    d.heights[i] -= 2;
    return d;
  }
  friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

inline DyckPath make_dyck_path(std::vector<int> steps) {
  DyckPath d;
  d.heights.assign(steps.size() + 1, 0);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k] != 1 && steps[k] != -1) throw std::invalid_argument("Dyck steps must be +-1");
    d.heights[k + 1] = d.heights[k] + steps[k];
    if (d.heights[k + 1] < 0) throw std::invalid_argument("Dyck path goes below zero");
  }
  if (d.heights.back() != 0) throw std::invalid_argument("Dyck path does not return to zero");
  d.steps = std::move(steps);
  return d;
}

inline DyckPath dyck_profile(const LinkPattern& pi) {
  if (pi.kind() != PatternKind::noncrossing) throw std::invalid_argument("Dyck paths encode noncrossing patterns");
  if (pi.size() % 2) throw std::invalid_argument("Dyck profile needs even N");
  std::vector<int> steps(pi.size());
  for (std::size_t i = 1; i <= pi.size(); ++i) steps[i - 1] = pi.partner(i) > static_cast<int>(i) ? 1 : -1;
  return make_dyck_path(std::move(steps));
}

inline LinkPattern from_dyck(const DyckPath& d) {
  std::vector<int> p(d.size()), stack;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d.steps[k] == 1) {
      stack.push_back(static_cast<int>(k + 1));
    } else {
      int o = stack.back();
      stack.pop_back();
      p[k] = o;
      p[o - 1] = static_cast<int>(k + 1);
    }
  }
  return LinkPattern(std::move(p), PatternKind::noncrossing);
}

inline int box_count(const LinkPattern& pi) { return dyck_profile(pi).box_count(); }

/// All noncrossing arches-only-little pattern (1,2)(3,4)...
inline LinkPattern fundamental_pattern(std::size_t n_points) {
  std::vector<int> p(n_points);
  for (std::size_t i = 1; i <= n_points; i += 2) {
    p[i - 1] = static_cast<int>(i + 1);
    p[i] = static_cast<int>(i);
  }
  return LinkPattern(std::move(p), PatternKind::noncrossing);
}

/// e-indices to apply to the fundamental pattern, lowest box first.
inline std::vector<std::size_t> dyck_word(const LinkPattern& pi) {
  auto cells = dyck_profile(pi).boxes();
  std::stable_sort(cells.begin(), cells.end(), [](auto a, auto b) { return a.second < b.second; });
  std::vector<std::size_t> w;
  for (auto [col, lvl] : cells) w.push_back(static_cast<std::size_t>(col));
  return w;
}

/// pi' != pi with e_i pi' = pi, ordered by box count (then canonically).
inline std::vector<LinkPattern> antecedents(const LinkPattern& pi, std::size_t i, const std::vector<LinkPattern>& all) {
  std::vector<LinkPattern> out;
  if (!pi.has_little_arch(i)) return out;
  for (const auto& s : all)
    if (!(s == pi) && apply_e(i, s) == pi) out.push_back(s);
  if (pi.kind() == PatternKind::noncrossing && pi.size() % 2 == 0)
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return box_count(a) < box_count(b); });
  return out;
}

inline std::vector<LinkPattern> antecedents(const LinkPattern& pi, std::size_t i) {
  return antecedents(pi, i, enumerate_patterns(pi.size(), pi.kind()));
}

}  // namespace loopstate
