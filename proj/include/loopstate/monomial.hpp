#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>

#include "loopstate/errors.hpp"

namespace loopstate {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of at most kMaxVars variables, ordered graded-lexicographically
/// (total degree first, then z1 > z2 > ...).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n_vars) : n_(static_cast<std::uint8_t>(n_vars)) {
    if (n_vars > kMaxVars) throw ArityMismatch("too many variables");
  }
  Monomial(std::size_t n_vars, std::span<const int> e) : Monomial(n_vars) {
    if (e.size() != n_vars) throw ArityMismatch("exponent vector length");
    for (std::size_t i = 0; i < n_vars; ++i) set(i, e[i]);
  }

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }
  int total() const { return total_; }

  void set(std::size_t i, int v) {
    if (v < 0 || v > 255) throw std::overflow_error("exponent out of range");
    total_ = static_cast<std::uint16_t>(total_ - e_[i] + v);
    e_[i] = static_cast<std::uint8_t>(v);
  }
  void swap_vars(std::size_t i, std::size_t j) { std::swap(e_[i], e_[j]); }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      int v = a.e_[i] + b.e_[i];
      if (v > 255) throw std::overflow_error("exponent overflow");
      r.e_[i] = static_cast<std::uint8_t>(v);
    }
    r.total_ = static_cast<std::uint16_t>(a.total_ + b.total_);
    return r;
  }
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
    r.total_ = static_cast<std::uint16_t>(a.total_ - b.total_);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.total_ == b.total_ && a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.total_ != b.total_) return a.total_ <=> b.total_;
    int c = std::memcmp(a.e_.data(), b.e_.data(), kMaxVars);
    return c <=> 0;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto b : e_) h = (h ^ b) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!e_[i]) continue;
      if (!s.empty()) s += '*';
      s += "z" + std::to_string(i + 1);
      if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t total_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace loopstate
