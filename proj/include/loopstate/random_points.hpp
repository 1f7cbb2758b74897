#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "loopstate/rational.hpp"

namespace loopstate {

/// Seeded source of small rationals: numerator in [-19, 19], denominator in {1, 2, 3, 5, 7}.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    static constexpr std::array<int, 5> dens{1, 2, 3, 5, 7};
    std::uniform_int_distribution<int> num(-19, 19);
    std::uniform_int_distribution<std::size_t> den(0, dens.size() - 1);
    return make_rational(num(rng_), dens[den(rng_)]);
  }

  std::vector<Rational> point(std::size_t n) {
    std::vector<Rational> p(n);
    for (auto& x : p) x = next();
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

namespace detail {
inline std::string point_str(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + p[k].get_str();
  return s + ")";
}
}  // namespace detail

}  // namespace loopstate
