#pragma once

#include <string_view>

#include "loopstate/cyclotomic.hpp"
#include "loopstate/rational.hpp"

namespace loopstate {

template <class C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static constexpr std::string_view name = "Q";
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational from_rational(const Rational& r) { return r; }
  static std::string str(const Rational& c) { return c.get_str(); }
};

template <>
struct RingTraits<Cyclotomic> {
  static constexpr std::string_view name = "Qw";
  static bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
  static Cyclotomic from_rational(const Rational& r) { return Cyclotomic(r); }
  static std::string str(const Cyclotomic& c) { return c.str(); }
};

inline Rational inverse(const Rational& r) {
  if (r == 0) throw PoleError("inverse of zero");
  Rational x = 1 / r;
  return x;
}
inline Cyclotomic inverse(const Cyclotomic& c) { return c.inverse(); }

}  // namespace loopstate
