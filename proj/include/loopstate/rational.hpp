#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "loopstate/errors.hpp"

namespace loopstate {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw PoleError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "n" or "n/d" with d > 0 and gcd(n, d) = 1.
inline Rational parse_rational(std::string_view s) {
  auto digits = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t k = 0;
    if (allow_sign && t[0] == '-') k = 1;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!digits(num, true)) throw SchemaError("bad rational '" + std::string(s) + "'");
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(Integer{std::string(num)});
    return r;
  }
  std::string_view den = s.substr(slash + 1);
  if (!digits(den, false)) throw SchemaError("bad rational '" + std::string(s) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw SchemaError("zero denominator in '" + std::string(s) + "'");
  if (d == 1) throw SchemaError("non-canonical rational '" + std::string(s) + "'");
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw SchemaError("rational not in lowest terms '" + std::string(s) + "'");
  r.get_num() = n;
  r.get_den() = d;
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer pow_integer(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace loopstate
