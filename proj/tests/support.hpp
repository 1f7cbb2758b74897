#pragma once

#include <random>

#include "loopstate/operators.hpp"

namespace loopstate::testing {

/// Small random polynomial with integer coefficients in [-5,5].
template <class C = Rational>
Polynomial<C> random_poly(std::mt19937_64& rng, std::size_t n_vars, int max_deg, int n_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
  std::vector<typename Polynomial<C>::Term> t;
  for (int k = 0; k < n_terms; ++k) {
    Monomial m(n_vars);
    int budget = deg(rng);
    for (std::size_t v = 0; v < n_vars && budget > 0; ++v) {
      std::uniform_int_distribution<int> e(0, budget);
      int x = e(rng);
      m.set(std::uniform_int_distribution<std::size_t>(0, n_vars - 1)(rng), x);
      budget -= x;
    }
    C c = C(coef(rng));
    if constexpr (std::is_same_v<C, Cyclotomic>) c += Cyclotomic(0, coef(rng));
    t.emplace_back(m, c);
  }
  return Polynomial<C>::from_terms(n_vars, std::move(t));
}

inline QPoly P(std::string_view s, std::size_t n);

}  // namespace loopstate::testing

#include "loopstate/expr.hpp"

namespace loopstate::testing {
inline QPoly P(std::string_view s, std::size_t n) { return parse_polynomial<Rational>(s, n); }
inline WPoly W(std::string_view s, std::size_t n) { return parse_polynomial<Cyclotomic>(s, n); }
}  // namespace loopstate::testing
