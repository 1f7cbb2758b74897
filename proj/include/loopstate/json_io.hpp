#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "loopstate/polynomial.hpp"

namespace loopstate {

using Json = nlohmann::ordered_json;

namespace detail {
inline Json coeff_to_json(const Rational& c) { return Json::array({c.get_str()}); }
inline Json coeff_to_json(const Cyclotomic& c) { return Json::array({c.re().get_str(), c.om().get_str()}); }

template <class C>
C coeff_from_json(const Json& j, const std::string& where);

template <>
inline Rational coeff_from_json<Rational>(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 1 || !j[0].is_string()) throw SchemaError(where + ": expected [\"num/den\"]");
  try {
    return parse_rational(j[0].get<std::string>());
  } catch (const SchemaError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

template <>
inline Cyclotomic coeff_from_json<Cyclotomic>(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw SchemaError(where + ": expected [\"re\",\"om\"]");
  try {
    return Cyclotomic(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()));
  } catch (const SchemaError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}
}  // namespace detail

template <class C>
Json to_json(const Polynomial<C>& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p) {
    Json e = Json::array();
    for (std::size_t k = 0; k < p.n_vars(); ++k) e.push_back(m[k]);
    terms.push_back(Json{{"e", std::move(e)}, {"c", detail::coeff_to_json(c)}});
  }
  return Json{{"n_vars", p.n_vars()}, {"ring", std::string(RingTraits<C>::name)}, {"terms", std::move(terms)}};
}

/// Strict reader: ring tag, arity, canonical coefficients, ascending graded-lex order.
template <class C>
Polynomial<C> polynomial_from_json(const Json& j, const std::string& where = "polynomial") {
  if (!j.is_object()) throw SchemaError(where + ": expected object");
  if (!j.contains("n_vars") || !j["n_vars"].is_number_integer() || j["n_vars"].get<long>() < 0) throw SchemaError(where + ".n_vars: missing or invalid");
  if (!j.contains("ring") || !j["ring"].is_string()) throw SchemaError(where + ".ring: missing");
  if (j["ring"].get<std::string>() != RingTraits<C>::name)
    throw SchemaError(where + ".ring: expected " + std::string(RingTraits<C>::name));
  if (!j.contains("terms") || !j["terms"].is_array()) throw SchemaError(where + ".terms: missing");
  const std::size_t n = j["n_vars"].get<std::size_t>();
  if (n > kMaxVars) throw SchemaError(where + ".n_vars: too large");
  std::vector<typename Polynomial<C>::Term> terms;
  const auto& arr = j["terms"];
  for (std::size_t t = 0; t < arr.size(); ++t) {
    std::string loc = where + ".terms[" + std::to_string(t) + "]";
    const auto& tj = arr[t];
    if (!tj.is_object() || !tj.contains("e") || !tj.contains("c")) throw SchemaError(loc + ": expected {e, c}");
    const auto& ej = tj["e"];
    if (!ej.is_array() || ej.size() != n) throw SchemaError(loc + ".e: expected " + std::to_string(n) + " exponents");
    Monomial m(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!ej[k].is_number_integer() || ej[k].get<long>() < 0 || ej[k].get<long>() > 255) throw SchemaError(loc + ".e: bad exponent");
      m.set(k, ej[k].get<int>());
    }
    C c = detail::coeff_from_json<C>(tj["c"], loc + ".c");
    if (RingTraits<C>::is_zero(c)) throw SchemaError(loc + ".c: zero coefficient");
    if (!terms.empty() && !(terms.back().first < m)) throw SchemaError(loc + ": terms not in ascending graded-lex order");
    terms.emplace_back(m, std::move(c));
  }
  return Polynomial<C>::from_sorted(n, std::move(terms));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << '\n';
}

}  // namespace loopstate
