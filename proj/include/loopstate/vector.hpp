#pragma once

#include <string>
#include <vector>

#include "loopstate/json_io.hpp"
#include "loopstate/patterns.hpp"

namespace loopstate {

enum class Model { brauer, tl };

inline const char* to_string(Model m) { return m == Model::brauer ? "brauer" : "tl"; }

inline Model model_from_string(const std::string& s) {
  if (s == "brauer") return Model::brauer;
  if (s == "tl") return Model::tl;
  throw SchemaError("unknown model '" + s + "'");
}

inline PatternKind pattern_kind(Model m) { return m == Model::brauer ? PatternKind::crossing : PatternKind::noncrossing; }

/// Components indexed like the canonically sorted pattern list.
template <class C>
struct GroundStateVector {
  Model model = Model::brauer;
  std::size_t N = 0;
  std::vector<LinkPattern> patterns;
  std::vector<Polynomial<C>> components;

  std::size_t size() const { return patterns.size(); }
  std::size_t index(const LinkPattern& pi) const { return index_of(patterns, pi); }
  const Polynomial<C>& operator[](const LinkPattern& pi) const { return components[index(pi)]; }
  Polynomial<C>& operator[](const LinkPattern& pi) { return components[index(pi)]; }

  Polynomial<C> sum() const {
    Polynomial<C> s(N);
    for (const auto& c : components) s += c;
    return s;
  }

  friend bool operator==(const GroundStateVector& a, const GroundStateVector& b) {
    return a.model == b.model && a.N == b.N && a.patterns == b.patterns && a.components == b.components;
  }
};

inline Json pattern_to_json(const LinkPattern& pi) { return Json(pi.partners()); }

inline LinkPattern pattern_from_json(const Json& j, PatternKind kind, std::size_t N, const std::string& where) {
  if (!j.is_array() || j.size() != N) throw SchemaError(where + ": expected partner array of length " + std::to_string(N));
  std::vector<int> p;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SchemaError(where + ": partner entries must be integers");
    p.push_back(x.get<int>());
  }
  try {
    return LinkPattern(std::move(p), kind);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

template <class C>
Json to_json(const GroundStateVector<C>& v) {
  Json pats = Json::array(), comps = Json::array();
  for (const auto& p : v.patterns) pats.push_back(pattern_to_json(p));
  for (const auto& c : v.components) comps.push_back(to_json(c));
  return Json{{"model", to_string(v.model)},
              {"N", v.N},
              {"ring", std::string(RingTraits<C>::name)},
              {"patterns", std::move(pats)},
              {"components", std::move(comps)}};
}

template <class C>
GroundStateVector<C> vector_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("vector: expected object");
  for (const char* k : {"model", "N", "patterns", "components"})
    if (!j.contains(k)) throw SchemaError(std::string("vector.") + k + ": missing");
  if (!j["model"].is_string()) throw SchemaError("vector.model: expected string");
  if (!j["N"].is_number_integer() || j["N"].get<long>() < 0 || j["N"].get<long>() > static_cast<long>(kMaxVars))
    throw SchemaError("vector.N: invalid");
  if (j.contains("ring") && j["ring"] != RingTraits<C>::name)
    throw SchemaError("vector.ring: expected " + std::string(RingTraits<C>::name));
  GroundStateVector<C> v;
  v.model = model_from_string(j["model"].get<std::string>());
  v.N = j["N"].get<std::size_t>();
  const auto& pj = j["patterns"];
  const auto& cj = j["components"];
  if (!pj.is_array() || !cj.is_array() || pj.size() != cj.size())
    throw SchemaError("vector: patterns and components must be arrays of equal length");
  for (std::size_t k = 0; k < pj.size(); ++k) {
    v.patterns.push_back(pattern_from_json(pj[k], pattern_kind(v.model), v.N, "vector.patterns[" + std::to_string(k) + "]"));
    auto p = polynomial_from_json<C>(cj[k], "vector.components[" + std::to_string(k) + "]");
    if (p.n_vars() != v.N) throw SchemaError("vector.components[" + std::to_string(k) + "].n_vars: expected N");
    v.components.push_back(std::move(p));
  }
  if (!std::is_sorted(v.patterns.begin(), v.patterns.end()) ||
      std::adjacent_find(v.patterns.begin(), v.patterns.end()) != v.patterns.end())
    throw SchemaError("vector.patterns: not in canonical order");
  if (v.patterns != enumerate_patterns(v.N, pattern_kind(v.model)))
    throw SchemaError("vector.patterns: does not list every pattern of size N");
  return v;
}

}  // namespace loopstate
