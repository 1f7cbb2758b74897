#pragma once

#include <string>

#include "loopstate/expr.hpp"
#include "loopstate/vector.hpp"

namespace loopstate {

/// Joins an expression given either as a string or as an array of string lines.
inline std::string expression_text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) throw SchemaError(where + ": expected string or array of strings");
  std::string s;
  for (const auto& line : j) {
    if (!line.is_string()) throw SchemaError(where + ": expected string lines");
    s += line.get<std::string>();
    s += '\n';
  }
  return s;
}

/// Vector from a transcribed table {"model","N","components":[{"pattern","expr"}]}.
template <class C>
GroundStateVector<C> fixture_vector(const Json& j) {
  GroundStateVector<C> v;
  v.model = model_from_string(j.at("model").get<std::string>());
  v.N = j.at("N").get<std::size_t>();
  v.patterns = enumerate_patterns(v.N, pattern_kind(v.model));
  v.components.assign(v.patterns.size(), Polynomial<C>(v.N));
  const auto& comps = j.at("components");
  if (comps.size() != v.patterns.size()) throw SchemaError("fixture: component count does not match the pattern count");
  for (std::size_t k = 0; k < comps.size(); ++k) {
    std::string where = "fixture.components[" + std::to_string(k) + "]";
    auto pi = pattern_from_json(comps[k].at("pattern"), pattern_kind(v.model), v.N, where + ".pattern");
    v[pi] = parse_polynomial<C>(expression_text(comps[k].at("expr"), where + ".expr"), v.N);
  }
  return v;
}

template <class C>
Polynomial<C> fixture_polynomial(const Json& j, const std::string& key, std::size_t n_vars) {
  return parse_polynomial<C>(expression_text(j.at(key), "fixture." + key), n_vars);
}

#ifdef LOOPSTATE_FIXTURE_DIR
inline std::string fixture_path(const std::string& name) { return std::string(LOOPSTATE_FIXTURE_DIR) + "/" + name; }
#endif

}  // namespace loopstate
