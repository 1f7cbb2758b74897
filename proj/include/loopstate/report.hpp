#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "loopstate/json_io.hpp"

namespace loopstate {

struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;  ///< first failure only

  bool pass() const { return failures == 0 && trials > 0; }

  /// Records one trial; keeps the first failure's description.
  void record(bool ok, const std::function<std::string()>& describe = {}) {
    ++trials;
    if (ok) return;
    ++failures;
    if (!counterexample) counterexample = describe ? describe() : std::string("trial ") + std::to_string(trials);
  }
};

struct Report {
  std::string suite;
  std::string model;
  std::size_t N = 0;
  std::uint64_t seed = 0;
  std::deque<CheckResult> checks;  // references from add() stay valid
  std::vector<std::string> notes;  ///< conventions selected while checking

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return !checks.empty();
  }
  CheckResult& add(std::string name) {
    checks.push_back(CheckResult{std::move(name), 0, 0, std::nullopt});
    return checks.back();
  }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline Json to_json(const CheckResult& c) {
  return Json{{"name", c.name},
              {"trials", c.trials},
              {"failures", c.failures},
              {"pass", c.pass()},
              {"counterexample", c.counterexample ? Json(*c.counterexample) : Json(nullptr)}};
}

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"suite", r.suite}, {"model", r.model}, {"N", r.N}, {"seed", r.seed},
              {"checks", std::move(checks)}, {"notes", r.notes}};
}

}  // namespace loopstate
