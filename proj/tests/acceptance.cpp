// Acceptance run: one PASS/FAIL line per criterion, with wall time against its budget.
#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>

#include "loopstate/brauer_verify.hpp"
#include "loopstate/fixtures.hpp"
#include "loopstate/oracle.hpp"
#include "loopstate/sumrules.hpp"
#include "loopstate/tl_verify.hpp"

using namespace loopstate;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects failure reasons for one criterion.
struct Verdict {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void expect(const Report& r, std::size_t min_trials = 1) {
    if (r.checks.empty()) failures.push_back(r.suite + " N=" + std::to_string(r.N) + ": no checks ran");
    for (const auto& c : r.checks) {
      if (!c.pass())
        failures.push_back(r.suite + " N=" + std::to_string(r.N) + ": " + c.name +
                           (c.counterexample ? " (" + *c.counterexample + ")" : std::string()));
      else if (c.trials < min_trials)
        failures.push_back(r.suite + ": " + c.name + " ran " + std::to_string(c.trials) + " trials");
    }
  }
  void expect_check(const Report& r, const std::string& name, std::size_t min_trials = 1) {
    const auto* c = r.find(name);
    expect(c && c->pass() && c->trials >= min_trials, r.suite + " N=" + std::to_string(r.N) + ": check " + name);
  }
};

/// Vectors shared between criteria; the first criterion to ask pays for the build.
struct Built {
  std::map<std::size_t, GroundStateVector<Rational>> brauer;
  std::map<std::size_t, GroundStateVector<Cyclotomic>> tl;

  const GroundStateVector<Rational>& b(std::size_t N) {
    auto it = brauer.find(N);
    if (it == brauer.end()) it = brauer.emplace(N, build_vector(N)).first;
    return it->second;
  }
  const GroundStateVector<Cyclotomic>& t(std::size_t N) {
    auto it = tl.find(N);
    if (it == tl.end()) it = tl.emplace(N, build_vector_tl(N)).first;
    return it->second;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Verdict&, Built&)> run;
};

Json fixture(const std::string& name) { return read_json_file(fixture_path(name)); }

std::vector<Criterion> criteria() {
  std::vector<Criterion> cs;

  cs.push_back({1, "brauer N=4 matches the transcribed components", 10, [](Verdict& v, Built& b) {
                  const auto& psi = b.b(4);
                  v.expect(psi == fixture_vector<Rational>(fixture("brauer-N4.json")), "components differ from fixture");
                }});

  cs.push_back({2, "brauer N=6 base component and its value at 0", 120, [](Verdict& v, Built&) {
                  const Json j = fixture("brauer-N6-psi0.json");
                  const QPoly p = psi0(6);
                  v.expect(p == fixture_polynomial<Rational>(j, "expr", 6), "psi0(6) differs from fixture");
                  v.expect(p.constant_term() == 129, "psi0(6)(0) = " + p.constant_term().get_str());
                  v.expect(parse_rational(j.at("homogeneous_value").get<std::string>()) == 129, "fixture value at 0");
                }});

  cs.push_back({3, "brauer Z(4) equals the fixture sum and the Pfaffian form", 60, [](Verdict& v, Built& b) {
                  const QPoly z = b.b(4).sum();
                  v.expect(z == fixture_polynomial<Rational>(fixture("brauer-N4.json"), "sum", 4), "sum differs from fixture");
                  v.expect(z == brauer_Z_formula(4), "sum differs from prefactor * Pfaffian");
                }});

  cs.push_back({4, "brauer homogeneous sums N=2..10 and against built vectors", 60, [](Verdict& v, Built& b) {
                  const std::vector<long> expected{1, 7, 39, 1771, 57163, 16457953, 3125503009L, 5643044005273L,
                                                   6357601085989209L};
                  const auto t0 = Clock::now();
                  std::vector<Integer> got;
                  for (std::size_t N = 2; N <= 10; ++N) got.push_back(brauer_Z_homog(N));
                  const double dt = seconds_since(t0);
                  v.expect(dt < 1.0, "binomial Pfaffian sequence took " + std::to_string(dt) + " s");
                  for (std::size_t k = 0; k < expected.size(); ++k)
                    v.expect(got[k] == Integer(expected[k]), "N=" + std::to_string(k + 2) + ": " + got[k].get_str());
                  for (std::size_t N : {2, 4, 6})
                    v.expect(b.b(N).sum().constant_term() == Rational(brauer_Z_homog(N)),
                             "built N=" + std::to_string(N) + " sum at 0");
                }});

  cs.push_back({5, "brauer base component homogeneous sequence N=2..12", 300, [](Verdict& v, Built& b) {
                  const auto seq = psi0_homog_sequence(12);
                  const std::vector<Integer> expected{Integer(1), Integer(5), Integer(129), Integer(17369),
                                                      Integer(12275137), Integer("45692809149")};
                  v.expect(seq == expected, "sequence differs");
                  for (std::size_t N : {2, 4, 6}) {
                    const auto& psi = b.b(N);
                    v.expect(psi[base_pattern(N, PatternKind::crossing)].constant_term() == Rational(seq[N / 2 - 1]),
                             "full build N=" + std::to_string(N));
                  }
                }});

  cs.push_back({6, "brauer W(4) closed form and W homogeneous values", 60, [](Verdict& v, Built& b) {
                  const QPoly w = component_sum(b.b(4), Sector::permutation);
                  v.expect(w == brauer_W_formula(4), "W(4) differs from closed form");
                  for (std::size_t n : {2, 3}) {
                    const Integer want = detail::pow_int(2, 2 * n * (n - 1));
                    v.expect(component_sum(b.b(2 * n), Sector::permutation).constant_term() == Rational(want),
                             "W(" + std::to_string(2 * n) + ")(0) from the built vector");
                    v.expect(brauer_W_homog(2 * n) == want, "W(" + std::to_string(2 * n) + ")(0) from the closed form");
                  }
                }});

  cs.push_back({7, "TL N=4 matches the transcribed components, Z(1,1,1,1) = 27", 10, [](Verdict& v, Built& b) {
                  const Json j = fixture("tl-N4.json");
                  const auto& psi = b.t(4);
                  v.expect(psi == fixture_vector<Cyclotomic>(j), "components differ from fixture");
                  v.expect(psi.sum() == fixture_polynomial<Cyclotomic>(j, "sum", 4), "sum differs from fixture");
                  v.expect(tl_homog(psi).value == 27, "Z(1,1,1,1) = " + tl_homog(psi).value.get_str());
                }});

  cs.push_back({8, "TL N=6 relation suite, determinant sum rule, VSASM counts", 600, [](Verdict& v, Built& b) {
                  const auto& psi = b.t(6);
                  v.expect(verify_tl(psi, {}, &b.t(4)));
                  const Report s = verify_sumrules_tl(psi);
                  v.expect(s);
                  v.expect_check(s, "Z-det-points", 20);
                  v.expect_check(s, "Z-pf-squared-points", 20);
                  for (std::size_t n : {2, 3}) {
                    const TlHomog h = tl_homog(b.t(2 * n));
                    const Integer vs = count_vsasm(2 * n + 1);
                    v.expect(h.quotient == vs, "n=" + std::to_string(n) + ": " + h.quotient.get_str() + " vs VSASM " + vs.get_str());
                  }
                }});

  cs.push_back({9, "relation and property suites, brauer and TL N=2,4,6", 900, [](Verdict& v, Built& b) {
                  for (std::size_t N : {2, 4, 6}) {
                    const Report r = verify_brauer(b.b(N), {}, N > 2 ? &b.b(N - 2) : nullptr);
                    v.expect(r);
                    for (const char* name : {"stabilizer", "delta-relation", "evenness-z1", "evenness-zN", "reflection",
                                             "P1-vanishing", "P2-leading-terms", "path-independence"})
                      v.expect_check(r, name);
                    if (N > 2) {
                      v.expect_check(r, "recursion-little-arch");
                      v.expect_check(r, "phi-formula");
                    }
                    const Report t = verify_tl(b.t(N), {}, N > 2 ? &b.t(N - 2) : nullptr);
                    v.expect(t);
                    for (const char* name : {"reciprocity-z1", "reflection", "recursion-little-arch", "degree-bounds"})
                      v.expect_check(t, name);
                  }
                }});

  cs.push_back({10, "oracle: algebra, Yang-Baxter, exchange, covectors, reductions", 600, [](Verdict& v, Built& b) {
                  v.expect(check_algebra(Model::brauer, 8));
                  v.expect(check_algebra(Model::tl, 10));
                  for (const Report& r : {check_ybe_unitarity<Rational>(), check_ybe_unitarity<Cyclotomic>()}) {
                    v.expect(r);
                    for (const char* name : {"yang-baxter", "unitarity"}) v.expect_check(r, name, 20);
                  }
                  for (std::size_t N : {2, 4, 6}) {
                    const Report rb = verify_oracle(b.b(N));
                    const Report rt = verify_oracle(b.t(N));
                    v.expect(rb);
                    v.expect(rt);
                    for (std::size_t i = 1; i < N; ++i) {
                      v.expect_check(rb, "exchange-i=" + std::to_string(i));
                      v.expect_check(rt, "exchange-i=" + std::to_string(i));
                    }
                    if (N >= 4) {
                      v.expect_check(rb, "odd-exchange-i=" + std::to_string(N - 2));
                      v.expect_check(rt, "odd-exchange-i=" + std::to_string(N - 2));
                      v.expect_check(rt, "even-exchange-i=" + std::to_string(N - 3));
                    }
                  }
                }});
  return cs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "run just these criteria");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> pick(only.begin(), only.end());

  Built built;
  int failed = 0;
  const auto start = Clock::now();
  for (const auto& c : criteria()) {
    if (!pick.empty() && !pick.count(c.id)) continue;
    Verdict v;
    const auto t0 = Clock::now();
    try {
      c.run(v, built);
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    if (dt > c.budget_s) v.failures.push_back("over budget");
    const bool ok = v.failures.empty();
    failed += !ok;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << std::fixed
              << std::setprecision(2) << std::setw(8) << dt << " s / " << std::setprecision(0) << c.budget_s << " s  "
              << c.title << "\n";
    for (const auto& f : v.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
  }
  std::cout << "total " << std::fixed << std::setprecision(2) << seconds_since(start) << " s, " << failed
            << " failed\n";
  return failed == 0 ? 0 : 1;
}
