#pragma once

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "loopstate/brauer_verify.hpp"
#include "loopstate/fixtures.hpp"
#include "loopstate/oracle.hpp"
#include "loopstate/sumrules.hpp"
#include "loopstate/tl_verify.hpp"

namespace loopstate::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& log;
  bool json = false;
  bool use_cache = true;
  std::string cache_dir;
  std::string fixture_dir;
};

inline std::string default_cache_dir() {
  const char* env = std::getenv("LOOPSTATE_CACHE");
  return env && *env ? env : ".loopstate-cache";
}

inline std::string default_fixture_dir() {
  const char* env = std::getenv("LOOPSTATE_FIXTURES");
  if (env && *env) return env;
#ifdef LOOPSTATE_FIXTURE_DIR
  return LOOPSTATE_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline long ms_since(Clock::time_point t0) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
}

template <class C>
constexpr Model model_of() {
  return std::is_same_v<C, Rational> ? Model::brauer : Model::tl;
}

inline void require_even(std::size_t N) {
  if (N == 0 || N % 2)
    throw UsageError("N = " + std::to_string(N) +
                     ": ground states are built at even N; for odd N build N+1 and reduce (build --n " +
                     std::to_string(N + 1) + " --reduce)");
}

template <class C>
GroundStateVector<C> build_fresh(std::size_t N) {
  if constexpr (std::is_same_v<C, Rational>)
    return build_vector(N);
  else
    return build_vector_tl(N);
}

/// Built vector from the cache, or built and stored.
template <class C>
GroundStateVector<C> obtain(Context& ctx, std::size_t N) {
  require_even(N);
  namespace fs = std::filesystem;
  const fs::path path = fs::path(ctx.cache_dir) / (std::string(to_string(model_of<C>())) + "-N" + std::to_string(N) + ".json");
  if (ctx.use_cache && fs::exists(path)) {
    auto t0 = Clock::now();
    try {
      auto v = vector_from_json<C>(read_json_file(path.string()));
      if (v.N == N && v.model == model_of<C>()) {
        ctx.log << "cache hit: " << path.string() << " (loaded in " << ms_since(t0) << " ms)\n";
        return v;
      }
    } catch (const SchemaError& e) {
      ctx.log << "cache entry unreadable, rebuilding: " << e.what() << "\n";
    }
  }
  auto t0 = Clock::now();
  auto v = build_fresh<C>(N);
  ctx.log << "built " << to_string(model_of<C>()) << " N=" << N << " in " << ms_since(t0) << " ms\n";
  if (ctx.use_cache) {
    fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    write_json_file(tmp.string(), to_json(v));
    fs::rename(tmp, path);
    ctx.log << "cache store: " << path.string() << "\n";
  }
  return v;
}

template <class C>
std::string value_str(const C& v) {
  if constexpr (std::is_same_v<C, Rational>)
    return v.get_str();
  else
    return v.str();
}

/// All z = 0 for Brauer, all z = 1 for TL.
template <class C>
std::vector<Rational> homogeneous_point(std::size_t N) {
  return std::vector<Rational>(N, Rational(std::is_same_v<C, Rational> ? 0 : 1));
}

template <class C>
C evaluate_at(const Polynomial<C>& f, const std::vector<Rational>& pt) {
  return evaluate_rational(f, pt);
}

inline std::vector<Rational> parse_point(const std::string& s, std::size_t N) {
  std::vector<Rational> pt;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      pt.push_back(parse_rational(item));
    } catch (const SchemaError& e) {
      throw UsageError("--at: " + std::string(e.what()));
    }
  }
  if (pt.size() != N) throw UsageError("--at: expected " + std::to_string(N) + " values, got " + std::to_string(pt.size()));
  return pt;
}

inline void print_report(Context& ctx, const Report& r) {
  ctx.out << r.suite << " (" << r.model << ", N=" << r.N << ", seed=" << r.seed << ")\n";
  for (const auto& c : r.checks) {
    ctx.out << "  " << (c.pass() ? "PASS" : "FAIL") << "  " << c.name << "  trials=" << c.trials;
    if (c.failures) ctx.out << " failures=" << c.failures;
    if (c.counterexample) ctx.out << "  first: " << *c.counterexample;
    ctx.out << "\n";
  }
  for (const auto& n : r.notes) ctx.out << "  note: " << n << "\n";
}

}  // namespace detail

struct Args {
  std::string model = "brauer";
  std::size_t n = 0;
  std::string out_file, in_file, suite = "all", sector = "all", at, which;
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::size_t max_n = 10;
  bool symbolic = false, reduce = false;
};

template <class C>
int cmd_build(Context& ctx, const Args& a) {
  auto t0 = detail::Clock::now();
  auto v = detail::obtain<C>(ctx, a.n);
  Json j;
  if (a.reduce) {
    if constexpr (std::is_same_v<C, Rational>) {
      v = reduce_to_odd(v);
    } else {
      v = reduce_odd_tl(v).odd;
    }
  }
  j = to_json(v);
  if (!a.out_file.empty()) {
    write_json_file(a.out_file, j);
    ctx.log << "wrote " << a.out_file << "\n";
  }
  if (ctx.json) {
    if (a.out_file.empty()) ctx.out << j.dump(1) << "\n";
    return kOk;
  }
  const auto pt = detail::homogeneous_point<C>(v.N);
  ctx.out << to_string(v.model) << " N=" << v.N << ": " << v.size() << " components\n";
  for (std::size_t k = 0; k < v.size(); ++k)
    ctx.out << "  " << v.patterns[k].str() << "  terms=" << v.components[k].size()
            << "  homogeneous=" << detail::value_str(detail::evaluate_at(v.components[k], pt)) << "\n";
  ctx.log << "build done in " << detail::ms_since(t0) << " ms\n";
  return kOk;
}

template <class C>
GroundStateVector<C> load_or_obtain(Context& ctx, const Args& a) {
  if (a.in_file.empty()) return detail::obtain<C>(ctx, a.n);
  auto v = vector_from_json<C>(read_json_file(a.in_file));
  if (v.model != detail::model_of<C>() || v.N != a.n)
    throw UsageError("--in: file holds " + std::string(to_string(v.model)) + " N=" + std::to_string(v.N) + ", expected " +
                     to_string(detail::model_of<C>()) + " N=" + std::to_string(a.n));
  detail::require_even(v.N);
  return v;
}

template <class C>
int cmd_verify(Context& ctx, const Args& a) {
  if (a.suite != "relations" && a.suite != "sumrules" && a.suite != "oracle" && a.suite != "all")
    throw UsageError("--suite must be relations, sumrules, oracle or all");
  detail::require_even(a.n);
  const auto psi = load_or_obtain<C>(ctx, a);
  std::optional<GroundStateVector<C>> smaller;
  if (a.n > 2 && a.suite != "oracle") smaller = detail::obtain<C>(ctx, a.n - 2);
  const auto* sp = smaller ? &*smaller : nullptr;
  std::vector<Report> reports;
  auto timed = [&](const std::string& what, auto&& fn) {
    auto t0 = detail::Clock::now();
    reports.push_back(fn());
    ctx.log << what << ": " << detail::ms_since(t0) << " ms\n";
  };
  const bool all = a.suite == "all";
  if (all || a.suite == "relations") {
    if constexpr (std::is_same_v<C, Rational>)
      timed("relations", [&] { return verify_brauer(psi, {a.seed, a.trials, true}, sp); });
    else
      timed("relations", [&] { return verify_tl(psi, {a.seed, a.trials}, sp); });
  }
  if (all || a.suite == "sumrules") {
    if constexpr (std::is_same_v<C, Rational>)
      timed("sumrules", [&] { return verify_sumrules_brauer(psi, {a.seed, a.trials, 6}, sp); });
    else
      timed("sumrules", [&] { return verify_sumrules_tl(psi, {a.seed, a.trials, 6}); });
  }
  if (all || a.suite == "oracle") {
    const OracleOptions o{a.seed, a.trials};
    const Model m = detail::model_of<C>();
    timed("algebra", [&] { return check_algebra(m, m == Model::brauer ? 8 : 10); });
    timed("ybe-unitarity", [&] { return check_ybe_unitarity<C>(o); });
    timed("oracle", [&] { return verify_oracle(psi, o); });
    timed("double-row-transfer", [&] { return check_double_row_transfer(psi, o); });
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (ctx.json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    ctx.out << Json{{"pass", pass}, {"reports", std::move(arr)}}.dump(1) << "\n";
  } else {
    for (const auto& r : reports) detail::print_report(ctx, r);
    ctx.out << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kMismatch;
}

template <class C>
int cmd_sum(Context& ctx, const Args& a) {
  if (a.sector != "all" && a.sector != "permutation") throw UsageError("--sector must be all or permutation");
  if (a.sector == "permutation" && detail::model_of<C>() != Model::brauer)
    throw UsageError("the permutation sector exists in the brauer model only");
  detail::require_even(a.n);
  const auto v = detail::obtain<C>(ctx, a.n);
  const auto s = component_sum(v, a.sector == "permutation" ? Sector::permutation : Sector::all);
  Json j{{"model", to_string(v.model)}, {"N", v.N}, {"sector", a.sector}};
  std::string text;
  if (a.symbolic) {
    j["polynomial"] = to_json(s);
    text = s.str();
  } else {
    const auto pt = a.at.empty() ? detail::homogeneous_point<C>(a.n) : detail::parse_point(a.at, a.n);
    Json pj = Json::array();
    for (const auto& x : pt) pj.push_back(x.get_str());
    j["at"] = std::move(pj);
    text = detail::value_str(detail::evaluate_at(s, pt));
    j["value"] = text;
  }
  if (ctx.json)
    ctx.out << j.dump(1) << "\n";
  else
    ctx.out << text << "\n";
  return kOk;
}

inline int cmd_sequence(Context& ctx, const Args& a) {
  std::vector<std::pair<std::size_t, Integer>> vals;
  if (a.which == "brauer-z") {
    for (std::size_t N = 2; N <= a.max_n; ++N) vals.emplace_back(N, brauer_Z_homog(N));
  } else if (a.which == "brauer-w") {
    for (std::size_t N = 2; N <= a.max_n; ++N) vals.emplace_back(N, brauer_W_homog(N));
  } else if (a.which == "brauer-psi0") {
    if (a.max_n < 2) throw UsageError("--max-n must be at least 2");
    auto seq = psi0_homog_sequence(a.max_n - a.max_n % 2);
    for (std::size_t k = 0; k < seq.size(); ++k) vals.emplace_back(2 * k + 2, seq[k]);
  } else if (a.which == "tl-homog") {
    if (a.max_n > 8) throw UsageError("tl-homog needs built vectors; --max-n is capped at 8");
    for (std::size_t N = 2; N <= a.max_n; N += 2) vals.emplace_back(N, tl_homog(detail::obtain<Cyclotomic>(ctx, N)).value);
  } else {
    throw UsageError("--which must be brauer-z, brauer-psi0, brauer-w or tl-homog");
  }
  if (ctx.json) {
    Json arr = Json::array();
    for (const auto& [N, v] : vals) arr.push_back(Json{{"N", N}, {"value", v.get_str()}});
    ctx.out << Json{{"which", a.which}, {"values", std::move(arr)}}.dump(1) << "\n";
  } else {
    for (std::size_t k = 0; k < vals.size(); ++k) ctx.out << (k ? " " : "") << vals[k].second.get_str();
    ctx.out << "\n";
  }
  return kOk;
}

inline int cmd_fixtures(Context& ctx, const Args& a) {
  if (a.which != "appendix-a" && a.which != "appendix-b" && a.which != "all")
    throw UsageError("--which must be appendix-a, appendix-b or all");
  auto path = [&](const std::string& name) { return ctx.fixture_dir + "/" + name; };
  Report rep{"fixtures", a.which, 0, 0, {}, {}};
  if (a.which != "appendix-b") {
    const Json j = read_json_file(path("brauer-N4.json"));
    const auto v = build_vector(4);
    rep.add("brauer N=4 components").record(v == fixture_vector<Rational>(j));
    const QPoly sum = fixture_polynomial<Rational>(j, "sum", 4);
    rep.add("brauer N=4 sum").record(v.sum() == sum);
    rep.add("brauer N=4 sum closed form").record(brauer_Z_formula(4) == sum);
    const Json j6 = read_json_file(path("brauer-N6-psi0.json"));
    const QPoly p6 = psi0(6);
    rep.add("brauer N=6 base component").record(p6 == fixture_polynomial<Rational>(j6, "expr", 6));
    rep.add("brauer N=6 base component at 0").record(p6.constant_term() == parse_rational(j6.at("homogeneous_value").get<std::string>()));
  }
  if (a.which != "appendix-a") {
    const Json j = read_json_file(path("tl-N4.json"));
    const auto v = build_vector_tl(4);
    rep.add("tl N=4 components").record(v == fixture_vector<Cyclotomic>(j));
    rep.add("tl N=4 sum").record(v.sum() == fixture_polynomial<Cyclotomic>(j, "sum", 4));
    rep.add("tl N=4 sum at 1").record(tl_homog(v).value == 27);
  }
  if (ctx.json)
    ctx.out << to_json(rep).dump(1) << "\n";
  else
    detail::print_report(ctx, rep);
  return rep.pass() ? kOk : kMismatch;
}

inline int cmd_enumerate(Context& ctx, const Args& a) {
  const auto pats = enumerate_patterns(a.n, pattern_kind(model_from_string(a.model)));
  if (ctx.json) {
    Json arr = Json::array();
    for (const auto& p : pats) arr.push_back(pattern_to_json(p));
    ctx.out << Json{{"model", a.model}, {"N", a.n}, {"patterns", std::move(arr)}}.dump(1) << "\n";
  } else {
    for (std::size_t k = 0; k < pats.size(); ++k) ctx.out << k << "  " << pats[k].str() << "\n";
    ctx.out << pats.size() << " patterns\n";
  }
  return kOk;
}

/// Parses argv and runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& log = std::cerr) {
  CLI::App app{"exact ground states of the open-boundary O(1) loop models"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, log, false, true, default_cache_dir(), default_fixture_dir()};
  Args a;
  bool no_cache = false;
  app.add_flag("--json", ctx.json, "JSON on stdout");
  app.add_option("--cache-dir", ctx.cache_dir, "cache directory (default $LOOPSTATE_CACHE or ./.loopstate-cache)");
  app.add_flag("--no-cache", no_cache, "always rebuild, store nothing");
  app.add_option("--fixture-dir", ctx.fixture_dir, "directory of the transcribed fixtures");

  auto model_opt = [&](CLI::App* s) {
    s->add_option("--model", a.model, "brauer or tl")->required()->check(CLI::IsMember({"brauer", "tl"}));
  };
  auto* en = app.add_subcommand("enumerate", "list the link patterns of size N");
  model_opt(en);
  en->add_option("--n", a.n, "number of points")->required()->check(CLI::Range(1, 16));

  auto* bu = app.add_subcommand("build", "build the ground state vector");
  model_opt(bu);
  bu->add_option("--n", a.n, "even size")->required();
  bu->add_option("--out", a.out_file, "write the vector as JSON");
  bu->add_flag("--reduce", a.reduce, "write the odd size N-1 reduction instead");

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  model_opt(ve);
  ve->add_option("--n", a.n, "even size")->required();
  ve->add_option("--suite", a.suite, "relations, sumrules, oracle or all");
  ve->add_option("--seed", a.seed, "random seed");
  ve->add_option("--trials", a.trials, "random points per check")->check(CLI::PositiveNumber);
  ve->add_option("--in", a.in_file, "verify this vector file instead of a build");

  auto* su = app.add_subcommand("sum", "component sum");
  model_opt(su);
  su->add_option("--n", a.n, "even size")->required();
  su->add_option("--sector", a.sector, "all or permutation");
  su->add_option("--at", a.at, "evaluation point z1,z2,... (rationals)");
  su->add_flag("--symbolic", a.symbolic, "print the expanded polynomial");

  auto* se = app.add_subcommand("sequence", "homogeneous integer sequences");
  se->add_option("--which", a.which, "brauer-z, brauer-psi0, brauer-w or tl-homog")->required();
  se->add_option("--max-n", a.max_n, "largest N")->required()->check(CLI::Range(2, 40));

  auto* fx = app.add_subcommand("fixtures", "compare builds with the transcribed fixtures");
  fx->add_option("--which", a.which, "appendix-a, appendix-b or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, log);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }
  ctx.use_cache = !no_cache;

  auto by_model = [&](auto&& fn) {
    return model_from_string(a.model) == Model::brauer ? fn(Rational{}) : fn(Cyclotomic{});
  };
  try {
    if (*en) return cmd_enumerate(ctx, a);
    if (*bu) return by_model([&](auto tag) { return cmd_build<decltype(tag)>(ctx, a); });
    if (*ve) return by_model([&](auto tag) { return cmd_verify<decltype(tag)>(ctx, a); });
    if (*su) return by_model([&](auto tag) { return cmd_sum<decltype(tag)>(ctx, a); });
    if (*se) return cmd_sequence(ctx, a);
    if (*fx) return cmd_fixtures(ctx, a);
  } catch (const UsageError& e) {
    log << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    log << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    log << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    log << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace loopstate::cli
