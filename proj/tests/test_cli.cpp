#include <gtest/gtest.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "loopstate/cli.hpp"

using namespace loopstate;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out, log;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("loopstate-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), {"loopstate", "--cache-dir", (dir_ / "cache").string(), "--fixture-dir", LOOPSTATE_FIXTURE_DIR});
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, log;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, log);
    return {code, out.str(), log.str()};
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BrauerSequence) {
  auto r = run({"sequence", "--which", "brauer-z", "--max-n", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 7 39 1771 57163 16457953 3125503009 5643044005273 6357601085989209\n");
  EXPECT_EQ(run({"sequence", "--which", "brauer-psi0", "--max-n", "8"}).out, "1 5 129 17369\n");
  EXPECT_EQ(run({"sequence", "--which", "brauer-w", "--max-n", "6"}).out, "1 4 16 256 4096\n");
  EXPECT_EQ(run({"sequence", "--which", "tl-homog", "--max-n", "6"}).out, "1 27 18954\n");
  EXPECT_EQ(run({"sequence", "--which", "tl-homog", "--max-n", "10"}).code, 2);
  EXPECT_EQ(run({"sequence", "--which", "nope", "--max-n", "4"}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  auto r = run({"build", "--model", "tl", "--n", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.log.find("--reduce"), std::string::npos);
  EXPECT_EQ(run({"build", "--model", "potts", "--n", "4"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--model", "tl", "--n", "4", "--suite", "everything"}).code, 2);
  EXPECT_EQ(run({"sum", "--model", "tl", "--n", "4", "--sector", "permutation"}).code, 2);
  EXPECT_EQ(run({"sum", "--model", "brauer", "--n", "4", "--at", "1,2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, CacheHitSkipsRebuild) {
  auto first = run({"build", "--model", "brauer", "--n", "4"});
  EXPECT_EQ(first.code, 0);
  EXPECT_NE(first.log.find("built brauer N=4"), std::string::npos);
  EXPECT_NE(first.log.find("cache store"), std::string::npos);
  auto second = run({"build", "--model", "brauer", "--n", "4"});
  EXPECT_EQ(second.code, 0);
  EXPECT_NE(second.log.find("cache hit"), std::string::npos);
  EXPECT_EQ(second.log.find("built brauer"), std::string::npos);
  EXPECT_EQ(first.out, second.out);
  // unreadable entries are rebuilt
  std::ofstream(dir_ / "cache" / "brauer-N4.json") << "{";
  auto third = run({"build", "--model", "brauer", "--n", "4"});
  EXPECT_EQ(third.code, 0);
  EXPECT_NE(third.log.find("rebuilding"), std::string::npos);
  auto fresh = run({"--no-cache", "build", "--model", "brauer", "--n", "4"});
  EXPECT_EQ(fresh.log.find("cache"), std::string::npos);
}

TEST_F(CliTest, RoundTripIsByteIdentical) {
  for (const char* model : {"brauer", "tl"}) {
    const std::string f1 = path(std::string(model) + "-1.json"), f2 = path(std::string(model) + "-2.json");
    ASSERT_EQ(run({"build", "--model", model, "--n", "4", "--out", f1}).code, 0);
    const Json j = read_json_file(f1);
    if (std::string(model) == "brauer")
      write_json_file(f2, to_json(vector_from_json<Rational>(j)));
    else
      write_json_file(f2, to_json(vector_from_json<Cyclotomic>(j)));
    EXPECT_EQ(slurp(f1), slurp(f2));
    EXPECT_EQ(run({"verify", "--model", model, "--n", "4", "--in", f1, "--trials", "3"}).code, 0);
  }
}

TEST_F(CliTest, MalformedAndCorruptedInput) {
  const std::string f = path("v.json");
  ASSERT_EQ(run({"build", "--model", "brauer", "--n", "4", "--out", f}).code, 0);
  Json j = read_json_file(f);
  Json bad = j;
  bad["components"][0]["terms"][0]["c"] = Json::array({"1/0"});
  write_json_file(path("bad.json"), bad);
  auto r = run({"verify", "--model", "brauer", "--n", "4", "--in", path("bad.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.log.find("vector.components[0]"), std::string::npos) << r.log;
  // a valid file with a wrong component fails verification
  auto v = vector_from_json<Rational>(j);
  v.components[1] = v.components[1] + QPoly::variable(4, 2);
  write_json_file(path("wrong.json"), to_json(v));
  auto w = run({"verify", "--model", "brauer", "--n", "4", "--suite", "relations", "--in", path("wrong.json"), "--trials", "3"});
  EXPECT_EQ(w.code, 1);
  EXPECT_NE(w.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "--model", "brauer", "--n", "6", "--in", f}).code, 2);
}

TEST_F(CliTest, VerifyIsDeterministic) {
  std::vector<std::string> args{"--json", "verify", "--model", "tl", "--n", "4", "--seed", "7", "--trials", "4"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["reports"].size(), 6u);
  args[7] = "8";
  EXPECT_NE(run(args).out, a.out);
}

TEST_F(CliTest, SumAndFixtures) {
  EXPECT_EQ(run({"sum", "--model", "brauer", "--n", "4"}).out, "39\n");
  EXPECT_EQ(run({"sum", "--model", "tl", "--n", "4"}).out, "27\n");
  EXPECT_EQ(run({"sum", "--model", "brauer", "--n", "4", "--sector", "permutation"}).out, "16\n");
  auto pt = run({"--json", "sum", "--model", "brauer", "--n", "4", "--at", "1/2,1/3,1/5,1/7"});
  const Json j = Json::parse(pt.out);
  std::vector<Rational> z{make_rational(1, 2), make_rational(1, 3), make_rational(1, 5), make_rational(1, 7)};
  EXPECT_EQ(parse_rational(j["value"].get<std::string>()), brauer_Z_formula(z));
  auto sym = run({"--json", "sum", "--model", "brauer", "--n", "4", "--symbolic"});
  EXPECT_EQ(polynomial_from_json<Rational>(Json::parse(sym.out)["polynomial"]), brauer_Z_formula(4));
  auto fx = run({"fixtures", "--which", "appendix-a"});
  EXPECT_EQ(fx.code, 0) << fx.out << fx.log;
  EXPECT_EQ(run({"fixtures", "--which", "all"}).code, 0);
  auto missing = run({"--fixture-dir", path("nowhere"), "fixtures", "--which", "appendix-b"});
  EXPECT_EQ(missing.code, 2);
}

TEST_F(CliTest, EnumerateAndReduce) {
  auto e = run({"--json", "enumerate", "--model", "brauer", "--n", "6"});
  EXPECT_EQ(Json::parse(e.out)["patterns"].size(), 15u);
  auto odd = run({"--json", "build", "--model", "brauer", "--n", "4", "--reduce"});
  const auto v = vector_from_json<Rational>(Json::parse(odd.out));
  EXPECT_EQ(v.N, 3u);
  EXPECT_EQ(v.sum().constant_term(), 7);
}
