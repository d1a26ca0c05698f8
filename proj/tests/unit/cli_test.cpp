#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <set>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = reembed::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(REEMBED_DATA_DIR) + "/" + name; }

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, EliminatePrintsGenerator) {
  const auto r = run({"eliminate", "--z", "x,y", data("substitution_awxy.problem"), "--oracle"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("  - a^5*w^2 - a^2*w^2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("verified: equal to the elimination-order Groebner basis oracle"), std::string::npos);
}

TEST(Cli, ThreeBestTuples) {
  const auto r = run({"best-reembed", "--degree", "2", "--all", "--format", "json", data("three_best.problem")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["result"]["tuples"].size(), 3U);
  std::set<std::set<std::string>> zs;
  for (const auto& t : j["result"]["tuples"]) zs.insert(t["z"].get<std::set<std::string>>());
  EXPECT_EQ(zs, (std::set<std::set<std::string>>{{"x", "y"}, {"y", "z"}, {"y", "w"}}));
}

TEST(Cli, EmptySeparatingList) {
  const auto r = run({"sep-indets", data("empty_degree.problem")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 18), "indeterminates: []");
}

TEST(Cli, JsonSchema) {
  const auto r = run({"detect-grading", "--format", "json", data("nongraded_xy.problem")});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "input_hash", "result", "verifications"}));
  EXPECT_EQ(j["command"], "detect-grading");
  EXPECT_EQ(j["input_hash"].get<std::string>().size(), 16U);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"free-reembed", data("not_unimodular.problem")}).code, 2);
  const auto refused = run({"find-sep", "--z", "w", data("substitution_awxy.problem")});
  EXPECT_EQ(refused.code, 2);
  EXPECT_NE(refused.err.find("Z is not separating for I"), std::string::npos) << refused.err;
  EXPECT_EQ(run({"best-reembed", "--degree", "5", data("three_best.problem")}).code, 2);
  EXPECT_EQ(run({"sep-indets", data("missing.problem")}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  EXPECT_EQ(run({"fiber", data("fiber_line.problem")}).code, 1);
  EXPECT_EQ(run({"fiber", "--generic", "--report", data("fiber_line.problem")}).code, 1);
  EXPECT_EQ(run({"best-reembed", "--all", data("three_best.problem")}).code, 1);
  EXPECT_EQ(run({"eliminate", "--z", "q", data("substitution_awxy.problem")}).code, 1);
  EXPECT_EQ(run({"sep-indets", "--format", "xml", data("circle.problem")}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, RefusalReportInJson) {
  const auto r = run({"free-reembed", "--format", "json", data("not_unimodular.problem")});
  ASSERT_EQ(r.code, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["error"]["code"], "NOT_UNIMODULAR");
  EXPECT_TRUE(j["result"].is_null());
}

TEST(Cli, ParseErrorIsUsage) {
  const auto r = run({"ump-solve", "--matrix", data("circle.problem")});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, FiberAndUmpCommands) {
  const auto f = run({"fiber", "--point", "1", "--report", data("two_degree_blocks.problem")});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_NE(f.out.find("regularity: singular"), std::string::npos);
  const auto g = run({"fiber", "--generic", data("fiber_line.problem")});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_NE(g.out.find("groebner_basis:\n  - z\n"), std::string::npos) << g.out;
  const auto s = run({"ump-solve", "--matrix", data("ump_univariate.problem")});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(count(s.out, ": valid"), 2U);
  const auto u = run({"ump-reembed", "--k", "2", "--fixture", data("ump_two_degrees.matrices"),
                      data("ump_two_degrees.problem")});
  ASSERT_EQ(u.code, 0) << u.err;
  EXPECT_EQ(count(u.out, "source: fixture"), 2U);
  const auto fr = run({"free-reembed", data("free_cubic.problem")});
  ASSERT_EQ(fr.code, 0) << fr.err;
  EXPECT_NE(fr.out.find("generators: []"), std::string::npos);
  const auto sm = run({"smooth-check", data("circle.problem")});
  ASSERT_EQ(sm.code, 0) << sm.err;
  EXPECT_NE(sm.out.find("verdict: regular"), std::string::npos) << sm.out;
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
  const std::vector<std::vector<std::string>> commands = {
      {"best-reembed", "--format", "json", data("two_degree_blocks.problem")},
      {"free-reembed", "--format", "json", data("free_regular.problem")},
      {"fiber", "--generic", "--format", "json", data("cvec_abxyz.problem")},
  };
  for (const auto& c : commands) {
    ::unsetenv("REEMBED_THREADS");
    const auto first = run(c);
    ASSERT_EQ(first.code, 0) << first.err;
    for (const char* t : {"1", "4", "16"}) {
      ::setenv("REEMBED_THREADS", t, 1);
      EXPECT_EQ(run(c).out, first.out) << c[0] << " threads " << t;
    }
  }
  ::setenv("REEMBED_THREADS", "zero", 1);
  EXPECT_EQ(run({"sep-indets", data("circle.problem")}).code, 1);
  ::unsetenv("REEMBED_THREADS");
}

TEST(Cli, HashIsFnv1a) {
  EXPECT_EQ(reembed::cli::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(reembed::cli::fnv1a_hex("a"), "af63dc4c8601ec8c");
}
