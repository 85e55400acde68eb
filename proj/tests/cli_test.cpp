#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "isf/json_io.hpp"

namespace isf::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
  Json report() const { return Json::parse(out); }
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  CliRun r;
  r.code = dispatch(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("isf_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

constexpr const char* kPendant = R"({"n":4,"edges":[[1,4],[2,4],[2,3],[3,4]]})";
constexpr const char* kTriangle = R"({"n":3,"edges":[[1,2],[1,3],[2,3]]})";

TEST_F(CliTest, EnumerateListsForests) {
  const CliRun r = run({"enumerate", "--graph", file("k3.json", kTriangle), "-k", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = r.report();
  EXPECT_EQ(j["command"], "enumerate");
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["payload"]["count"], 3);
}

TEST_F(CliTest, ReadsGraphFromStdin) {
  const CliRun r = run({"check", "factorization", "--graph", "-"}, kTriangle);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.report()["ok"].get<bool>());
}

// A counterexample found by the search is a result, not a failed property.
TEST_F(CliTest, MovableSearchReportsCounterexample) {
  const CliRun r = run({"search-movable", "--graph", file("g.json", kPendant)});
  EXPECT_EQ(r.code, kOk);
  EXPECT_FALSE(r.report()["payload"]["all_pairs_ok"].get<bool>());
  const CliRun fixed = run({"search-movable", "--graph", file("g.json", kPendant), "--relabel", "1,3,4,2"});
  EXPECT_EQ(fixed.code, kOk);
  EXPECT_TRUE(fixed.report()["payload"]["all_pairs_ok"].get<bool>());
}

TEST_F(CliTest, PeoCheckAcceptsExpectedNonIdentity) {
  const CliRun r = run({"check", "peo", "--graph", file("p.json", R"({"n":3,"edges":[[1,3],[2,3]]})")});
  ASSERT_EQ(r.code, kOk) << r.out;
  const Json j = r.report();
  EXPECT_FALSE(j["payload"]["holds"].get<bool>());
}

TEST_F(CliTest, BadInputExitsTwo) {
  CliRun r = run({"enumerate", "--graph", file("bad.json", R"({"n":3,"edges":[[2,1]]})"), "-k", "1"});
  EXPECT_EQ(r.code, kBadInput);
  EXPECT_EQ(r.report()["payload"]["error"], "InvalidInput");
  EXPECT_FALSE(r.report()["diagnostics"].empty());

  r = run({"enumerate", "--graph", file("broken.json", "{not json"), "-k", "1"});
  EXPECT_EQ(r.code, kBadInput);

  r = run({"enumerate", "--graph", (dir_ / "missing.json").string(), "-k", "1"});
  EXPECT_EQ(r.code, kBadInput);

  r = run({"phi", "--ground", "1,2,3", "--subset", "1,2"});
  EXPECT_EQ(r.code, kBadInput);
  EXPECT_EQ(r.report()["payload"]["error"], "SizeViolation");

  const std::string k3 = file("k3.json", kTriangle);
  r = run({"psi", "--graph", k3, "--forest-a", file("a.json", R"({"n":3,"edges":[]})"), "--forest-b",
           file("b.json", R"({"n":3,"edges":[[1,2]]})")});
  EXPECT_EQ(r.code, kBadInput);
  EXPECT_EQ(r.report()["payload"]["error"], "SizeViolation");

  r = run({"no-such-command"});
  EXPECT_EQ(r.code, kBadInput);
  EXPECT_NO_THROW(r.report());

  r = run({"--jobs", "0", "enumerate", "--graph", file("k3.json", kTriangle), "-k", "1"});
  EXPECT_EQ(r.code, kBadInput);
}

TEST_F(CliTest, PsiReportsTrace) {
  const std::string g = file("g.json", kTriangle);
  const std::string a = file("a.json", R"({"n":3,"edges":[[1,2],[1,3]]})");
  const std::string b = file("b.json", R"({"n":3,"edges":[]})");
  const CliRun r = run({"psi", "--graph", g, "--forest-a", a, "--forest-b", b});
  ASSERT_EQ(r.code, kOk) << r.out;
  const Json t = r.report()["payload"];
  EXPECT_EQ(t["j"], 3);
  EXPECT_EQ(t["e"], Json::array({1, 3}));
}

TEST_F(CliTest, PhiAndSubsetMap) {
  CliRun r = run({"phi", "--ground", "1,2,3", "--subset", "1"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.report()["payload"]["image"], Json::array({1, 3}));
  r = run({"phi", "--ground", "1,2,3", "--subset", "{}", "--phi", "reversed"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.report()["payload"]["image"], Json::array({1}));
  r = run({"subset-map", "--n", "3", "--x", "{}", "--y", "1,2"});
  EXPECT_EQ(r.code, kOk);
}

TEST_F(CliTest, EveryCommandSucceedsOnSmallInputs) {
  const std::string g = file("g.json", kPendant);
  const std::string k3 = file("k3.json", kTriangle);
  const std::string f = file("f.json", R"({"n":4,"edges":[[1,4],[2,4],[3,4]]})");
  const std::string sigma = file("s.json", R"({"n":3,"cycles":[[1,3,2]]})");
  const std::string tau = file("t.json", R"({"n":3,"cycles":[[1],[2],[3]]})");
  const std::string f3 = file("f3.json", R"({"n":3,"edges":[[1,2],[1,3]]})");
  const std::vector<std::vector<std::string>> commands = {
      {"poly", "--graph", k3},
      {"poly", "--graph", k3, "--k", "1"},
      {"verify", "psi", "--graph", k3},
      {"verify", "psi", "--graph", k3, "--k", "1", "--l", "2"},
      {"stirling", "row", "--n", "5"},
      {"stirling", "to-perm", "--forest", f3},
      {"stirling", "to-forest", "--perm", sigma},
      {"stirling", "psi", "--sigma", sigma, "--tau", tau},
      {"chromatic", "--graph", g},
      {"chromatic", "--graph", g, "--pivot", "last"},
      {"nbc", "--graph", g, "--convention", "max"},
      {"admissible", "--graph", g, "--forest", f},
      {"check", "logconcavity", "--graph", k3},
      {"check", "logconcavity", "--graph", k3, "--p", "1", "--q", "2"},
      {"check", "whitney", "--graph", g},
      {"check", "peo", "--graph", k3},
      {"--jobs", "2", "--output", "json", "verify", "psi", "--graph", g},
  };
  for (const auto& args : commands) {
    const CliRun r = run(args);
    EXPECT_EQ(r.code, kOk) << args[0] << " " << args[1] << "\n" << r.out << r.err;
    EXPECT_NO_THROW(r.report()) << args[0];
  }
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::string g = file("g.json", kPendant);
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"verify", "psi", "--graph", g},
           {"--jobs", "3", "verify", "psi", "--graph", g},
           {"search-movable", "--graph", g},
           {"nbc", "--graph", g}}) {
    const CliRun first = run(args), second = run(args);
    EXPECT_EQ(first.out, second.out);
  }
  std::vector<std::string> one = {"verify", "psi", "--graph", g};
  std::vector<std::string> many = {"--jobs", "4", "verify", "psi", "--graph", g};
  EXPECT_EQ(run(one).out, run(many).out);
}

TEST_F(CliTest, HelpExitsZero) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.err.find("enumerate"), std::string::npos);
}

}  // namespace
}  // namespace isf::cli
