#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "k0ring/moduli.hpp"

namespace k0::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  fs::path dir;

  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("k0ring_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  fs::path write(const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return dir / name;
  }
};

TEST_F(Cli, PushforwardText) {
  const auto r = run_cli({"pushforward", "--q", "2", "--r", "1", "--N", "2", "--k", "0"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("1 - a^2*b^2*t^-2"), std::string::npos) << r.out;
}

TEST_F(Cli, PushforwardJson) {
  const auto r = run_cli(
      {"pushforward", "--q", "2", "--r", "1", "--N", "6", "--k", "1", "--chart", "--output", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("value"));
}

TEST_F(Cli, GroebnerOnFile) {
  const auto ideal = write("ideal.txt", "# two generators\nx^2\n6*x\n");
  const auto r = run_cli({"gb", "--ideal", ideal.string(), "--order", "[x]", "--output", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank_Q"], 1);
  EXPECT_EQ(j["free"], false);
  EXPECT_EQ(j["torsion_invariants"], nlohmann::json::array({"6"}));
}

TEST_F(Cli, GroebnerWithInvertibleVariable) {
  const auto ideal = write("ideal.txt", "u*v - 1\nv^2 - 2\n");
  const auto r = run_cli({"gb", "--ideal", ideal.string(), "--order", "[v] > [u~]"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("rank over Q: 2"), std::string::npos) << r.out;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kUsage);
  EXPECT_EQ(run_cli({"ring", "--name", "nowhere"}).code, kUsage);
  EXPECT_EQ(run_cli({"gb", "--ideal", (dir / "missing.txt").string(), "--order", "[x]"}).code,
            kUsage);
  const auto bad = write("bad.txt", "x +\n");
  EXPECT_EQ(run_cli({"gb", "--ideal", bad.string(), "--order", "[x]"}).code, kUsage);
  EXPECT_EQ(run_cli({"pushforward", "--q", "5", "--r", "1", "--N", "6", "--k", "0"}).code,
            kUsage);
  EXPECT_EQ(run_cli({"ring", "--name", "m2", "--data-dir", (dir / "none").string()}).code,
            kUsage);
}

TEST_F(Cli, BudgetExhaustion) {
  EXPECT_EQ(run_cli({"ring", "--name", "m2", "--budget", "10"}).code, kBudget);
  ::setenv("K0RING_STEP_BUDGET", "10", 1);
  const int code = run_cli({"ring", "--name", "m2"}).code;
  ::unsetenv("K0RING_STEP_BUDGET");
  EXPECT_EQ(code, kBudget);
}

TEST_F(Cli, RingJsonIsDeterministic) {
  const auto a = run_cli({"ring", "--name", "m2", "--output", "json"});
  const auto b = run_cli({"ring", "--name", "m2", "--output", "json"});
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["rank_Q"], 18);
  EXPECT_EQ(j["free"], true);
  EXPECT_EQ(j["paper_match"]["rank"], true);
  EXPECT_EQ(j["basis"].size(), 18u);
}

TEST_F(Cli, OutputFile) {
  const auto path = dir / "report.json";
  ASSERT_EQ(run_cli({"ring", "--name", "bg", "--output", "json", "--out", path.string()}).code,
            kOk);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["name"], "BG");
  EXPECT_TRUE(j["rank_Q"].is_null());
}

TEST_F(Cli, PerturbedFixtureIsAMismatch) {
  const auto data = dir / "data";
  fs::create_directories(data);
  fs::copy(default_data_dir() / "fixtures", data / "fixtures", fs::copy_options::recursive);
  const auto rel = data / "fixtures" / "m2_relations.txt";
  std::ifstream in(rel);
  std::stringstream text;
  text << in.rdbuf();
  in.close();
  std::string s = text.str();
  const auto at = s.find("1 - lam^2");
  ASSERT_NE(at, std::string::npos);
  s.replace(at, 9, "1 - 2*lam^2");
  std::ofstream(rel) << s;

  const auto r = run_cli({"ring", "--name", "m2", "--output", "json", "--data-dir", data.string()});
  EXPECT_EQ(r.code, kMismatch);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["paper_match"]["relations"], false);
  ASSERT_FALSE(j["mismatches"].empty());
  EXPECT_EQ(j["mismatches"][0]["difference"], "lam^2");
}

}  // namespace
}  // namespace k0::cli
