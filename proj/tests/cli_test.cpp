#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "rectdist/barcode.hpp"

namespace rectdist::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rectdist_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                       "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(CliTest, Dist) {
  Result r = run_cli({"dist", "(0,2) x (0,2)", "(1,3) x (1,3)"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "1\n");

  r = run_cli({"dist", "(0,1)", "(0,1)"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "0\n");

  EXPECT_EQ(run_cli({"dist", "(0,1) x (0,10)", "[100,101] x [0,10]"}).out, "1/2\n");
  EXPECT_EQ(run_cli({"dist", "(0,inf)", "(-inf,0)"}).out, "inf\n");
}

TEST_F(CliTest, DistErrors) {
  Result r = run_cli({"dist", "(0,1)", "(0,1) x (0,1)"});
  EXPECT_EQ(r.code, kDimensionMismatch);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());

  EXPECT_EQ(run_cli({"dist", "(0,1", "(0,1)"}).code, kUsageError);
  EXPECT_EQ(run_cli({"dist", "(1,0)", "(0,1)"}).code, kUsageError);
  EXPECT_EQ(run_cli({"dist", "(0,1)"}).code, kUsageError);
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({"--help"}).code, kSuccess);
}

TEST_F(CliTest, Bottleneck) {
  const std::string a = file("a.txt", "(0,2) x (0,2)\n");
  const std::string b = file("b.txt", "(1,3) x (1,3)\n");
  const std::string z = file("z.txt", "(0,10) x (0,1)\n");
  const std::string empty = file("empty.txt", "");

  EXPECT_EQ(run_cli({"bottleneck", a, b}).out, "1\n");
  EXPECT_EQ(run_cli({"bottleneck", z, empty}).out, "1/2\n");
  EXPECT_EQ(run_cli({"bottleneck", a, a}).out, "0\n");
  EXPECT_EQ(run_cli({"bottleneck", empty, empty}).out, "0\n");
}

TEST_F(CliTest, BottleneckWritesMatching) {
  const std::string a = file("a.txt", "(0,2) x (0,2)\n(5,6) x (5,6)\n");
  const std::string b = file("b.txt", "(0,2) x (0,2)\n");
  const std::string m = (dir_ / "m.json").string();
  const Result r = run_cli({"bottleneck", a, b, "--matching", m});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "1/2\n");
  const auto j = nlohmann::json::parse(slurp(m));
  EXPECT_EQ(j["pairs"], nlohmann::json::parse("[[0, 0]]"));
  EXPECT_EQ(j["unmatched_left"], nlohmann::json::parse("[1]"));
  EXPECT_EQ(j["unmatched_right"], nlohmann::json::parse("[]"));
}

TEST_F(CliTest, BottleneckJsonFormat) {
  const std::string a = file("a.json", R"({"dim": 2, "bars": [{"lower": ["0", "0"], "upper": ["2", "2"]}]})");
  const std::string b = file("b.json", R"({"dim": 2, "bars": [{"lower": ["1", "1"], "upper": ["3", "3"]}]})");
  EXPECT_EQ(run_cli({"--format", "json", "bottleneck", a, b}).out, "1\n");
  EXPECT_EQ(run_cli({"bottleneck", "--format", "json", a, b}).out, "1\n");
  EXPECT_EQ(run_cli({"--format", "xml", "bottleneck", a, b}).code, kUsageError);
}

TEST_F(CliTest, BottleneckErrors) {
  const std::string one = file("one.txt", "(0,1)\n");
  const std::string two = file("two.txt", "(0,1) x (0,1)\n");
  const std::string bad = file("bad.txt", "(0,1)\n(0;1)\n");
  EXPECT_EQ(run_cli({"bottleneck", one, two}).code, kDimensionMismatch);
  const Result r = run_cli({"bottleneck", one, bad});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"bottleneck", one, (dir_ / "missing.txt").string()}).code, kUsageError);
  EXPECT_EQ(run_cli({"bottleneck", one, two + "x"}).code, kUsageError);
}

TEST_F(CliTest, Verify) {
  const std::string a = file("a.txt", "(0,2) x (0,2)\n");
  const std::string b = file("b.txt", "(1,3) x (1,3)\n");
  Result r = run_cli({"verify", a, b});
  EXPECT_EQ(r.code, kSuccess) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  const std::string empty = file("empty.txt", "");
  r = run_cli({"verify", empty, empty});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyTrialsAndSkip) {
  Result g = run_cli({"gen", "--count", "10", "--seed", "3", "--inf-prob", "0.1"});
  ASSERT_EQ(g.code, kSuccess);
  const std::string a = file("a.txt", g.out);
  g = run_cli({"gen", "--count", "9", "--seed", "4"});
  const std::string b = file("b.txt", g.out);
  const Result r = run_cli({"verify", a, b, "--trials", "5"});
  EXPECT_EQ(r.code, kSuccess) << r.out;
  EXPECT_NE(r.out.find("SKIP"), std::string::npos);
  EXPECT_NE(r.out.find("trial 4"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, Gen) {
  EXPECT_EQ(run_cli({"gen", "--count", "0"}).out, "");

  const std::vector<std::string> args{"gen", "--count", "5", "--dim", "2", "--range=-5..5", "--inf-prob", "0.1",
                                      "--seed", "7"};
  const Result first = run_cli(args);
  ASSERT_EQ(first.code, kSuccess) << first.err;
  EXPECT_EQ(run_cli(args).out, first.out);
  const Barcode b = parse_barcode(first.out, Format::Text);
  EXPECT_EQ(b.size(), 5u);
  EXPECT_EQ(b.dim(), 2u);
  for (const auto& bar : b.bars()) {
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_TRUE(!bar.lower(i).is_finite() || (bar.lower(i) >= ExtReal(-5) && bar.lower(i) <= ExtReal(5)));
      EXPECT_TRUE(!bar.upper(i).is_finite() || (bar.upper(i) >= ExtReal(-5) && bar.upper(i) <= ExtReal(5)));
    }
  }
  EXPECT_NE(run_cli({"gen", "--count", "5", "--seed", "8"}).out, first.out);
}

TEST_F(CliTest, GenRangeWithSeparateValue) {
  const Result r = run_cli({"gen", "--count", "3", "--range", "-2..2", "--dim", "1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(parse_barcode(r.out, Format::Text).size(), 3u);
}

TEST_F(CliTest, GenJsonRoundTrips) {
  const Result r = run_cli({"--format", "json", "gen", "--count", "4", "--dim", "3", "--inf-prob", "0.5"});
  ASSERT_EQ(r.code, kSuccess);
  const Barcode b = parse_barcode(r.out, Format::Json);
  EXPECT_EQ(b.size(), 4u);
  EXPECT_EQ(serialize_barcode(b, Format::Json), r.out);
}

TEST_F(CliTest, GenRejectsBadParameters) {
  EXPECT_EQ(run_cli({"gen", "--count", "1", "--dim", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gen", "--count", "1", "--inf-prob", "1.5"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gen", "--count", "1", "--range=3..3"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gen", "--count", "1", "--range=a..b"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gen", "--count", "-1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gen"}).code, kUsageError);
}

}  // namespace
}  // namespace rectdist::cli
