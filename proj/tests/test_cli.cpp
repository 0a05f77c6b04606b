#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "aa/regions.hpp"
#include "cli.hpp"

namespace aa::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("aa_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, VerifySum) {
  const auto r = invoke({"verify", "--claim", "sum", "--lambda", "2/5", "--c", "9/20"});
  EXPECT_EQ(r.code, kOk);
  const auto j = parse(r.out);
  EXPECT_EQ(j["status"], "CertifiedOnto");
  EXPECT_EQ(j["seed"][0][0]["rational"], "1/10");
  EXPECT_EQ(j["seed"][0][1]["rational"], "2");
  EXPECT_EQ(j["scaling"]["rational"], "2/5");
  EXPECT_EQ(j["lambda"], "2/5");
}

TEST_F(CliTest, DecimalInputIsExact) {
  const auto a = invoke({"verify", "--claim", "sum", "--lambda", "0.4", "--c", "0.45"});
  const auto b = invoke({"verify", "--claim", "sum", "--lambda", "2/5", "--c", "9/20"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, VerifySqrtSumNecessity) {
  const auto r = invoke({"verify", "--claim", "sqrtsum", "--lambda", "3/10", "--c", "2/5"});
  EXPECT_EQ(r.code, kOk);
  const auto j = parse(r.out);
  EXPECT_EQ(j["status"], "CertifiedNotOnto");
  EXPECT_EQ(j["gap"][0]["sqrtsum"], nlohmann::json::array({"1", "2/5"}));
  EXPECT_EQ(j["gap"][1]["sqrtsum"], nlohmann::json::array({"14/5", "0"}));
  EXPECT_TRUE(j["gap"][0]["decimal_advisory"].is_string());
}

TEST_F(CliTest, ExitCodesFollowStatus) {
  EXPECT_EQ(invoke({"verify", "--claim", "sum", "--lambda", "1/5", "--c", "1/4"}).code, kUncertified);
  EXPECT_EQ(invoke({"verify", "--claim", "div", "--lambda", "7/20", "--c", "1/2"}).code, kOk);
  EXPECT_EQ(invoke({"verify", "--claim", "diff", "--lambda", "1/5", "--c", "1/4"}).code, kUncertified);
  EXPECT_EQ(invoke({"verify", "--claim", "corollary", "--lambda", "1/5", "--c", "1/4"}).code, kUncertified);
  EXPECT_EQ(invoke({"verify", "--claim", "sum", "--lambda", "9/20", "--c", "11/20"}).code, kInvalidParams);
}

TEST_F(CliTest, CheckParams) {
  const auto bad = invoke({"check-params", "--lambda", "2/5", "--c", "7/10"});
  EXPECT_EQ(bad.code, kInvalidParams);
  const auto j = parse(bad.out);
  EXPECT_EQ(j["valid"], false);
  EXPECT_EQ(j["violations"][0], "c+lambda<1");
  const auto good = invoke({"check-params", "--lambda", "2/5", "--c", "9/20"});
  EXPECT_EQ(good.code, kOk);
  const auto g = parse(good.out);
  EXPECT_EQ(g["predicates"]["P_prod"]["holds"], true);
  EXPECT_FALSE(g["predicates"]["P_sqrt"]["trace"].empty());
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--claim", "pow", "--lambda", "2/5", "--c", "9/20"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--claim", "sum", "--lambda", "two", "--c", "9/20"}).code, kUsage);
  EXPECT_EQ(invoke({"oracle", "--op", "pow", "--lambda", "2/5", "--c", "9/20"}).code, kUsage);
  EXPECT_EQ(invoke({"gap-search", "--op", "add", "--lambda", "2/5", "--c", "9/20", "--window", "2,1"}).code, kUsage);
  EXPECT_EQ(invoke({"scan", "--nx", "1", "--ny", "5", "--out", path("x.svg")}).code, kUsage);
  EXPECT_EQ(invoke({"implication", "--from", "P_nope", "--to", "P_sqrt", "--nx", "3", "--ny", "3"}).code, kUsage);
}

TEST_F(CliTest, HelpAndVersion) {
  const auto h = invoke({"--help"});
  EXPECT_EQ(h.code, kOk);
  EXPECT_NE(h.out.find("verify"), std::string::npos);
  const auto v = invoke({"--version"});
  EXPECT_EQ(v.code, kOk);
  EXPECT_EQ(v.out.rfind("aa ", 0), 0u);
}

TEST_F(CliTest, JsonFileOutput) {
  const std::string file = path("v.json");
  const auto r = invoke({"verify", "--claim", "div", "--lambda", "9/20", "--c", "1/2", "--json", file});
  EXPECT_EQ(r.code, kOk);
  const auto j = parse(slurp(file));
  EXPECT_EQ(j["path"], "big");
  EXPECT_EQ(invoke({"verify", "--claim", "div", "--lambda", "9/20", "--c", "1/2", "--json", "/nonexistent/v.json"}).code,
            kIo);
}

TEST_F(CliTest, IdenticalInvocationsAreByteIdentical) {
  const std::vector<std::vector<std::string>> cmds{
      {"verify", "--claim", "sqrtsum", "--lambda", "2/5", "--c", "9/20"},
      {"verify", "--claim", "corollary", "--lambda", "2/5", "--c", "9/20"},
      {"oracle", "--op", "add", "--lambda", "1/5", "--c", "1/4", "--depth", "5", "--eps", "1/20"},
      {"check-params", "--lambda", "9/25", "--c", "9614/25000"}};
  for (const auto& c : cmds) {
    const auto a = invoke(c);
    const auto b = invoke(c);
    EXPECT_EQ(a.out, b.out) << c[0];
    EXPECT_FALSE(a.out.empty());
  }
}

TEST_F(CliTest, MachineOutputHasNoFloats) {
  const auto r = invoke({"verify", "--claim", "corollary", "--lambda", "2/5", "--c", "9/20"});
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& j) {
    EXPECT_FALSE(j.is_number_float()) << j.dump();
    if (j.is_structured()) {
      for (const auto& x : j) walk(x);
    }
  };
  walk(parse(r.out));
}

TEST_F(CliTest, OracleAndGapSearch) {
  const auto o = invoke({"oracle", "--op", "sqrtsum", "--lambda", "3/10", "--c", "2/5", "--depth", "8", "--window",
                         "1.6,1.7"});
  EXPECT_EQ(o.code, kOk);
  const auto j = parse(o.out);
  EXPECT_EQ(j["op"], "sqrtsum");
  EXPECT_EQ(j["depth"], 8);
  EXPECT_FALSE(j["gaps"].empty());

  const auto d = parse(invoke({"oracle", "--op", "div", "--lambda", "2/5", "--c", "9/20", "--depth", "3"}).out);
  EXPECT_FALSE(d["restriction_note"].get<std::string>().empty());

  const auto e = parse(invoke({"oracle", "--op", "add", "--lambda", "1/5", "--c", "1/4", "--depth", "4", "--eps",
                               "1/50"})
                           .out);
  EXPECT_EQ(e["density"]["dense"], false);
  EXPECT_FALSE(e["density"]["worst_gap"].is_null());

  const auto g = invoke({"gap-search", "--op", "add", "--lambda", "2/5", "--c", "9/20", "--depth", "10", "--window",
                         "0,2"});
  EXPECT_EQ(g.code, kOk);
  EXPECT_TRUE(parse(g.out)["gaps"].empty());
}

TEST_F(CliTest, ScanWritesImageAndCsvTwin) {
  const auto r = invoke({"scan", "--nx", "20", "--ny", "20", "--out", path("fig.svg"), "--figure", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string csv = slurp(path("fig.csv"));
  EXPECT_EQ(parse_map_csv(csv).points.size(), 400u);
  EXPECT_NE(slurp(path("fig.svg")).find("<svg"), std::string::npos);
  const auto j = parse(r.out);
  EXPECT_EQ(j["points"], 400);

  const auto t1 = invoke({"--threads", "1", "scan", "--nx", "20", "--ny", "20", "--out", path("a.csv")});
  const auto t3 = invoke({"scan", "--threads", "3", "--nx", "20", "--ny", "20", "--out", path("b.csv")});
  EXPECT_EQ(t1.code, kOk);
  EXPECT_EQ(t3.code, kOk);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a.csv")), csv);

  EXPECT_EQ(invoke({"scan", "--nx", "4", "--ny", "4", "--out", "/nonexistent/x.pgm"}).code, kIo);
}

TEST_F(CliTest, Implication) {
  const auto ok = invoke({"implication", "--from", "P_prod", "--to", "P_sqrt", "--nx", "50", "--ny", "50"});
  EXPECT_EQ(ok.code, kOk);
  EXPECT_EQ(ok.out, "lambda_num,lambda_den,c_num,c_den,reason\n");
  const auto bad = invoke({"implication", "--from", "P_sqrt", "--to", "P_prod", "--nx", "50", "--ny", "50"});
  EXPECT_EQ(bad.code, kCounterexamples);
  EXPECT_GT(std::count(bad.out.begin(), bad.out.end(), '\n'), 1);
  const auto to_file = invoke(
      {"implication", "--from", "P_sqrt", "--to", "P_prod", "--nx", "50", "--ny", "50", "--out", path("ce.csv")});
  EXPECT_EQ(to_file.code, kCounterexamples);
  EXPECT_EQ(slurp(path("ce.csv")), bad.out);
}

}  // namespace
}  // namespace aa::cli
