#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symineq/cli.hpp"
#include "symineq/json_io.hpp"

using namespace symineq;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("symineq_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, VerifyRandomPasses) {
  const Outcome r = run({"verify", "--random", "200", "--b", "1", "--a", "1", "--seed", "7"});
  EXPECT_EQ(r.code, cli::kPass) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["config"]["seed"], 7);
  EXPECT_EQ(doc["cases"].size(), 200u);
  EXPECT_EQ(doc["cases"][3]["case"], 3);
  EXPECT_TRUE(doc["summary"]["pass"].get<bool>());
}

TEST(Cli, VerifyPointMassReportsEquality) {
  const auto path = write_temp("pm0.json", R"({"dimension":1,"atoms":[{"point":["0"],"weight":"1"}]})");
  const Outcome r = run({"verify", "--dist", path, "--b", "1/2", "--a", "1"});
  EXPECT_EQ(r.code, cli::kPass);
  const Json doc = Json::parse(r.out);
  EXPECT_TRUE(doc["cases"][0]["checks"]["interval"]["equality"].get<bool>());
  EXPECT_EQ(doc["cases"][0]["checks"]["interval"]["slack"], "0");
}

TEST(Cli, VerifyBadFileIsInputError) {
  const auto bad = write_temp("bad.json", R"({"dimension":1,"atoms":[{"point":["0"],"weight":"1/2"}]})");
  EXPECT_EQ(run({"verify", "--dist", bad}).code, cli::kInputError);
  const auto garbage = write_temp("garbage.json", "not json");
  EXPECT_EQ(run({"verify", "--dist", garbage}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "--dist", "/nonexistent/x.json"}).code, cli::kInputError);
}

TEST(Cli, UnknownFlagsAndBadValuesAreInputErrors) {
  EXPECT_EQ(run({"verify", "--random", "3", "--bogus"}).code, cli::kInputError);
  EXPECT_EQ(run({"extremal", "--a", "0"}).code, cli::kInputError);
  EXPECT_EQ(run({"extremal", "--a", "x"}).code, cli::kInputError);
  EXPECT_EQ(run({"extremal", "--a", "1", "--n", "2,,3"}).code, cli::kInputError);
  EXPECT_EQ(run({"extremal", "--a", "1", "--format", "xml"}).code, cli::kInputError);
  EXPECT_EQ(run({"mc", "--samples", "10"}).code, cli::kInputError);
  EXPECT_EQ(run({"search", "--support", "0"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kPass);
}

TEST(Cli, ExtremalCsv) {
  const Outcome r = run({"extremal", "--a", "1", "--n", "2,10"});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_EQ(r.out,
            "n,ratio_num,ratio_den,ratio_decimal,predicted_limit,gap_decimal\n"
            "2,7,4,1.75000000000000,2,0.250000000000000\n"
            "10,39,20,1.95000000000000,2,0.0500000000000000\n");
  EXPECT_NE(r.err.find("epsilon=1/128"), std::string::npos);
}

TEST(Cli, ExtremalJsonCarriesLimit) {
  const Outcome r = run({"extremal", "--a", "2/3", "--n", "100", "--format", "json"});
  EXPECT_EQ(r.code, cli::kPass);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["table"]["predicted_limit"], 3);
  EXPECT_EQ(doc["config"]["a"], "2/3");
  const Outcome trivial = run({"extremal", "--a", "3", "--n", "10", "--format", "json"});
  EXPECT_EQ(Json::parse(trivial.out)["table"]["predicted_limit"], 1);
}

TEST(Cli, ExtremalOverrides) {
  const Outcome r = run({"extremal", "--a", "1", "--n", "2", "--epsilon", "1/100", "--r", "1/2", "--format", "json"});
  EXPECT_EQ(r.code, cli::kPass);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["table"]["rows"][0]["ratio"], "7/4");
  EXPECT_EQ(doc["config"]["params"], "override");
  EXPECT_EQ(run({"extremal", "--a", "1", "--r", "2"}).code, cli::kInputError);
}

TEST(Cli, CoverInterval) {
  const Outcome r = run({"cover", "--b", "3", "--a", "2", "--d", "1"});
  EXPECT_EQ(r.code, cli::kPass);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["covering_number"], 3);
  EXPECT_EQ(doc["certificate"]["bound"], 3);
  EXPECT_EQ(doc["certificate"]["verification"], "exact");
}

TEST(Cli, CoverRejectsLargePitch) {
  EXPECT_EQ(run({"cover", "--b", "3", "--a", "1", "--d", "2", "--pitch", "2"}).code, cli::kInputError);
}

TEST(Cli, SearchFromExtremal) {
  const Outcome r = run({"search", "--support-from", "extremal", "--a", "1", "--n", "2", "--b", "1"});
  EXPECT_EQ(r.code, cli::kPass);
  const Json doc = Json::parse(r.out);
  EXPECT_GE(parse_rational(doc["result"]["ratio"].get<std::string>()), make_rational(7, 4));
  EXPECT_EQ(doc["config"]["seed"], 0);
}

TEST(Cli, McNormal) {
  const Outcome r = run({"mc", "--law", "normal", "--b", "1", "--a", "1", "--samples", "100000", "--seed", "1"});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_EQ(Json::parse(r.out)["config"]["seed"], 1);
}

TEST(Cli, ReportsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--random", "50", "--seed", "3", "--format", "csv"},
      {"extremal", "--a", "5/4", "--n", "3,7", "--format", "json"},
      {"cover", "--b", "2", "--a", "1", "--d", "2", "--norm-f", "2", "--norm-k", "2"},
      {"search", "--support", "-3/2,-1/2,1,2", "--seed", "5", "--restarts", "4"},
      {"mc", "--law", "exponential", "--samples", "50000", "--seed", "9"},
  };
  for (const auto& c : commands) {
    const Outcome first = run(c), second = run(c);
    EXPECT_EQ(first.out, second.out) << c[0];
    EXPECT_EQ(first.code, second.code);
  }
}

TEST(Cli, WritesOutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "symineq_test_out.csv").string();
  const Outcome r = run({"extremal", "--a", "1", "--n", "2", "--out", path});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,ratio_num,ratio_den,ratio_decimal,predicted_limit,gap_decimal");
}
