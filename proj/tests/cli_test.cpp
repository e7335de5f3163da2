#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "g2aff/json_io.hpp"

namespace g2aff::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json_io::Json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Result r = invoke(args);
  EXPECT_EQ(r.code, kOk) << r.err;
  return json_io::Json::parse(r.out);
}

TEST(Cli, DecomposeJson) {
  const auto j = invoke_json({"decompose", "1", "0"});
  EXPECT_EQ(j["decomposition"].dump(), R"([{"weight":[1,0],"mult":1},{"weight":[0,0],"mult":1}])");
  EXPECT_EQ(j["total_dim"], 15);
  EXPECT_EQ(j["summand_dims"], json_io::Json::parse("[14,1]"));
  EXPECT_EQ(json_io::parse_decomposition(j["decomposition"]), decompose_graded_limit(HighestWeightInput(1, 0)));
}

TEST(Cli, DecomposeText) {
  const Result trivial = invoke({"decompose", "0", "0"});
  EXPECT_EQ(trivial.code, kOk);
  EXPECT_NE(trivial.out.find("V(0,0)"), std::string::npos);
  EXPECT_NE(trivial.out.find("total 1\n"), std::string::npos);

  const Result r = invoke({"decompose", "1", "1"});
  EXPECT_EQ(r.out, "lambda = (1,1)\nV(1,1)  mult 1  dim 64\nV(0,1)  mult 1  dim 7\ntotal 71\n");
  const Result quiet = invoke({"--quiet", "decompose", "1", "1"});
  EXPECT_EQ(quiet.out.find("lambda"), std::string::npos);
}

TEST(Cli, TextAndJsonAgree) {
  for (const auto& [k, l] : {std::pair{2, 3}, std::pair{0, 5}, std::pair{4, 1}}) {
    const auto j = invoke_json({"decompose", std::to_string(k), std::to_string(l)});
    const Result text = invoke({"decompose", std::to_string(k), std::to_string(l)});
    for (std::size_t i = 0; i < j["decomposition"].size(); ++i) {
      const auto& entry = j["decomposition"][i];
      std::ostringstream line;
      line << "V(" << entry["weight"][0] << "," << entry["weight"][1] << ")  mult " << entry["mult"] << "  dim "
           << j["summand_dims"][i] << "\n";
      EXPECT_NE(text.out.find(line.str()), std::string::npos) << line.str();
    }
    EXPECT_NE(text.out.find("total " + j["total_dim"].dump() + "\n"), std::string::npos);

    const auto dim = invoke_json({"dim", std::to_string(k), std::to_string(l)});
    EXPECT_EQ(dim["dim"], j["total_dim"]);
  }
}

TEST(Cli, CharacterJsonRoundTrips) {
  const auto j = invoke_json({"character", "1", "1"});
  const FormalCharacter chi = json_io::parse_character(j);
  EXPECT_EQ(chi, graded_limit_character(HighestWeightInput(1, 1)));
  EXPECT_EQ(chi.total(), 71);
  EXPECT_EQ(j[0]["weight"], json_io::Json::parse("[3,-4]"));
  for (std::size_t i = 1; i < j.size(); ++i) EXPECT_GT(j[i - 1]["weight"], j[i]["weight"]);
}

TEST(Cli, Monomial) {
  EXPECT_EQ(invoke({"monomial", "1", "1", "--variant", "first"}).out, "Y[1,q^0]·Y[2,q^7]\n");
  EXPECT_EQ(invoke({"monomial", "1", "1", "--variant", "second"}).out, "Y[2,q^0]·Y[1,q^7]\n");
  EXPECT_EQ(invoke_json({"monomial", "1", "1"}).dump(), R"([{"node":1,"qexp":0},{"node":2,"qexp":7}])");
  EXPECT_EQ(invoke({"monomial", "1", "1", "--variant", "third"}).code, kUsageError);
}

TEST(Cli, RhoTable) {
  const auto j = invoke_json({"rho-table", "0", "3"});
  std::size_t nonzero = 0;
  for (const auto& row : j) nonzero += row["rho"] != 0 ? 1 : 0;
  EXPECT_EQ(nonzero, 5u);
  EXPECT_EQ(j.size(), positive_real_roots(4).size());

  const Result text = invoke({"rho-table", "0", "3"});
  EXPECT_NE(text.out.find("[-1,-2,1]"), std::string::npos);
}

TEST(Cli, RelationsAndDemazure) {
  const auto rels = invoke_json({"relations", "0", "2"});
  EXPECT_EQ(rels.size(), 7u);
  EXPECT_NE(invoke({"relations", "0", "2"}).out.find("f_2^3 v = 0"), std::string::npos);
  EXPECT_EQ(invoke_json({"demazure-seq", "1", "4"}).dump(),
            R"([{"finite":[-1,0],"level":1},{"finite":[0,-3],"level":1},{"finite":[0,-1],"level":1}])");
}

TEST(Cli, Kr) {
  const auto j = invoke_json({"kr", "1", "2"});
  EXPECT_EQ(j["total_dim"], 92);
  EXPECT_EQ(invoke_json({"kr", "2", "1"})["total_dim"], 7);
  EXPECT_EQ(invoke({"kr", "3", "1"}).code, kUsageError);
}

TEST(Cli, LimitCheck) {
  const auto j = invoke_json({"limit-check", "-J", "1,2", "-D", "1"});
  EXPECT_EQ(j["found"], true);
  EXPECT_EQ(j["n"], 1);
  const Result text = invoke({"limit-check", "-J", "2", "-D", "2"});
  EXPECT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("stable from n = 2"), std::string::npos);
  EXPECT_EQ(invoke({"limit-check", "-J", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"limit-check", "-D", "0"}).code, kUsageError);
}

TEST(Cli, Lemma46) {
  EXPECT_EQ(invoke({"lemma46", "1"}).out, "det = -1/8, nonzero: true\n");
  const auto j = invoke_json({"lemma46", "5"});
  EXPECT_EQ(j["det"], "-1/115322000255221760000000");
  EXPECT_EQ(j["nonzero"], true);
  EXPECT_EQ(invoke({"lemma46", "0"}).code, kUsageError);
}

TEST(Cli, Selftest) {
  const Result r = invoke({"selftest", "--scale", "1"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("5/5 passed"), std::string::npos);
  EXPECT_EQ(invoke_json({"selftest", "--scale", "1"})["passed"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"decompose", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"decompose", "-1", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"decompose", "x", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, ComputationError) {
  const Result r = invoke({"rho-table", "9000000000000000000", "0"});
  EXPECT_EQ(r.code, kComputationError);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
}

TEST(Cli, Idempotent) {
  const std::vector<std::vector<std::string>> commands = {
      {"decompose", "3", "4"}, {"character", "1", "2", "--json"}, {"rho-table", "2", "5"}, {"limit-check", "-D", "2"}};
  for (const auto& c : commands) EXPECT_EQ(invoke(c).out, invoke(c).out);
}

}  // namespace
}  // namespace g2aff::cli
