#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "prvkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = prvkit::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

using Json = nlohmann::ordered_json;

}  // namespace

TEST(Cli, DecomposeJson) {
  CliResult r = run({"decompose", "A1", "3", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], "1");
  EXPECT_EQ(j["decomposition"], Json::parse(R"({"5":1,"3":1,"1":1})"));
  EXPECT_EQ(j["decomposition"].dump(), R"({"5":1,"3":1,"1":1})");
}

TEST(Cli, MinimalType) {
  CliResult r = run({"minimal-type", "A1", "3", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, AllMethodsAgreementReport) {
  CliResult r = run({"decompose", "A2", "1,0", "0,1", "--method=all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agreement: yes"), std::string::npos);
  CliResult j = run({"decompose", "A2", "1,0", "0,1", "--method=all", "--json"});
  Json x = Json::parse(j.out);
  EXPECT_TRUE(x["agree"].get<bool>());
  EXPECT_EQ(x["decomposition"], Json::parse(R"({"1,1":1,"0,0":1})"));
  for (const char* m : {"character", "steinberg", "klimyk", "prv"}) EXPECT_EQ(x["methods"][m], x["decomposition"]);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"decompose", "A2", "1,x", "0,1"}).code, 1);
  EXPECT_EQ(run({"decompose", "A2", "1,0,0", "0,1"}).code, 1);
  EXPECT_EQ(run({"decompose", "A2", "1,0", "0,1", "--method=lr"}).code, 1);
  EXPECT_EQ(run({"decompose", "G2", "9,9", "9,9", "--max-dim", "100"}).code, 2);
  EXPECT_EQ(run({"weyl", "B3", "--max-weyl", "10"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Determinism) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"prv", "A2", "1,1", "1,1", "--kprv", "--json"}, {"prv-det", "B2", "2,0"},
        {"hc", "witness", "A2", "--json"}, {"char", "G2", "1,1", "--full"}}) {
    CliResult a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, JsonRecordsCarrySchema) {
  const std::vector<std::vector<std::string>> cases = {
      {"roots", "G2"},
      {"weyl", "A2", "--list"},
      {"mult", "A2", "1,1", "0,0"},
      {"char", "B2", "1,0"},
      {"prv", "A2", "1,0", "0,1"},
      {"shapovalov-det", "A2", "1,1"},
      {"prv-det", "A2", "1,1"},
      {"central-char", "A1", "3", "--power", "2"},
      {"hc", "invariants", "A1", "-1/2", "3"},
      {"hc", "equivalent", "A1", "1/2", "1", "-5/2", "-1"},
      {"hc", "finite-dim", "A1", "3", "1"},
      {"hc", "class-zero", "A2", "1,0"},
      {"hc", "isoclasses", "A2", "1,1", "0,0"},
      {"hc", "ktype-bound", "A2", "0,0", "0,0", "1,1"},
      {"hc", "sl2-omega", "1", "2"},
      {"selftest", "--criteria", "1"}};
  for (auto args : cases) {
    args.push_back("--json");
    CliResult r = run(args);
    ASSERT_EQ(r.code, 0) << args[0] << ": " << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["schema"], "1") << args[0];
  }
}

TEST(Cli, HcEquivalenceWitnessWord) {
  Json j = Json::parse(run({"hc", "equivalent", "A1", "1/2", "1", "-5/2", "-1", "--json"}).out);
  EXPECT_TRUE(j["equivalent"].get<bool>());
  EXPECT_EQ(j["witness"], "s1");
  EXPECT_EQ(j["p"], Json::parse(R"({"lambda":["1/2"],"nu":[1]})"));
}

TEST(Cli, CentralCharacter) {
  Json j = Json::parse(run({"central-char", "A1", "3", "--json"}).out);
  EXPECT_EQ(j["value"], "15");
}

TEST(Cli, ShapovalovModes) {
  Json j = Json::parse(run({"shapovalov-det", "A1", "2", "--json"}).out);
  EXPECT_EQ(j["direct"], "2*h1^2 - 2*h1");
  EXPECT_EQ(j["ratio"], "2");
  EXPECT_EQ(run({"shapovalov-det", "A1", "2", "--mode", "fast"}).code, 1);
}

TEST(Cli, SelftestSubset) {
  CliResult r = run({"selftest", "--criteria", "1,9"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("criterion  1: PASS"), std::string::npos) << r.out;
}
