#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "metabelian/cli.hpp"
#include "support/process.hpp"

using metab::testing::run_process;
using metab::testing::tool_command;
using nlohmann::json;

namespace {

struct InProcess {
  int status;
  std::string out;
  std::string err;
};

InProcess run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = metab::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, StraightenExample) {
  const auto r = run_process(tool_command("straighten --d 4 --expr 'u(1,3)*u(2,4)'"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "u(1,2)*u(3,4) + u(1,4)*u(2,3)\n");
}

TEST(Cli, IsInLExample) {
  const auto r = run_process(tool_command("is-in-l --d 2 --expr '[x1,y2]+[x2,y1]'"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "true\n");
}

TEST(Cli, VerifyNowickiJson) {
  const auto r = run_process(tool_command("verify-nowicki --d 2 --max-degree 6 --format json"));
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "verify-nowicki");
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(j["max_degree"], 6);
  EXPECT_EQ(j["pass"], true);
  ASSERT_EQ(j["degrees"].size(), 6u);
  const std::vector<int> dims{2, 4, 6, 9, 12, 16};
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const json& e = j["degrees"][k];
    EXPECT_EQ(e["n"], static_cast<int>(k) + 1);
    EXPECT_EQ(e["kernel_dim"], dims[k]);
    EXPECT_EQ(e["basis_count"], dims[k]);
    EXPECT_EQ(e["span_rank"], dims[k]);
    EXPECT_EQ(e["expected"], e["actual"]);
    EXPECT_EQ(e["pass"], true);
  }
}

TEST(Cli, PredicatesExitOneOnFalse) {
  EXPECT_EQ(run({"is-in-l", "--d", "2", "--expr", "w(1,2)"}).status, 1);
  EXPECT_EQ(run({"is-constant", "--d", "2", "--expr", "y1"}).status, 1);
  EXPECT_EQ(run({"is-constant", "--d", "2", "--expr", "u(1,2)*x1"}).status, 0);
  EXPECT_EQ(run({"is-lie", "--d", "2", "--expr", "a1*y1 - b1*x1"}).status, 0);
  EXPECT_EQ(run({"is-lie", "--d", "2", "--expr", "a1"}).status, 1);
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate", "--d", "2"}).status, 2);
  EXPECT_EQ(run({"straighten", "--expr", "u(1,2)"}).status, 2);
  EXPECT_EQ(run({"straighten", "--d", "0", "--expr", "u(1,2)"}).status, 2);
  EXPECT_EQ(run({"straighten", "--d", "2", "--expr", "u(1,"}).status, 2);
  EXPECT_EQ(run({"straighten", "--d", "2", "--expr", "u(1,3)"}).status, 2);
  EXPECT_EQ(run({"verify-nowicki", "--d", "2", "--max-degree", "-1"}).status, 2);
  EXPECT_EQ(run({"verify-nowicki", "--d", "2", "--max-degree", "2", "--format", "xml"}).status, 2);
  EXPECT_EQ(run({"delta", "--d", "1", "--expr", "y1", "--alpha", "zz"}).status, 2);
  EXPECT_EQ(run({"is-in-l", "--d", "2", "--expr", "b1"}).status, 2);
  EXPECT_EQ(run({"verify-corollary", "--d", "6", "--max-degree", "8"}).status, 2);
  const auto r = run({"straighten", "--d", "2", "--expr", "u(1,2) +"});
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).status, 0); }

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"delta", "--d", "2", "--expr", "y1*y2"}).out, "x1*y2 + x2*y1\n");
  EXPECT_EQ(run({"delta", "--d", "1", "--expr", "y1^2", "--alpha", "-2"}).out, "4*x1^2 - 4*x1*y1 + y1^2\n");
  EXPECT_EQ(run({"embed", "--d", "2", "--expr", "[x1,y2]"}).out, "a1*y2 - b2*x1\n");
  EXPECT_EQ(run({"bracket", "--d", "1", "--expr", "[a1*x1, q1]"}).out, "a1*x1*y1\n");
  EXPECT_EQ(run({"reduce-mod-l", "--d", "2", "--expr", "w(2,1) + w(1,2)"}).out, "0\n");
  EXPECT_EQ(run({"reduce-mod-l", "--d", "2", "--expr", "a2*x1"}).out, "a1*x2\n");
  EXPECT_EQ(run({"straighten", "--d", "3", "--expr", "x2*u(1,3)"}).out, "x1*u(2,3) + x3*u(1,2)\n");

  const auto list = run({"list-generators", "--d", "1", "--format", "json"});
  EXPECT_EQ(list.status, 0);
  const json j = json::parse(list.out);
  ASSERT_EQ(j["generators"].size(), 1u);
  EXPECT_EQ(j["generators"][0]["family"], "g1");
}

TEST(Cli, GradedReports) {
  const auto c = run({"verify-corollary", "--d", "2", "--max-degree", "4", "--format", "json"});
  EXPECT_EQ(c.status, 0);
  const json j = json::parse(c.out);
  EXPECT_EQ(j["degrees"][0]["n"], 2);
  EXPECT_EQ(j["degrees"][0]["lie_constants_dim"], 4);
  EXPECT_EQ(j["degrees"][2]["not_in_L"], 0);

  const auto k = run({"kernel-dim", "--d", "3", "--max-degree", "3", "--parallel"});
  EXPECT_EQ(k.status, 0);
  EXPECT_NE(k.out.find("n=3 expected=18 actual=18"), std::string::npos);
}
