#include "digipath/cli.hpp"

#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace digipath::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParsePointTest, Accepts) {
  EXPECT_EQ(parse_point("1,-2,3"), (GridPoint{1, -2, 3}));
  EXPECT_EQ(parse_point(" 4 , +5,-6 "), (GridPoint{4, 5, -6}));
}

TEST(ParsePointTest, Rejects) {
  for (const char* bad : {"", "1,2", "1,2,3,4", "1,,3", "a,b,c", "1.5,2,3", "1,2,3,",
                          "99999999999999999999,0,0"}) {
    EXPECT_THROW(parse_point(bad), std::invalid_argument) << bad;
  }
}

TEST(CliTest, CountExample) {
  const Result r = invoke({"count", "--from", "0,0,0", "--to", "0,3,0", "-n", "18"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "13\n");
  EXPECT_EQ(r.err, "");
}

TEST(CliTest, DistanceExample) {
  const Result r = invoke({"distance", "--from", "0,0,0", "--to", "7,4,2", "-n", "26"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "7\n");
}

TEST(CliTest, VerifyExample) {
  const Result r = invoke({"verify", "--extent", "5", "-n", "all"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("N6: checked 56 points"), std::string::npos);
  EXPECT_NE(r.out.find("N26: checked 56 points"), std::string::npos);
}

TEST(CliTest, CountAndOracleAgree) {
  for (const char* to : {"0,0,0", "3,-1,2", "-5,4,4", "9,5,4", "1,1,1"}) {
    const Result c = invoke({"count", "--from", "1,1,1", "--to", to});
    const Result o = invoke({"oracle", "--from", "1,1,1", "--to", to});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, o.out) << to;
  }
}

TEST(CliTest, AllNeighborhoodsAreLabelled) {
  const Result r = invoke({"count", "--to", "7,4,2"});
  EXPECT_EQ(r.out, "N6 25740\nN18 105\nN26 20482\n");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({"count", "--to", "1,x,2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"count", "--to", "1,1,1", "-n", "8"}).code, kExitUsage);
  EXPECT_EQ(invoke({"paths", "--to", "1,1,1", "-n", "18", "--limit", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"paths", "--to", "1,1,1", "-n", "all"}).code, kExitUsage);
  EXPECT_EQ(invoke({"count"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  const Result r = invoke({"distance", "--to", "1,2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_EQ(r.out, "");
}

TEST(CliTest, Help) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(CliTest, PathsTruncatedNotice) {
  const Result r = invoke({"paths", "--to", "0,3,0", "-n", "18", "--limit", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_NE(r.err.find("truncated"), std::string::npos);
}

TEST(CliTest, PathsJson) {
  const Result r = invoke({"paths", "--to", "1,1,1", "-n", "18", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["paths"].size(), 6u);
  EXPECT_FALSE(doc["truncated"].get<bool>());
  EXPECT_EQ(doc["neighborhood"], "N18");
}

TEST(CliTest, TableCsv) {
  const Result r = invoke({"table", "-n", "6", "--length", "1", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "i,j,k,distance,count\n1,0,0,1,1\n");
}

TEST(CliTest, TableExpandSymmetry) {
  const Result r =
      invoke({"table", "-n", "6", "--length", "1", "--format", "csv", "--expand-symmetry"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
}

TEST(CliTest, TablePlanar) {
  const Result r = invoke({"table", "--planar", "--length", "0", "--format", "tsv"});
  EXPECT_EQ(r.out, "i\tj\tk\tdistance\tcount\n0\t0\t0\t0\t1\n");
}

TEST(CliTest, VerifyJson) {
  const Result r = invoke({"verify", "--extent", "2", "-n", "18", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["checked"], 10);
  EXPECT_TRUE(doc[0]["mismatches"].empty());
}

}  // namespace
}  // namespace digipath::cli
