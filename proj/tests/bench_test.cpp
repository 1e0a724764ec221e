#include "digipath/bench.hpp"

#include <sstream>

#include <gtest/gtest.h>

namespace digipath {
namespace {

TEST(BenchTest, SampleSizes) {
  EXPECT_EQ(bench_sample_sizes(1), (std::vector<Coord>{1}));
  EXPECT_EQ(bench_sample_sizes(20), (std::vector<Coord>{1, 2, 5, 10, 20}));
  EXPECT_EQ(bench_sample_sizes(7), (std::vector<Coord>{1, 2, 5, 7}));
}

TEST(BenchTest, SmallRunIsEqual) {
  const BenchReport r = bench_compare(1);
  ASSERT_EQ(r.rows.size(), 3u);
  for (const BenchRow& row : r.rows) {
    ASSERT_TRUE(row.equal.has_value());
    EXPECT_TRUE(*row.equal);
  }
  EXPECT_TRUE(r.all_equal());
}

TEST(BenchTest, FormulaMatchesOracleUpToTwenty) {
  const BenchReport r = bench_compare(20);
  for (const BenchRow& row : r.rows) {
    ASSERT_TRUE(row.equal.has_value()) << row.m;
    EXPECT_TRUE(*row.equal) << row.m << ' ' << to_string(row.neighborhood);
  }
}

TEST(BenchTest, OracleSkippedAboveCap) {
  const BenchReport r = bench_compare(200, 10);
  bool skipped = false;
  for (const BenchRow& row : r.rows) {
    if (row.distance > 10) {
      EXPECT_FALSE(row.oracle_time.has_value());
      skipped = true;
    }
  }
  EXPECT_TRUE(skipped);
  EXPECT_TRUE(r.all_equal());
}

TEST(BenchTest, RejectsNonpositiveMax) { EXPECT_THROW(bench_compare(0), std::invalid_argument); }

TEST(BenchTest, CsvHasOneLinePerRow) {
  const BenchReport r = bench_compare(5, 4);
  std::ostringstream os;
  write_bench_csv(os, r);
  const std::string s = os.str();
  EXPECT_EQ(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')), r.rows.size() + 1);
  EXPECT_EQ(s.rfind("m,x,y,z,neighborhood,", 0), 0u);
}

}  // namespace
}  // namespace digipath
