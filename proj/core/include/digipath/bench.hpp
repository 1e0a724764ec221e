#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "digipath/types.hpp"

namespace digipath {

struct BenchRow {
  Coord m = 0;
  GridPoint point;  ///< (m, m/2, m/4)
  Neighborhood neighborhood = Neighborhood::N26;
  Coord distance = 0;
  std::chrono::nanoseconds formula_time{};
  /// Empty when the distance exceeds the oracle cap.
  std::optional<std::chrono::nanoseconds> oracle_time;
  /// Empty when the oracle was skipped.
  std::optional<bool> equal;
  Count value;
};

struct BenchReport {
  Coord max_coord = 0;
  Coord oracle_cap = 0;
  std::vector<BenchRow> rows;

  /// False iff some row ran both sides and they disagreed.
  bool all_equal() const;
};

inline constexpr Coord kDefaultOracleCap = 60;

/// Values of m sampled up to max_coord: 1, 2, 5, 10, 20, 50, ... and max_coord.
std::vector<Coord> bench_sample_sizes(Coord max_coord);

/// Times the closed forms against the DP oracle on (m, m/2, m/4) for every
/// neighborhood. The oracle is skipped when the digital distance exceeds
/// `oracle_cap`. Throws std::invalid_argument when max_coord < 1.
BenchReport bench_compare(Coord max_coord, Coord oracle_cap = kDefaultOracleCap);

void write_bench_text(std::ostream& os, const BenchReport& report);
void write_bench_csv(std::ostream& os, const BenchReport& report);

}  // namespace digipath
