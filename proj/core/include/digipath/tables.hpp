#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "digipath/types.hpp"

namespace digipath {

struct TableEntry {
  GridPoint point;
  Coord distance = 0;
  Count count;
};

/// Per-point shortest path counts. Entries are sorted by point.
struct CountTable {
  Neighborhood neighborhood = Neighborhood::N26;
  /// True for the planar 8-neighborhood slice (points have z == 0).
  bool planar = false;
  /// The common distance of all entries; empty for the planar slice.
  std::optional<Coord> length;
  std::vector<TableEntry> entries;
};

/// Every point at digital distance `length` under `n` with its closed-form
/// count. Only canonical points (i >= j >= k >= 0) unless `expand_symmetry`,
/// which lists all sign and axis-permutation images instead.
CountTable shell_table(Neighborhood n, Coord length, bool expand_symmetry = false);

/// f8(i,j) for 0 <= j <= i <= max_i.
CountTable slice_table_2d(Coord max_i);

enum class TableFormat { Text, Csv, Tsv, Json };

std::optional<TableFormat> parse_table_format(std::string_view token);

/// Counts are written as decimal strings in every format; lines end in LF.
void write_table(std::ostream& os, const CountTable& table, TableFormat format);

}  // namespace digipath
