#pragma once

#include <cstdint>
#include <vector>

#include "digipath/types.hpp"

// Ground truth by explicit search over the move graph. Nothing in here calls
// the closed forms in counting.hpp except verify_region, which compares them.

namespace digipath {

/// Number of shortest paths from the origin to `target` under `n`, by layered
/// dynamic programming over the lattice points that lie on some shortest path.
Count oracle_count(const GridPoint& target, Neighborhood n);

/// The same DP restricted to the eight planar chessboard moves.
Count oracle_count_2d(Coord i, Coord j);

using Path = std::vector<MoveStep>;

struct PathList {
  GridPoint target;
  Neighborhood neighborhood = Neighborhood::N26;
  std::vector<Path> paths;
  bool truncated = false;
};

/// Depth-first enumeration of shortest paths in lexicographic step order.
/// Returns at most `limit` paths; `truncated` is set iff more exist.
/// Throws std::invalid_argument when limit < 1.
PathList enumerate_shortest_paths(const GridPoint& target, Neighborhood n, std::int64_t limit);

struct Mismatch {
  enum class Kind {
    FormulaVsOracle,  ///< closed form != oracle_count
    OverlapIdentity,  ///< N18 double-sum form != half-sum form
  };
  Kind kind = Kind::FormulaVsOracle;
  GridPoint point;
  Count formula;
  Count reference;
};

struct VerifyReport {
  std::int64_t extent = 0;
  Neighborhood neighborhood = Neighborhood::N26;
  std::int64_t checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares the closed form against oracle_count at every canonical point
/// 0 <= k <= j <= i <= extent. Under N18 the overlap identity is checked too.
VerifyReport verify_region(std::int64_t extent, Neighborhood n);

}  // namespace digipath
