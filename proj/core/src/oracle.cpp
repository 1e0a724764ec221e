#include "digipath/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "digipath/counting.hpp"
#include "digipath/metrics.hpp"

namespace digipath {
namespace {

struct Range {
  Coord lo = 0;
  Coord hi = 0;
  std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
};

// Geodesic points lie within distance d of both endpoints, and every metric
// here dominates the chessboard distance, so this box contains them all.
Range axis_range(Coord t, Coord d) { return {std::max(-d, t - d), std::min(d, t + d)}; }

Count layered_count(const GridPoint& target, Neighborhood n, bool planar) {
  const Coord total = digital_distance(n, target);
  if (total == 0) return 1;

  const Range rx = axis_range(target.x, total);
  const Range ry = axis_range(target.y, total);
  const Range rz = planar ? Range{0, 0} : axis_range(target.z, total);
  const std::size_t sy = ry.size(), sz = rz.size();
  auto index = [&](const GridPoint& p) {
    return (static_cast<std::size_t>(p.x - rx.lo) * sy + static_cast<std::size_t>(p.y - ry.lo)) *
               sz +
           static_cast<std::size_t>(p.z - rz.lo);
  };
  auto inside = [&](const GridPoint& p) {
    return p.x >= rx.lo && p.x <= rx.hi && p.y >= ry.lo && p.y <= ry.hi && p.z >= rz.lo &&
           p.z <= rz.hi;
  };

  std::vector<MoveStep> moves;
  for (const MoveStep& m : admissible_moves(n)) {
    if (!planar || m.dz() == 0) moves.push_back(m);
  }

  // Bucket geodesic points by their distance from the origin.
  std::vector<std::vector<GridPoint>> layers(static_cast<std::size_t>(total) + 1);
  std::vector<char> on_geodesic(rx.size() * sy * sz, 0);
  for (Coord x = rx.lo; x <= rx.hi; ++x) {
    for (Coord y = ry.lo; y <= ry.hi; ++y) {
      for (Coord z = rz.lo; z <= rz.hi; ++z) {
        const GridPoint p{x, y, z};
        const Coord from_origin = digital_distance(n, p);
        if (from_origin + digital_distance(n, target, p) != total) continue;
        layers[static_cast<std::size_t>(from_origin)].push_back(p);
        on_geodesic[index(p)] = 1;
      }
    }
  }

  std::vector<Count> counts(on_geodesic.size());
  counts[index(GridPoint{})] = 1;
  for (std::size_t layer = 1; layer < layers.size(); ++layer) {
    for (const GridPoint& v : layers[layer]) {
      Count sum = 0;
      for (const MoveStep& m : moves) {
        const GridPoint u = v - m.as_point();
        if (!inside(u) || !on_geodesic[index(u)]) continue;
        if (digital_distance(n, u) + 1 != static_cast<Coord>(layer)) continue;
        sum += counts[index(u)];
      }
      counts[index(v)] = std::move(sum);
    }
  }
  return counts[index(target)];
}

void extend_paths(const GridPoint& target, Neighborhood n, const std::vector<MoveStep>& moves,
                  const GridPoint& at, Coord remaining, Path& prefix, PathList& out,
                  std::size_t want) {
  if (out.paths.size() >= want) return;
  if (remaining == 0) {
    out.paths.push_back(prefix);
    return;
  }
  for (const MoveStep& m : moves) {
    const GridPoint next = at + m.as_point();
    if (digital_distance(n, target, next) != remaining - 1) continue;
    prefix.push_back(m);
    extend_paths(target, n, moves, next, remaining - 1, prefix, out, want);
    prefix.pop_back();
    if (out.paths.size() >= want) return;
  }
}

}  // namespace

Count oracle_count(const GridPoint& target, Neighborhood n) {
  return layered_count(target, n, false);
}

Count oracle_count_2d(Coord i, Coord j) {
  return layered_count(GridPoint{i, j, 0}, Neighborhood::N26, true);
}

PathList enumerate_shortest_paths(const GridPoint& target, Neighborhood n, std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("path limit must be positive");
  PathList out;
  out.target = target;
  out.neighborhood = n;
  const std::vector<MoveStep> moves = admissible_moves(n);
  Path prefix;
  // Look for one extra path to learn whether the list was cut short.
  const auto want = static_cast<std::size_t>(limit) + 1;
  extend_paths(target, n, moves, GridPoint{}, digital_distance(n, target), prefix, out, want);
  if (out.paths.size() > static_cast<std::size_t>(limit)) {
    out.paths.pop_back();
    out.truncated = true;
  }
  return out;
}

VerifyReport verify_region(std::int64_t extent, Neighborhood n) {
  VerifyReport report;
  report.extent = extent;
  report.neighborhood = n;
  for (Coord i = 0; i <= extent; ++i) {
    for (Coord j = 0; j <= i; ++j) {
      for (Coord k = 0; k <= j; ++k) {
        const CanonicalOffset off(i, j, k);
        const GridPoint p = off.as_point();
        ++report.checked;
        const Count formula = count_paths(n, off);
        const Count reference = oracle_count(p, n);
        if (formula != reference) {
          report.mismatches.push_back({Mismatch::Kind::FormulaVsOracle, p, formula, reference});
        }
        if (n == Neighborhood::N18 && classify_n18(off) == N18Case::Overlap) {
          const Count by_max = count_n18_maxcase(off);
          const Count by_half = count_n18_halfcase(off);
          if (by_max != by_half) {
            report.mismatches.push_back({Mismatch::Kind::OverlapIdentity, p, by_max, by_half});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace digipath
