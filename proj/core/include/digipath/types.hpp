#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace digipath {

using Coord = std::int64_t;

/// Exact path count. Every count produced by this library is nonnegative.
using Count = boost::multiprecision::cpp_int;

/// A point of the unit cubic grid Z^3. Planar points use z == 0.
struct GridPoint {
  Coord x = 0;
  Coord y = 0;
  Coord z = 0;

  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;

  constexpr GridPoint operator-(const GridPoint& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr GridPoint operator+(const GridPoint& o) const { return {x + o.x, y + o.y, z + o.z}; }

  constexpr Coord operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
};

std::ostream& operator<<(std::ostream& os, const GridPoint& p);
std::string to_string(const GridPoint& p);

enum class Neighborhood { N6, N18, N26 };

inline constexpr std::array<Neighborhood, 3> kAllNeighborhoods = {
    Neighborhood::N6, Neighborhood::N18, Neighborhood::N26};

/// 6, 18 or 26.
constexpr int neighbor_count(Neighborhood n) {
  switch (n) {
    case Neighborhood::N6: return 6;
    case Neighborhood::N18: return 18;
    case Neighborhood::N26: return 26;
  }
  return 0;
}

/// Largest |dx|+|dy|+|dz| a single step may have under `n`.
constexpr int max_step_weight(Neighborhood n) {
  switch (n) {
    case Neighborhood::N6: return 1;
    case Neighborhood::N18: return 2;
    case Neighborhood::N26: return 3;
  }
  return 0;
}

std::string_view to_string(Neighborhood n);

/// Accepts "6", "18", "26" with an optional leading 'N' or 'n'.
std::optional<Neighborhood> parse_neighborhood(std::string_view token);

/// One unit move of the grid: each component in {-1, 0, 1}, not all zero.
class MoveStep {
 public:
  /// Throws std::invalid_argument outside {-1,0,1}^3 \ {0}.
  MoveStep(int dx, int dy, int dz);

  int dx() const { return d_[0]; }
  int dy() const { return d_[1]; }
  int dz() const { return d_[2]; }

  /// Number of coordinates the step changes (1 = face, 2 = edge, 3 = vertex).
  int weight() const;

  /// The smallest neighborhood that admits this step.
  Neighborhood minimal_neighborhood() const;
  bool admissible_in(Neighborhood n) const { return weight() <= max_step_weight(n); }

  GridPoint as_point() const { return {d_[0], d_[1], d_[2]}; }

  // Lexicographic on (dx, dy, dz) with -1 < 0 < 1.
  friend auto operator<=>(const MoveStep&, const MoveStep&) = default;

 private:
  std::array<int, 3> d_;
};

std::ostream& operator<<(std::ostream& os, const MoveStep& s);

/// All steps admissible under `n`, sorted lexicographically.
std::vector<MoveStep> admissible_moves(Neighborhood n);

/// A displacement reduced by the symmetries of the cubic grid to i >= j >= k >= 0.
///
/// `axis[r]` names the raw axis that holds the r-th largest magnitude and
/// `sign[a]` is the sign (+1 or -1) of raw axis `a`. Zero components carry +1.
class CanonicalOffset {
 public:
  CanonicalOffset() = default;

  /// Throws std::invalid_argument unless i >= j >= k >= 0.
  CanonicalOffset(Coord i, Coord j, Coord k);

  Coord i() const { return v_[0]; }
  Coord j() const { return v_[1]; }
  Coord k() const { return v_[2]; }
  Coord sum() const { return v_[0] + v_[1] + v_[2]; }

  const std::array<int, 3>& axis() const { return axis_; }
  const std::array<int, 3>& sign() const { return sign_; }

  /// The raw displacement this offset was built from.
  GridPoint displacement() const;
  GridPoint as_point() const { return {v_[0], v_[1], v_[2]}; }

  friend bool operator==(const CanonicalOffset&, const CanonicalOffset&) = default;

  /// Canonical form of the displacement `d`, recording how it was reduced.
  static CanonicalOffset of(const GridPoint& d);

 private:
  std::array<Coord, 3> v_{0, 0, 0};
  std::array<int, 3> axis_{0, 1, 2};
  std::array<int, 3> sign_{1, 1, 1};
};

/// Canonical form of p - q.
CanonicalOffset canonicalize(const GridPoint& p, const GridPoint& q = {});

std::ostream& operator<<(std::ostream& os, const CanonicalOffset& off);

}  // namespace digipath
