#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "digipath/types.hpp"

namespace digipath {

/// n! exactly. Values are memoized in a process-wide table that is safe to
/// read and extend from several threads.
const Count& factorial(std::int64_t n);

/// n! / (parts[0]! * parts[1]! * ...). Throws std::invalid_argument unless
/// the parts are nonnegative and sum to n.
Count multinomial(std::int64_t n, std::span<const std::int64_t> parts);
Count multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts);

/// Shortest paths under N6: the trinomial coefficient (i+j+k)! / (i! j! k!).
Count count_n6(const CanonicalOffset& off);

/// Shortest paths from (0,0) to (i,j) in the plane under 8-connectivity.
/// Arguments may have any sign and order; they are reduced to |i| >= |j|.
Count count_n8_2d(Coord i, Coord j);

/// Which of the two N18 closed forms apply to a canonical offset.
enum class N18Case {
  MaxCase,   ///< i > j+k+1: only the double-sum form (distance is i)
  HalfCase,  ///< i < j+k: only the half-sum form (distance is ceil((i+j+k)/2))
  Overlap,   ///< i == j+k or i == j+k+1: both apply and agree
};

std::string_view to_string(N18Case c);

N18Case classify_n18(const CanonicalOffset& off);

/// N18 count when the distance is i. Sums over a right-away steps and b
/// right-bottom steps with 2(a+b) <= i-j-k.
/// Throws std::invalid_argument when i < j+k.
Count count_n18_maxcase(const CanonicalOffset& off);

/// N18 count when the distance is L = ceil((i+j+k)/2). For odd sums one step
/// changes a single coordinate and the count gains the weight
/// (L-i)(L-j) + (L-j)(L-k) + (L-k)(L-i).
/// Throws std::invalid_argument when i > j+k+1.
Count count_n18_halfcase(const CanonicalOffset& off);

enum class OverlapCheck {
  None,   ///< use the double-sum form in the overlap region
  Assert, ///< evaluate both forms and throw std::logic_error if they differ
};

Count count_n18(const CanonicalOffset& off, OverlapCheck check = OverlapCheck::None);

/// Shortest paths under N26: f8(i,j) * f8(i,k).
Count count_n26(const CanonicalOffset& off);

/// Dispatches to count_n6 / count_n18 / count_n26.
Count count_paths(Neighborhood n, const CanonicalOffset& off,
                  OverlapCheck check = OverlapCheck::None);

/// Counts shortest paths between two arbitrary grid points.
inline Count count_paths(Neighborhood n, const GridPoint& p, const GridPoint& q = {}) {
  return count_paths(n, canonicalize(p, q));
}

}  // namespace digipath
