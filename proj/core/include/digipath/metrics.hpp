#pragma once

#include "digipath/types.hpp"

namespace digipath {

/// Real-valued L_order distance (|dx|^order + |dy|^order + |dz|^order)^(1/order).
/// Throws std::invalid_argument when order < 1.
double minkowski_distance(const GridPoint& p, const GridPoint& q, int order);

/// City-block distance: shortest path length under N6.
Coord d6(const GridPoint& p, const GridPoint& q = {});

/// Shortest path length under N18: max(max|d|, ceil(sum|d| / 2)).
Coord d18(const GridPoint& p, const GridPoint& q = {});

/// Chessboard distance: shortest path length under N26.
Coord d26(const GridPoint& p, const GridPoint& q = {});

/// Dispatches to d6 / d18 / d26.
Coord digital_distance(Neighborhood n, const GridPoint& p, const GridPoint& q = {});

}  // namespace digipath
