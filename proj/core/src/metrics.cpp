#include "digipath/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace digipath {
namespace {

struct Magnitudes {
  Coord x, y, z;
};

Magnitudes magnitudes(const GridPoint& p, const GridPoint& q) {
  const GridPoint d = p - q;
  return {d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y, d.z < 0 ? -d.z : d.z};
}

}  // namespace

double minkowski_distance(const GridPoint& p, const GridPoint& q, int order) {
  if (order < 1) throw std::invalid_argument("Minkowski order must be >= 1");
  const Magnitudes m = magnitudes(p, q);
  const double e = static_cast<double>(order);
  const double s = std::pow(static_cast<double>(m.x), e) + std::pow(static_cast<double>(m.y), e) +
                   std::pow(static_cast<double>(m.z), e);
  if (order == 1) return s;
  return std::pow(s, 1.0 / e);
}

Coord d6(const GridPoint& p, const GridPoint& q) {
  const Magnitudes m = magnitudes(p, q);
  return m.x + m.y + m.z;
}

Coord d18(const GridPoint& p, const GridPoint& q) {
  const Magnitudes m = magnitudes(p, q);
  const Coord longest = std::max({m.x, m.y, m.z});
  const Coord half_sum = (m.x + m.y + m.z + 1) / 2;
  return std::max(longest, half_sum);
}

Coord d26(const GridPoint& p, const GridPoint& q) {
  const Magnitudes m = magnitudes(p, q);
  return std::max({m.x, m.y, m.z});
}

Coord digital_distance(Neighborhood n, const GridPoint& p, const GridPoint& q) {
  switch (n) {
    case Neighborhood::N6: return d6(p, q);
    case Neighborhood::N18: return d18(p, q);
    case Neighborhood::N26: return d26(p, q);
  }
  return 0;
}

}  // namespace digipath
