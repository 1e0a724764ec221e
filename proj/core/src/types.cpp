#include "digipath/types.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace digipath {

std::ostream& operator<<(std::ostream& os, const GridPoint& p) {
  return os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
}

std::string to_string(const GridPoint& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::string_view to_string(Neighborhood n) {
  switch (n) {
    case Neighborhood::N6: return "N6";
    case Neighborhood::N18: return "N18";
    case Neighborhood::N26: return "N26";
  }
  return "?";
}

std::optional<Neighborhood> parse_neighborhood(std::string_view token) {
  if (!token.empty() && (token.front() == 'N' || token.front() == 'n')) token.remove_prefix(1);
  if (token == "6") return Neighborhood::N6;
  if (token == "18") return Neighborhood::N18;
  if (token == "26") return Neighborhood::N26;
  return std::nullopt;
}

MoveStep::MoveStep(int dx, int dy, int dz) : d_{dx, dy, dz} {
  for (int c : d_) {
    if (c < -1 || c > 1) throw std::invalid_argument("move step component outside {-1,0,1}");
  }
  if (dx == 0 && dy == 0 && dz == 0) throw std::invalid_argument("move step must be nonzero");
}

int MoveStep::weight() const { return std::abs(d_[0]) + std::abs(d_[1]) + std::abs(d_[2]); }

Neighborhood MoveStep::minimal_neighborhood() const {
  switch (weight()) {
    case 1: return Neighborhood::N6;
    case 2: return Neighborhood::N18;
    default: return Neighborhood::N26;
  }
}

std::ostream& operator<<(std::ostream& os, const MoveStep& s) {
  return os << '(' << s.dx() << ',' << s.dy() << ',' << s.dz() << ')';
}

std::vector<MoveStep> admissible_moves(Neighborhood n) {
  std::vector<MoveStep> out;
  out.reserve(static_cast<std::size_t>(neighbor_count(n)));
  // Nested loops in -1,0,1 order emit steps already sorted.
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dz = -1; dz <= 1; ++dz) {
        const int w = std::abs(dx) + std::abs(dy) + std::abs(dz);
        if (w == 0 || w > max_step_weight(n)) continue;
        out.emplace_back(dx, dy, dz);
      }
    }
  }
  return out;
}

CanonicalOffset::CanonicalOffset(Coord i, Coord j, Coord k) : v_{i, j, k} {
  if (!(i >= j && j >= k && k >= 0)) {
    std::ostringstream os;
    os << "offset (" << i << ',' << j << ',' << k << ") is not canonical (need i >= j >= k >= 0)";
    throw std::invalid_argument(os.str());
  }
}

CanonicalOffset CanonicalOffset::of(const GridPoint& d) {
  CanonicalOffset off;
  std::array<Coord, 3> mag{};
  for (int a = 0; a < 3; ++a) {
    off.sign_[a] = d[a] < 0 ? -1 : 1;
    mag[a] = d[a] < 0 ? -d[a] : d[a];
  }
  std::stable_sort(off.axis_.begin(), off.axis_.end(),
                   [&](int lhs, int rhs) { return mag[lhs] > mag[rhs]; });
  for (int r = 0; r < 3; ++r) off.v_[r] = mag[off.axis_[r]];
  return off;
}

GridPoint CanonicalOffset::displacement() const {
  std::array<Coord, 3> raw{};
  for (int r = 0; r < 3; ++r) raw[axis_[r]] = v_[r];
  for (int a = 0; a < 3; ++a) raw[a] *= sign_[a];
  return {raw[0], raw[1], raw[2]};
}

CanonicalOffset canonicalize(const GridPoint& p, const GridPoint& q) {
  return CanonicalOffset::of(p - q);
}

std::ostream& operator<<(std::ostream& os, const CanonicalOffset& off) {
  return os << '(' << off.i() << ',' << off.j() << ',' << off.k() << ')';
}

}  // namespace digipath
