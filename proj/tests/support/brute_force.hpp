#pragma once

// Test-only ground truth that shares no code with the library: plain BFS over
// a bounded box, and exhaustive enumeration of step sequences.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <vector>

namespace digipath::testing {

using Vec3 = std::array<int, 3>;

inline std::vector<Vec3> raw_moves(int max_weight, bool planar = false) {
  std::vector<Vec3> out;
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dz = -1; dz <= 1; ++dz) {
        const int w = std::abs(dx) + std::abs(dy) + std::abs(dz);
        if (w == 0 || w > max_weight || (planar && dz != 0)) continue;
        out.push_back({dx, dy, dz});
      }
    }
  }
  return out;
}

/// BFS hop distance and shortest path count from the origin to every point of
/// the cube [-radius, radius]^3.
struct BfsField {
  int radius;
  std::map<Vec3, int> dist;
  std::map<Vec3, std::uint64_t> paths;
};

inline BfsField bfs_field(int max_weight, int radius) {
  BfsField f{radius, {}, {}};
  const auto moves = raw_moves(max_weight);
  std::deque<Vec3> queue{{0, 0, 0}};
  f.dist[{0, 0, 0}] = 0;
  f.paths[{0, 0, 0}] = 1;
  while (!queue.empty()) {
    const Vec3 v = queue.front();
    queue.pop_front();
    for (const Vec3& m : moves) {
      const Vec3 u{v[0] + m[0], v[1] + m[1], v[2] + m[2]};
      if (std::abs(u[0]) > radius || std::abs(u[1]) > radius || std::abs(u[2]) > radius) continue;
      auto it = f.dist.find(u);
      if (it == f.dist.end()) {
        f.dist[u] = f.dist[v] + 1;
        f.paths[u] = f.paths[v];
        queue.push_back(u);
      } else if (it->second == f.dist[v] + 1) {
        f.paths[u] += f.paths[v];
      }
    }
  }
  return f;
}

/// Number of length-`length` move sequences summing to `target`, by trying them all.
inline std::uint64_t enumerate_sequences(const Vec3& target, int length, int max_weight,
                                         bool planar = false) {
  const auto moves = raw_moves(max_weight, planar);
  std::uint64_t hits = 0;
  std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
  while (true) {
    Vec3 sum{0, 0, 0};
    for (std::size_t d : digits) {
      for (int a = 0; a < 3; ++a) sum[a] += moves[d][a];
    }
    if (sum == target) ++hits;
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == moves.size()) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return hits;
}

}  // namespace digipath::testing
