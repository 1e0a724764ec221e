#include "digipath/tables.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <set>

#include <json.hpp>

#include "digipath/counting.hpp"
#include "digipath/metrics.hpp"

namespace digipath {
namespace {

// Distinct images of a canonical point under axis permutations and sign flips.
std::set<GridPoint> symmetry_images(const GridPoint& p) {
  std::set<GridPoint> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      std::array<Coord, 3> c{};
      for (int a = 0; a < 3; ++a) {
        const Coord v = p[perm[a]];
        c[a] = (mask >> a) & 1 ? -v : v;
      }
      out.insert(GridPoint{c[0], c[1], c[2]});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void write_delimited(std::ostream& os, const CountTable& table, char sep) {
  os << 'i' << sep << 'j' << sep << 'k' << sep << "distance" << sep << "count\n";
  for (const TableEntry& e : table.entries) {
    os << e.point.x << sep << e.point.y << sep << e.point.z << sep << e.distance << sep
       << e.count.str() << '\n';
  }
}

void write_text(std::ostream& os, const CountTable& table) {
  if (table.planar) {
    os << "# 8-neighborhood (2D) shortest path counts\n";
  } else {
    os << "# " << to_string(table.neighborhood) << " shortest path counts";
    if (table.length) os << ", length " << *table.length;
    os << '\n';
  }
  std::size_t width = 0;
  for (const TableEntry& e : table.entries) width = std::max(width, to_string(e.point).size());
  for (const TableEntry& e : table.entries) {
    const std::string point = to_string(e.point);
    os << point << std::string(width - point.size() + 2, ' ') << e.distance << "  "
       << e.count.str() << '\n';
  }
}

void write_json(std::ostream& os, const CountTable& table) {
  auto rows = nlohmann::json::array();
  for (const TableEntry& e : table.entries) {
    rows.push_back({{"point", {e.point.x, e.point.y, e.point.z}},
                    {"distance", e.distance},
                    {"count", e.count.str()}});
  }
  os << rows.dump(2) << '\n';
}

}  // namespace

CountTable shell_table(Neighborhood n, Coord length, bool expand_symmetry) {
  CountTable table;
  table.neighborhood = n;
  table.length = length;
  // Every metric is at least the largest coordinate, so i <= length.
  for (Coord i = 0; i <= length; ++i) {
    for (Coord j = 0; j <= i; ++j) {
      for (Coord k = 0; k <= j; ++k) {
        const GridPoint p{i, j, k};
        if (digital_distance(n, p) != length) continue;
        const Count count = count_paths(n, CanonicalOffset(i, j, k));
        if (!expand_symmetry) {
          table.entries.push_back({p, length, count});
          continue;
        }
        for (const GridPoint& image : symmetry_images(p)) {
          table.entries.push_back({image, length, count});
        }
      }
    }
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const TableEntry& a, const TableEntry& b) { return a.point < b.point; });
  return table;
}

CountTable slice_table_2d(Coord max_i) {
  CountTable table;
  table.planar = true;
  for (Coord i = 0; i <= max_i; ++i) {
    for (Coord j = 0; j <= i; ++j) {
      table.entries.push_back({GridPoint{i, j, 0}, i, count_n8_2d(i, j)});
    }
  }
  return table;
}

std::optional<TableFormat> parse_table_format(std::string_view token) {
  if (token == "text") return TableFormat::Text;
  if (token == "csv") return TableFormat::Csv;
  if (token == "tsv") return TableFormat::Tsv;
  if (token == "json") return TableFormat::Json;
  return std::nullopt;
}

void write_table(std::ostream& os, const CountTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::Text: write_text(os, table); break;
    case TableFormat::Csv: write_delimited(os, table, ','); break;
    case TableFormat::Tsv: write_delimited(os, table, '\t'); break;
    case TableFormat::Json: write_json(os, table); break;
  }
}

}  // namespace digipath
