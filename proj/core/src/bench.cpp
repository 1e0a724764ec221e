#include "digipath/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "digipath/counting.hpp"
#include "digipath/metrics.hpp"
#include "digipath/oracle.hpp"

namespace digipath {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kFormulaRepeats = 5;

template <typename F>
std::chrono::nanoseconds time_once(F&& f, Count& result) {
  const auto start = Clock::now();
  result = f();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

std::string micros(std::chrono::nanoseconds ns) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << static_cast<double>(ns.count()) / 1000.0;
  return os.str();
}

}  // namespace

bool BenchReport::all_equal() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const BenchRow& r) { return r.equal.has_value() && !*r.equal; });
}

std::vector<Coord> bench_sample_sizes(Coord max_coord) {
  std::vector<Coord> out;
  for (Coord decade = 1; decade <= max_coord; decade *= 10) {
    for (Coord step : {1, 2, 5}) {
      if (decade * step <= max_coord) out.push_back(decade * step);
    }
    if (decade > max_coord / 10) break;
  }
  if (out.empty() || out.back() != max_coord) out.push_back(max_coord);
  return out;
}

BenchReport bench_compare(Coord max_coord, Coord oracle_cap) {
  if (max_coord < 1) throw std::invalid_argument("max_coord must be >= 1");
  BenchReport report;
  report.max_coord = max_coord;
  report.oracle_cap = oracle_cap;
  for (Coord m : bench_sample_sizes(max_coord)) {
    const GridPoint p{m, m / 2, m / 4};
    const CanonicalOffset off = canonicalize(p);
    for (Neighborhood n : kAllNeighborhoods) {
      BenchRow row;
      row.m = m;
      row.point = p;
      row.neighborhood = n;
      row.distance = digital_distance(n, p);
      row.formula_time = std::chrono::nanoseconds::max();
      for (int r = 0; r < kFormulaRepeats; ++r) {
        row.formula_time =
            std::min(row.formula_time, time_once([&] { return count_paths(n, off); }, row.value));
      }
      if (row.distance <= oracle_cap) {
        Count reference;
        row.oracle_time = time_once([&] { return oracle_count(p, n); }, reference);
        row.equal = reference == row.value;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

void write_bench_text(std::ostream& os, const BenchReport& report) {
  os << "closed form vs layered DP oracle, points (m, m/2, m/4), oracle cap d <= "
     << report.oracle_cap << "\n";
  os << std::left << std::setw(6) << "m" << std::setw(16) << "point" << std::setw(6) << "n"
     << std::setw(8) << "d" << std::setw(14) << "formula_us" << std::setw(14) << "oracle_us"
     << std::setw(8) << "equal" << "digits\n";
  for (const BenchRow& r : report.rows) {
    os << std::left << std::setw(6) << r.m << std::setw(16) << to_string(r.point) << std::setw(6)
       << to_string(r.neighborhood) << std::setw(8) << r.distance << std::setw(14)
       << micros(r.formula_time) << std::setw(14)
       << (r.oracle_time ? micros(*r.oracle_time) : std::string("skipped")) << std::setw(8)
       << (r.equal ? (*r.equal ? "yes" : "NO") : "-") << r.value.str().size() << '\n';
  }
}

void write_bench_csv(std::ostream& os, const BenchReport& report) {
  os << "m,x,y,z,neighborhood,distance,formula_ns,oracle_ns,equal,count\n";
  for (const BenchRow& r : report.rows) {
    os << r.m << ',' << r.point.x << ',' << r.point.y << ',' << r.point.z << ','
       << to_string(r.neighborhood) << ',' << r.distance << ',' << r.formula_time.count() << ','
       << (r.oracle_time ? std::to_string(r.oracle_time->count()) : std::string()) << ','
       << (r.equal ? (*r.equal ? "true" : "false") : "") << ',' << r.value.str() << '\n';
  }
}

}  // namespace digipath
