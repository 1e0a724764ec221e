#include "digipath/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "digipath/counting.hpp"
#include "digipath/metrics.hpp"
#include "digipath/oracle.hpp"
#include "digipath/tables.hpp"

namespace digipath::cli {
namespace {

constexpr std::int64_t kDefaultPathLimit = 10000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<Neighborhood> parse_neighborhoods(const std::string& token) {
  if (token == "all") return {kAllNeighborhoods.begin(), kAllNeighborhoods.end()};
  if (auto n = parse_neighborhood(token)) return {*n};
  throw UsageError("unknown neighborhood '" + token + "' (expected 6, 18, 26 or all)");
}

Neighborhood parse_single_neighborhood(const std::string& token) {
  if (auto n = parse_neighborhood(token)) return *n;
  throw UsageError("neighborhood must be one of 6, 18, 26 here, got '" + token + "'");
}

GridPoint parse_point_arg(const std::string& text, std::string_view flag) {
  try {
    return parse_point(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

// Shared --from/--to/-n options.
struct PairOptions {
  std::string from = "0,0,0";
  std::string to;
  std::string neighborhood = "all";

  void attach(CLI::App* cmd, bool to_required = true) {
    cmd->add_option("--from", from, "Start point x,y,z")->capture_default_str();
    auto* opt = cmd->add_option("--to", to, "End point x,y,z");
    if (to_required) opt->required();
    cmd->add_option("-n,--neighborhood", neighborhood, "6, 18, 26 or all")
        ->capture_default_str();
  }

  GridPoint displacement() const {
    return parse_point_arg(to, "--to") - parse_point_arg(from, "--from");
  }
};

void print_values(std::ostream& out, const std::vector<Neighborhood>& ns, auto&& value_of) {
  if (ns.size() == 1) {
    out << value_of(ns.front()) << '\n';
    return;
  }
  for (Neighborhood n : ns) out << to_string(n) << ' ' << value_of(n) << '\n';
}

void write_paths(std::ostream& out, const PathList& list, TableFormat format) {
  switch (format) {
    case TableFormat::Text:
      for (const Path& p : list.paths) {
        for (std::size_t s = 0; s < p.size(); ++s) out << (s ? " " : "") << p[s];
        out << '\n';
      }
      break;
    case TableFormat::Csv:
    case TableFormat::Tsv: {
      const char sep = format == TableFormat::Csv ? ',' : '\t';
      out << "path" << sep << "step" << sep << "dx" << sep << "dy" << sep << "dz\n";
      for (std::size_t i = 0; i < list.paths.size(); ++i) {
        for (std::size_t s = 0; s < list.paths[i].size(); ++s) {
          const MoveStep& m = list.paths[i][s];
          out << i << sep << s << sep << m.dx() << sep << m.dy() << sep << m.dz() << '\n';
        }
      }
      break;
    }
    case TableFormat::Json: {
      auto paths = nlohmann::json::array();
      for (const Path& p : list.paths) {
        auto steps = nlohmann::json::array();
        for (const MoveStep& m : p) steps.push_back({m.dx(), m.dy(), m.dz()});
        paths.push_back(std::move(steps));
      }
      nlohmann::json doc = {
          {"target", {list.target.x, list.target.y, list.target.z}},
          {"neighborhood", to_string(list.neighborhood)},
          {"truncated", list.truncated},
          {"paths", std::move(paths)},
      };
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

void write_verify(std::ostream& out, const std::vector<VerifyReport>& reports, TableFormat format) {
  if (format == TableFormat::Json) {
    auto doc = nlohmann::json::array();
    for (const VerifyReport& r : reports) {
      auto mismatches = nlohmann::json::array();
      for (const Mismatch& m : r.mismatches) {
        mismatches.push_back(
            {{"point", {m.point.x, m.point.y, m.point.z}},
             {"kind", m.kind == Mismatch::Kind::FormulaVsOracle ? "formula_vs_oracle"
                                                                : "overlap_identity"},
             {"formula", m.formula.str()},
             {"reference", m.reference.str()}});
      }
      doc.push_back({{"neighborhood", to_string(r.neighborhood)},
                     {"extent", r.extent},
                     {"checked", r.checked},
                     {"mismatches", std::move(mismatches)}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  for (const VerifyReport& r : reports) {
    out << to_string(r.neighborhood) << ": checked " << r.checked << " points in [0.."
        << r.extent << "]^3, " << r.mismatches.size() << " mismatches\n";
    for (const Mismatch& m : r.mismatches) {
      if (m.kind == Mismatch::Kind::FormulaVsOracle) {
        out << "  " << m.point << ": formula " << m.formula << ", oracle " << m.reference << '\n';
      } else {
        out << "  " << m.point << ": max-case form " << m.formula << ", half-case form "
            << m.reference << '\n';
      }
    }
  }
}

TableFormat parse_format(const std::string& token, bool allow_tsv = true) {
  auto f = parse_table_format(token);
  if (!f || (!allow_tsv && *f == TableFormat::Tsv)) {
    throw UsageError("unknown format '" + token + "'");
  }
  return *f;
}

}  // namespace

GridPoint parse_point(std::string_view text) {
  std::array<Coord, 3> c{};
  std::size_t filled = 0;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view field = trim(text.substr(0, comma));
    if (filled == 3) throw std::invalid_argument("expected x,y,z but got more than 3 values");
    if (field.empty()) throw std::invalid_argument("empty coordinate in point");
    const char* begin = field.data();
    const char* end = field.data() + field.size();
    if (*begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, c[filled]);
    if (ec == std::errc::result_out_of_range) throw std::invalid_argument("coordinate out of range");
    if (ec != std::errc{} || ptr != end) {
      throw std::invalid_argument("malformed coordinate '" + std::string(field) + "'");
    }
    ++filled;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (filled != 3) throw std::invalid_argument("expected x,y,z");
  return {c[0], c[1], c[2]};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital distances and exact shortest path counts on the cubic grid", "digipath"};
  app.require_subcommand(1);

  PairOptions distance_opts, count_opts, oracle_opts, paths_opts;

  auto* distance = app.add_subcommand("distance", "Digital distance between two points");
  distance_opts.attach(distance);

  auto* count = app.add_subcommand("count", "Shortest path count by closed form");
  count_opts.attach(count);

  auto* oracle = app.add_subcommand("oracle", "Shortest path count by layered DP search");
  oracle_opts.attach(oracle);

  auto* paths = app.add_subcommand("paths", "List shortest paths in lexicographic step order");
  paths_opts.attach(paths);
  std::int64_t limit = kDefaultPathLimit;
  std::string paths_format = "text";
  paths->add_option("--limit", limit, "Maximum number of paths")->capture_default_str();
  paths->add_option("--format", paths_format, "text, csv, tsv or json")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check closed forms against the oracle on a box");
  std::int64_t extent = 5;
  std::string verify_n = "all";
  std::string verify_format = "text";
  verify->add_option("--extent", extent, "Check 0 <= k <= j <= i <= extent")
      ->capture_default_str();
  verify->add_option("-n,--neighborhood", verify_n, "6, 18, 26 or all")->capture_default_str();
  verify->add_option("--format", verify_format, "text or json")->capture_default_str();

  auto* table = app.add_subcommand("table", "Per-point counts on a distance shell");
  std::string table_n = "26";
  std::int64_t length = -1;
  bool expand = false;
  bool planar = false;
  std::string table_format = "text";
  table->add_option("-n,--neighborhood", table_n, "6, 18 or 26")->capture_default_str();
  table->add_option("--length", length, "Shell distance (or max i with --planar)")->required();
  table->add_flag("--expand-symmetry", expand, "List every sign/permutation image");
  table->add_flag("--planar", planar, "2D 8-neighborhood counts for 0 <= j <= i <= length");
  table->add_option("--format", table_format, "text, csv, tsv or json")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "digipath: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (distance->parsed()) {
      const GridPoint d = distance_opts.displacement();
      print_values(out, parse_neighborhoods(distance_opts.neighborhood),
                   [&](Neighborhood n) { return digital_distance(n, d); });
    } else if (count->parsed()) {
      const CanonicalOffset off = canonicalize(count_opts.displacement());
      print_values(out, parse_neighborhoods(count_opts.neighborhood),
                   [&](Neighborhood n) { return count_paths(n, off).str(); });
    } else if (oracle->parsed()) {
      const GridPoint d = oracle_opts.displacement();
      print_values(out, parse_neighborhoods(oracle_opts.neighborhood),
                   [&](Neighborhood n) { return oracle_count(d, n).str(); });
    } else if (paths->parsed()) {
      if (limit < 1) throw UsageError("--limit must be positive, got " + std::to_string(limit));
      const TableFormat format = parse_format(paths_format);
      const Neighborhood n = parse_single_neighborhood(paths_opts.neighborhood);
      const PathList list = enumerate_shortest_paths(paths_opts.displacement(), n, limit);
      write_paths(out, list, format);
      if (list.truncated) err << "digipath: output truncated at " << limit << " paths\n";
    } else if (verify->parsed()) {
      if (extent < 0) throw UsageError("--extent must be nonnegative");
      const TableFormat format = parse_format(verify_format, false);
      if (format != TableFormat::Text && format != TableFormat::Json) {
        throw UsageError("verify supports --format text or json");
      }
      std::vector<VerifyReport> reports;
      for (Neighborhood n : parse_neighborhoods(verify_n)) {
        reports.push_back(verify_region(extent, n));
      }
      write_verify(out, reports, format);
      const bool ok = std::all_of(reports.begin(), reports.end(),
                                  [](const VerifyReport& r) { return r.ok(); });
      return ok ? kExitOk : kExitMismatch;
    } else if (table->parsed()) {
      if (length < 0) throw UsageError("--length must be nonnegative");
      const TableFormat format = parse_format(table_format);
      if (planar && expand) throw UsageError("--expand-symmetry does not apply to --planar");
      const CountTable t =
          planar ? slice_table_2d(length)
                 : shell_table(parse_single_neighborhood(table_n), length, expand);
      write_table(out, t, format);
    }
  } catch (const UsageError& e) {
    err << "digipath: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace digipath::cli
