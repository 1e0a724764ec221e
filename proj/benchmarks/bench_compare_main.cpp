// Times closed-form counting against the layered DP oracle.
//
//   digipath_bench_compare --max-coord 40 [--oracle-cap 60] [--format csv]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "digipath/bench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Closed-form vs. DP oracle timing", "digipath_bench_compare"};
  digipath::Coord max_coord = 20;
  digipath::Coord oracle_cap = digipath::kDefaultOracleCap;
  std::string format = "text";
  app.add_option("--max-coord", max_coord, "Largest m in the (m, m/2, m/4) family")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--oracle-cap", oracle_cap, "Skip the oracle above this digital distance")
      ->capture_default_str();
  app.add_option("--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const digipath::BenchReport report = digipath::bench_compare(max_coord, oracle_cap);
  if (format == "csv") {
    digipath::write_bench_csv(std::cout, report);
  } else {
    digipath::write_bench_text(std::cout, report);
  }
  if (!report.all_equal()) {
    std::cerr << "digipath_bench_compare: closed form and oracle disagree\n";
    return 2;
  }
  return 0;
}
