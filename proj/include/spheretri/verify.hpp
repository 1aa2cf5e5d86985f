#pragma once

// Reference checks and the per-graph report printed by `spheretri verify`.

#include <ostream>
#include <string>
#include <vector>

#include "spheretri/generator.hpp"

namespace spheretri {

struct Check {
  std::string group;  // "count", "degrees", "colorings", "oracle"
  std::string name;
  bool pass = false;
  std::string detail;
};

// Counts for n = 4..8, the 19 degree-table rows, and the 9 stated colouring
// counts. `result` must cover n <= 8.
std::vector<Check> reference_checks(const EnumerationResult& result);
// Canonical vs permutation isomorphism (n <= 8), search vs exhaustive
// colouring counts (n <= 8), polygon search vs cycle scan (n <= 8).
std::vector<Check> oracle_checks(const EnumerationResult& result);

struct ReportRow {
  std::string id;  // shortest distinguishing canonical code hex prefix
  std::string name;
  int n = 0;
  std::vector<int> degrees;
  std::size_t colorings = 0;         // up to renaming
  std::size_t coloring_orbits = 0;  // up to renaming and symmetry
  std::vector<std::string> summaries;
};

inline constexpr std::size_t kReportIdLength = 12;

// Sorted by (n, code).
std::vector<ReportRow> report_rows(const EnumerationResult& result, int max_n);

void print_checks(std::ostream& os, const std::vector<Check>& checks);
void print_report(std::ostream& os, const std::vector<ReportRow>& rows);

}  // namespace spheretri
