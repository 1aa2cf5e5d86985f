#include "spheretri/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "spheretri/catalog.hpp"
#include "spheretri/oracle.hpp"
#include "spheretri/text_format.hpp"
#include "spheretri/tricolor.hpp"

namespace spheretri {

namespace {

std::string list_text(const std::vector<int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

std::string polygons_text(const std::vector<ChordalPolygon>& ps) {
  std::string s;
  for (const auto& p : ps) {
    s += list_text(p.boundary);
    s += ';';
  }
  return s;
}

}  // namespace

std::vector<Check> reference_checks(const EnumerationResult& result) {
  std::vector<Check> checks;
  const std::map<int, std::size_t> counts{{4, 1}, {5, 1}, {6, 2}, {7, 5}, {8, 14}};
  for (const auto& [n, expected] : counts) {
    const auto got = result.count(n);
    checks.push_back({"count", "mu(" + std::to_string(n) + ") = " + std::to_string(expected), got == expected,
                      "found " + std::to_string(got)});
  }

  for (const auto& entry : catalog()) {
    if (entry.n < 7) continue;
    const auto rows = static_cast<std::size_t>(std::count_if(catalog().begin(), catalog().end(), [&](const CatalogEntry& e) {
      return e.degrees == entry.degrees;
    }));
    std::size_t found = 0;
    if (const auto it = result.by_n.find(entry.n); it != result.by_n.end()) {
      for (const auto& rep : it->second) found += degree_multiset(rep.triangulation) == entry.degrees;
    }
    checks.push_back({"degrees", std::string(entry.name) + " " + list_text(entry.degrees), found == rows,
                      std::to_string(found) + " representative(s), " + std::to_string(rows) + " table row(s)"});
  }

  for (const auto& entry : catalog()) {
    if (!entry.stated_colorings) continue;
    const auto* rep = find_by_name(result, entry.name);
    const std::string name = std::string(entry.name) + " colorings = " + std::to_string(*entry.stated_colorings);
    if (!rep) {
      checks.push_back({"colorings", name, false, "graph not found"});
      continue;
    }
    const auto got = count_colorings(rep->triangulation);
    const auto orbits = count_coloring_orbits(rep->triangulation);
    checks.push_back({"colorings", name, got == static_cast<std::size_t>(*entry.stated_colorings),
                      "up to renaming " + std::to_string(got) + "; up to renaming and symmetry " +
                          std::to_string(orbits)});
  }
  return checks;
}

std::vector<Check> oracle_checks(const EnumerationResult& result) {
  std::vector<Check> checks;
  std::mt19937 rng(20240611);
  for (int n = 4; n <= 8; ++n) {
    const auto it = result.by_n.find(n);
    if (it == result.by_n.end()) continue;
    const auto& reps = it->second;
    std::size_t pairs = 0, disagreements = 0;
    for (const auto& a : reps) {
      for (const auto& b : reps) {
        ++pairs;
        // Relabel b so the comparison is not between two canonical forms.
        std::vector<VertexId> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto b2 = relabel(b.triangulation, perm);
        disagreements += is_isomorphic(a.triangulation, b2) != oracle::brute_force_isomorphic(a.triangulation, b2);
      }
    }
    checks.push_back({"oracle", "isomorphism n=" + std::to_string(n), disagreements == 0,
                      std::to_string(pairs) + " ordered pairs, " + std::to_string(disagreements) + " disagreements"});
  }
  for (int n = 4; n <= 8; ++n) {
    const auto it = result.by_n.find(n);
    if (it == result.by_n.end()) continue;
    std::size_t disagreements = 0;
    for (const auto& rep : it->second) {
      const auto total = oracle::brute_force_coloring_count(rep.triangulation, /*fix_base_face=*/n == 8);
      disagreements += total != 6 * count_colorings(rep.triangulation);
    }
    checks.push_back({"oracle", std::string("coloring count n=") + std::to_string(n) + (n == 8 ? " (fixed base face)" : ""),
                      disagreements == 0,
                      std::to_string(it->second.size()) + " graphs, " + std::to_string(disagreements) + " disagreements"});
  }
  std::size_t graphs = 0, disagreements = 0;
  for (const auto& [n, reps] : result.by_n) {
    if (n > 8) continue;
    for (const auto& rep : reps) {
      ++graphs;
      const int cap = std::min(6, n);
      disagreements += polygons_text(enumerate_polygons(rep.triangulation, cap)) !=
                       polygons_text(oracle::brute_force_polygon_scan(rep.triangulation, cap));
    }
  }
  checks.push_back({"oracle", "polygon sites n<=8", disagreements == 0,
                    std::to_string(graphs) + " graphs, " + std::to_string(disagreements) + " disagreements"});
  return checks;
}

std::vector<ReportRow> report_rows(const EnumerationResult& result, int max_n) {
  std::vector<ReportRow> rows;
  for (const auto& [n, reps] : result.by_n) {
    if (n > max_n) continue;
    for (const auto& rep : reps) {
      ReportRow row;
      row.id = rep.code.hex();
      row.name = catalog_name(rep.triangulation).value_or("-");
      row.n = n;
      row.degrees = degree_multiset(rep.triangulation);
      const auto colorings = enumerate_colorings(rep.triangulation);
      row.colorings = colorings.size();
      row.coloring_orbits = count_coloring_orbits(rep.triangulation);
      for (const auto& c : colorings) row.summaries.push_back(summary_text(class_summary(rep.triangulation, c)));
      rows.push_back(std::move(row));
    }
  }
  // Shortest common prefix length (at least kReportIdLength) that keeps ids
  // distinct.
  std::size_t len = kReportIdLength;
  for (bool clash = true; clash; len += 2) {
    std::set<std::string> seen;
    clash = false;
    for (const auto& r : rows) clash |= !seen.insert(r.id.substr(0, len)).second;
    if (!clash) break;
  }
  for (auto& r : rows) r.id = r.id.substr(0, len);
  return rows;
}

void print_checks(std::ostream& os, const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.group << "  " << c.name << "  (" << c.detail << ")\n";
  }
}

void print_report(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "n  name   degrees            colorings  orbits  id\n";
  for (const auto& r : rows) {
    std::string name = r.name;
    std::string degrees = list_text(r.degrees);
    std::string colorings = std::to_string(r.colorings);
    std::string orbits = std::to_string(r.coloring_orbits);
    name.resize(std::max<std::size_t>(name.size(), 5), ' ');
    degrees.resize(std::max<std::size_t>(degrees.size(), 17), ' ');
    colorings.resize(std::max<std::size_t>(colorings.size(), 9), ' ');
    orbits.resize(std::max<std::size_t>(orbits.size(), 6), ' ');
    os << r.n << "  " << name << "  " << degrees << "  " << colorings << "  " << orbits << "  " << r.id << "\n";
    for (const auto& s : r.summaries) os << "     " << s << "\n";
  }
}

}  // namespace spheretri
