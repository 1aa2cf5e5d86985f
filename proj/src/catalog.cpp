#include "spheretri/catalog.hpp"

#include <algorithm>

namespace spheretri {

std::span<const CatalogEntry> catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"G4", 4, {3, 3, 3, 3}, 1},
      {"G5", 5, {3, 3, 4, 4, 4}, 1},
      {"G6,1", 6, {4, 4, 4, 4, 4, 4}, 1},
      {"G6,2", 6, {3, 3, 4, 4, 5, 5}, 2},
      {"G7,1", 7, {3, 4, 4, 4, 5, 5, 5}, 2},
      {"G7,2", 7, {4, 4, 4, 4, 4, 5, 5}, 1},
      {"G7,3", 7, {3, 3, 4, 4, 5, 5, 6}, 1},
      {"G7,4", 7, {3, 3, 4, 4, 4, 6, 6}, 1},
      {"G7,5", 7, {3, 3, 3, 5, 5, 5, 6}, 1},
      {"G8,3", 8, {3, 3, 3, 3, 6, 6, 6, 6}, {}},
      {"G8,2", 8, {3, 3, 3, 4, 5, 6, 6, 6}, {}},
      {"G8,1", 8, {3, 3, 3, 4, 5, 5, 6, 7}, {}},
      {"G8,14", 8, {3, 3, 4, 4, 4, 4, 7, 7}, {}},
      {"G8,10", 8, {3, 3, 4, 4, 4, 5, 6, 7}, {}},
      {"G8,16", 8, {3, 3, 4, 4, 5, 5, 5, 7}, {}},
      {"G8,4", 8, {3, 3, 4, 4, 5, 5, 6, 6}, {}},
      {"G8,27", 8, {3, 3, 4, 4, 5, 5, 6, 6}, {}},
      {"G8,9", 8, {3, 3, 4, 5, 5, 5, 5, 6}, {}},
      {"G8,39", 8, {3, 3, 5, 5, 5, 5, 5, 5}, {}},
      {"G8,11", 8, {3, 4, 4, 4, 4, 5, 6, 6}, {}},
      {"G8,6", 8, {3, 4, 4, 4, 5, 5, 5, 6}, {}},
      {"G8,13", 8, {4, 4, 4, 4, 4, 4, 6, 6}, {}},
      {"G8,28", 8, {4, 4, 4, 4, 5, 5, 5, 5}, {}},
  };
  return entries;
}

std::optional<std::string> catalog_name(const PlaneTriangulation& t) {
  const auto degrees = degree_multiset(t);
  std::vector<std::string_view> hits;
  for (const auto& e : catalog()) {
    if (e.degrees == degrees) hits.push_back(e.name);
  }
  if (hits.empty()) return std::nullopt;
  if (hits.size() == 1) return std::string(hits.front());
  return std::string(canonical_code(t).hex() == kG8_4Code ? "G8,4" : "G8,27");
}

const Representative* find_by_name(const EnumerationResult& result, std::string_view name) {
  const auto entry = std::find_if(catalog().begin(), catalog().end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (entry == catalog().end()) return nullptr;
  const auto it = result.by_n.find(entry->n);
  if (it == result.by_n.end()) return nullptr;
  for (const auto& rep : it->second) {
    if (catalog_name(rep.triangulation) == name) return &rep;
  }
  return nullptr;
}

}  // namespace spheretri
