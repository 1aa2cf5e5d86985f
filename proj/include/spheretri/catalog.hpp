#pragma once

// Reference data for n <= 8: the conventional names G4, G5, G6,1 ... G8,39 of
// the sphere triangulations, their degree multisets, and the hand-derived
// colouring counts recorded for n <= 7. Names are matched by degree multiset,
// which is unique for n <= 8 except for G8,4 / G8,27; that pair is told apart
// by canonical code (G8,4 is the one obtained from G7,5 by a single
// insertion).

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spheretri/generator.hpp"
#include "spheretri/plane_map.hpp"

namespace spheretri {

struct CatalogEntry {
  std::string_view name;
  int n = 0;
  std::vector<int> degrees;  // sorted
  // Colourings up to renaming as stated by the hand enumeration (n <= 7).
  std::optional<int> stated_colorings;
};

// Rows in table order: n <= 6, then the n = 7 and n = 8 degree tables.
std::span<const CatalogEntry> catalog();

// Full canonical code of G8,4.
inline constexpr std::string_view kG8_4Code =
    "0203040001040506030001020607080400010308070502000204070600020507030003060504080003070400";

std::optional<std::string> catalog_name(const PlaneTriangulation& t);
// Representative carrying a catalog name, if the result has it.
const Representative* find_by_name(const EnumerationResult& result, std::string_view name);

}  // namespace spheretri
