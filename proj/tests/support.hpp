#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spheretri/catalog.hpp"
#include "spheretri/generator.hpp"

namespace spheretri::testing {

// Enumeration up to n = 9, computed once per test binary.
inline const EnumerationResult& enumerated() {
  static const EnumerationResult result = enumerate(9);
  return result;
}

inline const PlaneTriangulation& named(std::string_view name) {
  const auto* rep = find_by_name(enumerated(), name);
  if (!rep) throw std::runtime_error("no graph named " + std::string(name));
  return rep->triangulation;
}

inline std::vector<const Representative*> up_to(int max_n) {
  std::vector<const Representative*> out;
  for (const auto& [n, reps] : enumerated().by_n) {
    if (n > max_n) continue;
    for (const auto& r : reps) out.push_back(&r);
  }
  return out;
}

inline std::vector<VertexId> random_permutation(int n, std::mt19937& rng) {
  std::vector<VertexId> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace spheretri::testing
