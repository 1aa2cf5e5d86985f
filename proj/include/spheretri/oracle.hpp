#pragma once

// Slow, independent checks for canonical labelling, polygon search and
// colouring counts. These deliberately avoid the data structures of the
// modules they check: adjacency matrices with permutation loops, flat ternary
// counters, and plain cycle enumeration.

#include <cstdint>
#include <string>
#include <vector>

#include "spheretri/generator.hpp"
#include "spheretri/plane_map.hpp"

namespace spheretri::oracle {

inline constexpr int kMaxIsomorphismOrder = 9;
inline constexpr int kMaxColoringEdges = 18;
inline constexpr int kMaxPolygonScanOrder = 9;

// Abstract-graph isomorphism by trying every vertex bijection. For simple
// sphere triangulations this coincides with embedded isomorphism up to
// reflection (Whitney). Throws TooLarge above kMaxIsomorphismOrder.
bool brute_force_isomorphic(const PlaneTriangulation& a, const PlaneTriangulation& b);

// Number of rainbow colourings, not quotiented by renaming. With
// `fix_base_face`, the sides of one face are pinned and the result multiplied
// by 6, scanning 3^(E-3) assignments instead of 3^E. Throws TooLarge above
// kMaxColoringEdges edges.
std::uint64_t brute_force_coloring_count(const PlaneTriangulation& t, bool fix_base_face = false);

// Chordal polygons found by enumerating simple cycles and checking each side
// for vertices. Same orientation and normalisation as enumerate_polygons.
std::vector<ChordalPolygon> brute_force_polygon_scan(const PlaneTriangulation& t, int max_size);

struct OracleReport {
  std::string instance;
  std::string method_result;
  std::string oracle_result;
  bool agree = false;
  double seconds = 0.0;
};

// Fills `agree` from the two results.
OracleReport make_report(std::string instance, std::string method_result, std::string oracle_result,
                         double seconds);

}  // namespace spheretri::oracle
