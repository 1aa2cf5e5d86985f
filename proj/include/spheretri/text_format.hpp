#pragma once

// Line-oriented rotation format:
//
//     4 | 0: 1,2,3 | 1: 0,3,2 | 2: 0,1,3 | 3: 0,2,1
//
// vertex count, then one field per vertex (0-based, in order) listing its
// neighbours in rotation order. The writer emits exactly this spacing; the
// reader tolerates extra blanks and applies full triangulation validation.

#include <string>
#include <string_view>

#include "spheretri/plane_map.hpp"
#include "spheretri/tricolor.hpp"

namespace spheretri {

std::string to_rotation_text(const PlaneTriangulation& t);
// Throws ParseError on malformed text and the build errors of
// PlaneTriangulation::build on invalid embeddings.
PlaneTriangulation parse_rotation_text(std::string_view line);

// One undirected graph block; faces are listed as comments.
std::string to_dot(const PlaneTriangulation& t, std::string_view name);

// "0-1:r 0-2:g ..." in edges(t) order.
std::string coloring_text(const PlaneTriangulation& t, const EdgeColoring& c);
// "r[1,4c] g[2,3] b[2,3]": component edge counts per colour, "c" marks cycles.
std::string summary_text(const ColoringClassSummary& s);

}  // namespace spheretri
