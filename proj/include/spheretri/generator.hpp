#pragma once

// Growth of sphere triangulations by one vertex, and isomorph-free
// enumeration from the tetrahedron.
//
// All three insertion procedures are instances of one edit: a triangulated
// disk without interior vertices is emptied of its chords and a new vertex is
// joined to every vertex on its boundary.
//
//   face insertion     disk = one face           (new vertex of degree 3)
//   edge insertion     disk = two faces on e      (new vertex of degree 4)
//   polygon insertion  disk = any chordal polygon (new vertex of degree k)

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spheretri/canonical.hpp"
#include "spheretri/plane_map.hpp"

namespace spheretri {

// Boundary of a triangulated disk with no interior vertex.
//
// The boundary is oriented so that every dart boundary[i] -> boundary[i+1]
// lies on a face inside the disk; reversing the boundary selects the disk on
// the other side of the same cycle. Normalised polygons start at their
// smallest vertex and keep chords sorted.
struct ChordalPolygon {
  std::vector<VertexId> boundary;
  std::vector<Edge> chords;

  int size() const noexcept { return static_cast<int>(boundary.size()); }
  auto operator<=>(const ChordalPolygon&) const = default;
};

PlaneTriangulation insert_in_face(const PlaneTriangulation& t, const Face& f);
PlaneTriangulation insert_on_edge(const PlaneTriangulation& t, Edge e);
PlaneTriangulation insert_in_polygon(const PlaneTriangulation& t, const ChordalPolygon& p);

// Checks p against t and returns it normalised; throws PolygonInvalid.
ChordalPolygon validate_polygon(const PlaneTriangulation& t, const ChordalPolygon& p);

// Every chordal polygon with 4 <= size <= max_size, one entry per disk side,
// sorted by (size, boundary). Requires 4 <= max_size <= order().
std::vector<ChordalPolygon> enumerate_polygons(const PlaneTriangulation& t, int max_size);

enum class Procedure : std::uint8_t { Face = 1, Edge = 2, Polygon = 3 };

struct Provenance {
  CanonicalCode parent;
  Procedure procedure = Procedure::Face;
  std::string site;
};

struct Representative {
  PlaneTriangulation triangulation;  // canonical form
  CanonicalCode code;
  std::optional<Provenance> provenance;  // empty for the tetrahedron
};

struct EnumerationResult {
  std::map<int, std::vector<Representative>> by_n;  // sorted by code
  int polygon_cap = 0;
  bool polygons_enabled = true;

  std::size_t count(int n) const;
};

struct EnumerationOptions {
  // Largest polygon used by polygon insertion (clamped to the parent order).
  int polygon_cap = 6;
  bool use_polygons = true;
  unsigned threads = 1;
  // Shuffles parent and site order; the resulting code sets must not change.
  std::optional<std::uint64_t> shuffle_seed;
};

inline constexpr int kMaxEnumerationOrder = 11;

EnumerationResult enumerate(int max_n, const EnumerationOptions& options = {});

// Every child of t, deduplicated by code, in first-seen order of the sorted
// site list (faces, edges, polygons).
std::vector<Representative> expand(const PlaneTriangulation& t, const EnumerationOptions& options = {});

}  // namespace spheretri
