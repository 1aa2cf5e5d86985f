#pragma once

// Sphere triangulations stored as rotation systems.
//
// Orientation convention (used everywhere in the library): rotation(v) lists
// the neighbours of v in clockwise order as seen from outside the sphere.
// Faces are traced with the rule
//
//     dart u->v is followed by dart v->w, where w = next_after(v, u)
//
// i.e. w is the neighbour that follows u in the rotation of v. Every dart lies
// on exactly one traced face.

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spheretri/error.hpp"

namespace spheretri {

using VertexId = int;
using Rotation = std::vector<std::vector<VertexId>>;

// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge of(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

// Face as traced: darts v[0]->v[1], v[1]->v[2], v[2]->v[0].
// Faces returned by faces() are rotated so that v[0] is the smallest id.
struct Face {
  std::array<VertexId, 3> v{};
  auto operator<=>(const Face&) const = default;
};

class PlaneTriangulation {
 public:
  // Validates eagerly; throws Error naming the first offending vertex, edge or
  // face.
  static PlaneTriangulation build(Rotation rotation);

  int order() const noexcept { return static_cast<int>(rot_.size()); }
  int edge_count() const noexcept { return 3 * order() - 6; }
  int face_count() const noexcept { return 2 * order() - 4; }

  std::span<const VertexId> rotation(VertexId v) const { return rot_[static_cast<std::size_t>(v)]; }
  const Rotation& rotations() const noexcept { return rot_; }
  int degree(VertexId v) const { return static_cast<int>(rot_[static_cast<std::size_t>(v)].size()); }

  bool adjacent(VertexId a, VertexId b) const;
  // Neighbour following / preceding u in the rotation of v. u must be a
  // neighbour of v.
  VertexId next_after(VertexId v, VertexId u) const;
  VertexId prev_before(VertexId v, VertexId u) const;
  // Third vertex of the face traced from dart u->v.
  VertexId face_apex(VertexId u, VertexId v) const { return next_after(v, u); }

  bool operator==(const PlaneTriangulation&) const = default;

 private:
  explicit PlaneTriangulation(Rotation rot) : rot_(std::move(rot)) {}
  std::size_t position(VertexId v, VertexId u) const;

  Rotation rot_;
};

std::vector<Face> faces(const PlaneTriangulation& t);
std::vector<Edge> edges(const PlaneTriangulation& t);
std::vector<int> degree_multiset(const PlaneTriangulation& t);
PlaneTriangulation mirror(const PlaneTriangulation& t);
// Sorted endpoint degrees of an edge; throws EdgeAbsent.
std::pair<int, int> edge_class(const PlaneTriangulation& t, Edge e);

// Renames vertex v to perm[v]; the embedding is carried along.
PlaneTriangulation relabel(const PlaneTriangulation& t, std::span<const VertexId> perm);

PlaneTriangulation tetrahedron();
PlaneTriangulation octahedron();

}  // namespace spheretri
