#pragma once

// Canonical labelling of sphere triangulations.
//
// For a root dart u->v the triangulation is relabelled breadth-first: u gets
// label 1, and each vertex, when dequeued, lists its rotation starting from
// the neighbour it was reached from (v for the root). Unseen neighbours get
// the next free label in that order. The code is the concatenation of the
// relabelled rotations, each terminated by 0. The canonical code is the
// lexicographic minimum over every dart of T and, when mirrors are
// identified, every dart of mirror(T).
//
// Simple sphere triangulations are 3-connected, so their embedding is unique
// up to reflection and the code is a complete invariant.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "spheretri/plane_map.hpp"

namespace spheretri {

class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  // Lowercase hex, two digits per byte.
  std::string hex() const;
  // Vertex count encoded in the code.
  int order() const;

  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalOptions {
  // Identify a triangulation with its mirror image. All enumeration counts
  // assume this.
  bool include_mirror = true;
};

CanonicalCode canonical_code(const PlaneTriangulation& t, CanonicalOptions options = {});
// The triangulation relabelled by its canonical root; two isomorphic inputs
// give identical rotation tables.
PlaneTriangulation canonical_form(const PlaneTriangulation& t, CanonicalOptions options = {});
// Rebuilds the relabelled triangulation a code describes.
PlaneTriangulation decode(const CanonicalCode& code);

// Vertex maps preserving adjacency and the embedding (reflections included
// when options.include_mirror). Identity first, rest sorted.
std::vector<std::vector<VertexId>> automorphisms(const PlaneTriangulation& t, CanonicalOptions options = {});

bool is_isomorphic(const PlaneTriangulation& a, const PlaneTriangulation& b, CanonicalOptions options = {});
// Necessary condition for isomorphism: equal degree multisets.
bool degree_filter(const PlaneTriangulation& a, const PlaneTriangulation& b);

}  // namespace spheretri
