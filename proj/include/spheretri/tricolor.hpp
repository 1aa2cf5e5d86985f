#pragma once

// Rainbow edge colourings: three colours on the edges of a triangulation such
// that the sides of every face get three different colours. Colourings that
// differ only by a renaming of the colours are equivalent.
//
// Colourings are indexed like edges(t).

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "spheretri/plane_map.hpp"

namespace spheretri {

enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

char color_letter(Color c);

using EdgeColoring = std::vector<Color>;
using PartialColoring = std::vector<std::optional<Color>>;

// Lookup from vertex pair to position in edges(t), plus each face's edges.
class EdgeIndex {
 public:
  explicit EdgeIndex(const PlaneTriangulation& t);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  // Edge positions of faces()[i] in trace order: v0v1, v1v2, v2v0.
  const std::array<int, 3>& face_edges(std::size_t i) const { return face_edges_[i]; }
  // Position of edge a-b; throws EdgeAbsent.
  int at(VertexId a, VertexId b) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<std::array<int, 3>> face_edges_;
  std::vector<int> slot_;
};

// Throws PartialColoring when the size does not match the edge count.
bool validate(const PlaneTriangulation& t, const EdgeColoring& c);
// Throws PartialColoring when any edge is unassigned.
bool validate(const PlaneTriangulation& t, const PartialColoring& c);

enum class EdgeOrder {
  MostConstrained,  // prefer edges whose faces already carry colours
  Sequential,       // edges(t) order
};

struct ColoringOptions {
  // Face whose sides are pinned to Red, Green, Blue (in trace order). Default:
  // the lexicographically smallest face.
  std::optional<Face> base_face;
  EdgeOrder order = EdgeOrder::MostConstrained;
};

// One colouring per renaming class, sorted lexicographically.
std::vector<EdgeColoring> enumerate_colorings(const PlaneTriangulation& t, const ColoringOptions& options = {});
std::size_t count_colorings(const PlaneTriangulation& t, const ColoringOptions& options = {});

// Classes under renaming combined with the symmetries of t (reflections
// included). Each class is represented by its lexicographically smallest
// member; the result is sorted. This is the coarser identification under
// which the classical hand counts for n <= 7 are stated.
std::vector<EdgeColoring> coloring_orbits(const PlaneTriangulation& t);
std::size_t count_coloring_orbits(const PlaneTriangulation& t);

struct ColorComponent {
  int edges = 0;
  bool cycle = false;
  auto operator<=>(const ColorComponent&) const = default;
};

// Connected components of each colour's subgraph, sorted by (edges, cycle).
struct ColoringClassSummary {
  std::array<std::vector<ColorComponent>, 3> by_color;

  // The three per-colour lists as a sorted triple; invariant under renaming.
  std::array<std::vector<ColorComponent>, 3> unordered() const;
  bool operator==(const ColoringClassSummary&) const = default;
};

// Throws InvalidColoring when c is not rainbow.
ColoringClassSummary class_summary(const PlaneTriangulation& t, const EdgeColoring& c);

struct ForcingResult {
  enum class Kind { NoOp, Forced, Contradiction };
  Kind kind = Kind::NoOp;
  int edge = -1;  // position in edges(t) when Forced
  Color color = Color::Red;
};

// The three edges at a degree-3 vertex bound pairwise common faces, so they
// carry three distinct colours. Throws InvalidArgument if deg(v) != 3.
ForcingResult degree3_forcing(const PlaneTriangulation& t, const PartialColoring& partial, VertexId v);

}  // namespace spheretri
