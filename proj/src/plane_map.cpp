#include "spheretri/plane_map.hpp"

#include <algorithm>
#include <string>

namespace spheretri {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::NotTriangular: return "NotTriangular";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::EdgeAbsent: return "EdgeAbsent";
    case ErrorCode::FaceAbsent: return "FaceAbsent";
    case ErrorCode::WouldCreateMultiEdge: return "WouldCreateMultiEdge";
    case ErrorCode::PolygonInvalid: return "PolygonInvalid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NMaxOutOfRange: return "NMaxOutOfRange";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string dart_name(VertexId u, VertexId v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

}  // namespace

PlaneTriangulation PlaneTriangulation::build(Rotation rotation) {
  const int n = static_cast<int>(rotation.size());
  if (n < 4) {
    throw Error(ErrorCode::TooFewVertices, "need at least 4 vertices, got " + std::to_string(n));
  }

  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::size_t darts = 0;
  for (int v = 0; v < n; ++v) {
    for (VertexId u : rotation[static_cast<std::size_t>(v)]) {
      if (u < 0 || u >= n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " lists neighbour " + std::to_string(u));
      }
      if (u == v) {
        throw Error(ErrorCode::NotSimple, "vertex " + std::to_string(v) + " lists itself");
      }
      auto& cell = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      if (cell) {
        throw Error(ErrorCode::NotSimple,
                    "vertex " + std::to_string(v) + " lists neighbour " + std::to_string(u) + " twice");
      }
      cell = 1;
      ++darts;
    }
  }
  for (int v = 0; v < n; ++v) {
    for (VertexId u : rotation[static_cast<std::size_t>(v)]) {
      if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::NotSymmetric, "edge " + dart_name(v, u) + " has no reverse");
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (rotation[static_cast<std::size_t>(v)].size() < 3) {
      throw Error(ErrorCode::DegreeTooLow, "vertex " + std::to_string(v) + " has degree " +
                                               std::to_string(rotation[static_cast<std::size_t>(v)].size()));
    }
  }

  PlaneTriangulation t(std::move(rotation));

  // Face tracing: every dart must close a triangle of three distinct vertices.
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) used[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(t.degree(v)), 0);
  std::size_t face_total = 0;
  for (int a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < used[static_cast<std::size_t>(a)].size(); ++i) {
      if (used[static_cast<std::size_t>(a)][i]) continue;
      const VertexId b = t.rot_[static_cast<std::size_t>(a)][i];
      const VertexId c = t.next_after(b, a);
      const VertexId back = t.next_after(c, b);
      const VertexId again = t.next_after(a, c);
      if (back != a || again != b || c == a) {
        throw Error(ErrorCode::NotTriangular,
                    "face traced from " + dart_name(a, b) + " is not a triangle (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ",...)");
      }
      used[static_cast<std::size_t>(a)][i] = 1;
      used[static_cast<std::size_t>(b)][t.position(b, c)] = 1;
      used[static_cast<std::size_t>(c)][t.position(c, a)] = 1;
      ++face_total;
    }
  }

  const std::size_t edge_total = darts / 2;
  if (edge_total != static_cast<std::size_t>(3 * n - 6) || face_total != static_cast<std::size_t>(2 * n - 4)) {
    throw Error(ErrorCode::EulerViolation, "V=" + std::to_string(n) + " E=" + std::to_string(edge_total) +
                                               " F=" + std::to_string(face_total) + " is not a sphere");
  }
  return t;
}

std::size_t PlaneTriangulation::position(VertexId v, VertexId u) const {
  const auto& r = rot_[static_cast<std::size_t>(v)];
  const auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) {
    throw Error(ErrorCode::EdgeAbsent, "no edge " + std::to_string(v) + "-" + std::to_string(u));
  }
  return static_cast<std::size_t>(it - r.begin());
}

bool PlaneTriangulation::adjacent(VertexId a, VertexId b) const {
  if (a < 0 || a >= order() || b < 0 || b >= order()) return false;
  const auto& r = rot_[static_cast<std::size_t>(a)];
  return std::find(r.begin(), r.end(), b) != r.end();
}

VertexId PlaneTriangulation::next_after(VertexId v, VertexId u) const {
  const auto& r = rot_[static_cast<std::size_t>(v)];
  return r[(position(v, u) + 1) % r.size()];
}

VertexId PlaneTriangulation::prev_before(VertexId v, VertexId u) const {
  const auto& r = rot_[static_cast<std::size_t>(v)];
  return r[(position(v, u) + r.size() - 1) % r.size()];
}

std::vector<Face> faces(const PlaneTriangulation& t) {
  std::vector<Face> out;
  out.reserve(static_cast<std::size_t>(t.face_count()));
  for (VertexId a = 0; a < t.order(); ++a) {
    for (VertexId b : t.rotation(a)) {
      const VertexId c = t.face_apex(a, b);
      // Each face is emitted once, from its smallest vertex.
      if (a < b && a < c) out.push_back(Face{{a, b, c}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> edges(const PlaneTriangulation& t) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(t.edge_count()));
  for (VertexId a = 0; a < t.order(); ++a) {
    for (VertexId b : t.rotation(a)) {
      if (a < b) out.push_back(Edge{a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> degree_multiset(const PlaneTriangulation& t) {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(t.order()));
  for (VertexId v = 0; v < t.order(); ++v) d.push_back(t.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

PlaneTriangulation mirror(const PlaneTriangulation& t) {
  Rotation r = t.rotations();
  for (auto& ring : r) std::reverse(ring.begin(), ring.end());
  return PlaneTriangulation::build(std::move(r));
}

std::pair<int, int> edge_class(const PlaneTriangulation& t, Edge e) {
  if (!t.adjacent(e.u, e.v)) {
    throw Error(ErrorCode::EdgeAbsent, "no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  const int a = t.degree(e.u);
  const int b = t.degree(e.v);
  return {std::min(a, b), std::max(a, b)};
}

PlaneTriangulation relabel(const PlaneTriangulation& t, std::span<const VertexId> perm) {
  const auto n = static_cast<std::size_t>(t.order());
  if (perm.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "permutation size does not match vertex count");
  }
  Rotation r(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& ring = r[static_cast<std::size_t>(perm[v])];
    for (VertexId u : t.rotation(static_cast<VertexId>(v))) ring.push_back(perm[static_cast<std::size_t>(u)]);
  }
  return PlaneTriangulation::build(std::move(r));
}

PlaneTriangulation tetrahedron() {
  return PlaneTriangulation::build({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

// Poles 0 and 5, equator 1-2-3-4.
PlaneTriangulation octahedron() {
  return PlaneTriangulation::build({{1, 2, 3, 4}, {0, 4, 5, 2}, {0, 1, 5, 3}, {0, 2, 5, 4}, {0, 3, 5, 1}, {1, 4, 3, 2}});
}

}  // namespace spheretri
