#include "spheretri/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace spheretri::oracle {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency(const PlaneTriangulation& t) {
  const auto n = static_cast<std::size_t>(t.order());
  Matrix m(n, std::vector<char>(n, 0));
  for (const auto& e : edges(t)) {
    m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  return m;
}

}  // namespace

bool brute_force_isomorphic(const PlaneTriangulation& a, const PlaneTriangulation& b) {
  if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder) {
    throw Error(ErrorCode::TooLarge, "permutation search is limited to " + std::to_string(kMaxIsomorphismOrder) +
                                         " vertices");
  }
  if (a.order() != b.order()) return false;
  const auto n = static_cast<std::size_t>(a.order());
  const Matrix ma = adjacency(a);
  const Matrix mb = adjacency(b);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (ma[i][j] != mb[perm[i]][perm[j]]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::uint64_t brute_force_coloring_count(const PlaneTriangulation& t, bool fix_base_face) {
  if (t.edge_count() > kMaxColoringEdges) {
    throw Error(ErrorCode::TooLarge, "exhaustive colouring scan is limited to " +
                                         std::to_string(kMaxColoringEdges) + " edges");
  }
  const auto n = static_cast<std::size_t>(t.order());
  const auto es = edges(t);
  std::vector<std::vector<int>> slot(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < es.size(); ++i) {
    slot[static_cast<std::size_t>(es[i].u)][static_cast<std::size_t>(es[i].v)] = static_cast<int>(i);
    slot[static_cast<std::size_t>(es[i].v)][static_cast<std::size_t>(es[i].u)] = static_cast<int>(i);
  }
  std::vector<std::array<int, 3>> tri;
  for (const auto& f : faces(t)) {
    const auto at = [&](VertexId x, VertexId y) { return slot[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
    tri.push_back({at(f.v[0], f.v[1]), at(f.v[1], f.v[2]), at(f.v[2], f.v[0])});
  }

  std::vector<int> digit(es.size(), 0);
  std::vector<std::size_t> free_edges;
  if (fix_base_face) {
    for (int k = 0; k < 3; ++k) digit[static_cast<std::size_t>(tri.front()[static_cast<std::size_t>(k)])] = k;
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    const bool pinned = fix_base_face && std::find(tri.front().begin(), tri.front().end(), static_cast<int>(i)) != tri.front().end();
    if (!pinned) free_edges.push_back(i);
  }

  std::uint64_t total = 0;
  while (true) {
    bool rainbow = true;
    for (const auto& f : tri) {
      const int x = digit[static_cast<std::size_t>(f[0])];
      const int y = digit[static_cast<std::size_t>(f[1])];
      const int z = digit[static_cast<std::size_t>(f[2])];
      if (x == y || y == z || x == z) {
        rainbow = false;
        break;
      }
    }
    total += rainbow;

    // Ternary odometer over the free edges.
    std::size_t k = 0;
    while (k < free_edges.size() && digit[free_edges[k]] == 2) digit[free_edges[k++]] = 0;
    if (k == free_edges.size()) break;
    ++digit[free_edges[k]];
  }
  return fix_base_face ? total * 6 : total;
}

std::vector<ChordalPolygon> brute_force_polygon_scan(const PlaneTriangulation& t, int max_size) {
  if (t.order() > kMaxPolygonScanOrder) {
    throw Error(ErrorCode::TooLarge, "cycle scan is limited to " + std::to_string(kMaxPolygonScanOrder) + " vertices");
  }
  if (max_size < 4) throw Error(ErrorCode::InvalidArgument, "polygons have at least 4 sides");
  const auto n = static_cast<std::size_t>(t.order());
  const Matrix adj = adjacency(t);
  std::vector<ChordalPolygon> out;

  // Accepts the side of `cycle` lying left of its darts when that side holds
  // no vertex: every neighbour met between the cycle edges is on the cycle.
  const auto check_side = [&](const std::vector<VertexId>& cycle) {
    const auto k = cycle.size();
    std::vector<char> on_cycle(n, 0);
    for (VertexId v : cycle) on_cycle[static_cast<std::size_t>(v)] = 1;
    ChordalPolygon p{cycle, {}};
    for (std::size_t i = 0; i < k; ++i) {
      const VertexId prev = cycle[(i + k - 1) % k];
      const VertexId v = cycle[i];
      const VertexId next = cycle[(i + 1) % k];
      for (VertexId w = t.next_after(v, prev); w != next; w = t.next_after(v, w)) {
        if (!on_cycle[static_cast<std::size_t>(w)]) return;
        if (v < w) p.chords.push_back(Edge{v, w});
      }
    }
    std::sort(p.chords.begin(), p.chords.end());
    out.push_back(std::move(p));
  };

  std::vector<VertexId> path;
  std::vector<char> used(n, 0);
  // Simple cycles through their smallest vertex; both directions are
  // produced, one per side.
  const auto dfs = [&](auto&& self, VertexId v) -> void {
    const auto s = static_cast<std::size_t>(path.front());
    if (path.size() >= 4 && adj[static_cast<std::size_t>(v)][s]) check_side(path);
    if (static_cast<int>(path.size()) == max_size) return;
    for (std::size_t w = s + 1; w < n; ++w) {
      if (used[w] || !adj[static_cast<std::size_t>(v)][w]) continue;
      used[w] = 1;
      path.push_back(static_cast<VertexId>(w));
      self(self, static_cast<VertexId>(w));
      path.pop_back();
      used[w] = 0;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {static_cast<VertexId>(s)};
    used.assign(n, 0);
    used[s] = 1;
    dfs(dfs, static_cast<VertexId>(s));
  }
  std::sort(out.begin(), out.end(), [](const ChordalPolygon& a, const ChordalPolygon& b) {
    return std::pair(a.size(), a.boundary) < std::pair(b.size(), b.boundary);
  });
  return out;
}

OracleReport make_report(std::string instance, std::string method_result, std::string oracle_result,
                         double seconds) {
  OracleReport r{std::move(instance), std::move(method_result), std::move(oracle_result), false, seconds};
  r.agree = r.method_result == r.oracle_result;
  return r;
}

}  // namespace spheretri::oracle
