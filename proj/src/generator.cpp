#include "spheretri/generator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <variant>

namespace spheretri {

namespace {

std::string join(const std::vector<VertexId>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s;
}

Face normalised_face(VertexId a, VertexId b, VertexId c) {
  if (b < a && b < c) return Face{{b, c, a}};
  if (c < a && c < b) return Face{{c, a, b}};
  return Face{{a, b, c}};
}

void rotate_to_min(std::vector<VertexId>& cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
}

// Replaces the disk bounded by `boundary` with the star of a new vertex.
// Walking the rotation of boundary[i] from boundary[i-1], the neighbours met
// before boundary[i+1] are exactly the chords ending at boundary[i].
PlaneTriangulation replace_disk(const PlaneTriangulation& t, const std::vector<VertexId>& boundary) {
  const auto k = boundary.size();
  const VertexId x = t.order();
  Rotation r = t.rotations();
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId v = boundary[i];
    const VertexId prev = boundary[(i + k - 1) % k];
    const VertexId next = boundary[(i + 1) % k];
    const auto& old = t.rotation(v);
    const auto start = static_cast<std::size_t>(std::find(old.begin(), old.end(), prev) - old.begin());
    std::vector<VertexId> ring;
    ring.reserve(old.size() + 1);
    ring.push_back(prev);
    ring.push_back(x);
    std::size_t j = (start + 1) % old.size();
    while (old[j] != next) j = (j + 1) % old.size();
    for (; old[j] != prev; j = (j + 1) % old.size()) ring.push_back(old[j]);
    r[static_cast<std::size_t>(v)] = std::move(ring);
  }
  r.emplace_back(boundary.rbegin(), boundary.rend());
  return PlaneTriangulation::build(std::move(r));
}

}  // namespace

PlaneTriangulation insert_in_face(const PlaneTriangulation& t, const Face& f) {
  const auto [a, b, c] = f.v;
  const bool traced = t.adjacent(a, b) && t.adjacent(b, c) && t.adjacent(c, a) && t.face_apex(a, b) == c &&
                      t.face_apex(b, c) == a && t.face_apex(c, a) == b;
  if (!traced) {
    throw Error(ErrorCode::FaceAbsent, "(" + join({a, b, c}) + ") is not a traced face");
  }
  return replace_disk(t, {a, b, c});
}

PlaneTriangulation insert_on_edge(const PlaneTriangulation& t, Edge e) {
  if (!t.adjacent(e.u, e.v)) {
    throw Error(ErrorCode::EdgeAbsent, "no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  const VertexId p = t.face_apex(e.u, e.v);
  const VertexId q = t.face_apex(e.v, e.u);
  if (p == q) {
    throw Error(ErrorCode::WouldCreateMultiEdge,
                "faces on " + std::to_string(e.u) + "-" + std::to_string(e.v) + " share their opposite vertex");
  }
  return replace_disk(t, {e.v, p, e.u, q});
}

ChordalPolygon validate_polygon(const PlaneTriangulation& t, const ChordalPolygon& p) {
  const auto k = p.boundary.size();
  const auto fail = [&](const std::string& why) {
    return Error(ErrorCode::PolygonInvalid, "(" + join(p.boundary) + "): " + why);
  };
  if (k < 4) throw fail("fewer than 4 boundary vertices");
  std::set<VertexId> on_boundary;
  std::set<std::pair<VertexId, VertexId>> boundary_darts;
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId a = p.boundary[i];
    const VertexId b = p.boundary[(i + 1) % k];
    if (a < 0 || a >= t.order()) throw fail("vertex out of range");
    if (!on_boundary.insert(a).second) throw fail("boundary is not a simple cycle");
    if (!t.adjacent(a, b)) throw fail("boundary edge " + std::to_string(a) + "-" + std::to_string(b) + " absent");
    boundary_darts.emplace(a, b);
  }

  // Flood the faces left of the boundary without crossing it.
  std::set<Face> region;
  std::set<Edge> chords;
  std::vector<std::pair<VertexId, VertexId>> stack{{p.boundary[0], p.boundary[1]}};
  region.insert(normalised_face(p.boundary[0], p.boundary[1], t.face_apex(p.boundary[0], p.boundary[1])));
  while (!stack.empty()) {
    const auto [a, b] = stack.back();
    stack.pop_back();
    const VertexId c = t.face_apex(a, b);
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
      if (!on_boundary.contains(x)) throw fail("disk contains vertex " + std::to_string(x));
      if (boundary_darts.contains({x, y})) continue;
      chords.insert(Edge::of(x, y));
      const Face other = normalised_face(y, x, t.face_apex(y, x));
      if (region.insert(other).second) {
        if (region.size() > k - 2) throw fail("disk is not triangulated by chords alone");
        stack.emplace_back(y, x);
      }
    }
  }
  if (region.size() != k - 2 || chords.size() != k - 3) throw fail("disk is not triangulated by chords alone");

  ChordalPolygon out{p.boundary, {chords.begin(), chords.end()}};
  auto given = p.chords;
  for (auto& e : given) e = Edge::of(e.u, e.v);
  std::sort(given.begin(), given.end());
  if (given != out.chords) throw fail("chord set does not match the disk");
  rotate_to_min(out.boundary);
  return out;
}

PlaneTriangulation insert_in_polygon(const PlaneTriangulation& t, const ChordalPolygon& p) {
  return replace_disk(t, validate_polygon(t, p).boundary);
}

std::vector<ChordalPolygon> enumerate_polygons(const PlaneTriangulation& t, int max_size) {
  if (max_size < 4 || max_size > t.order()) {
    throw Error(ErrorCode::InvalidArgument,
                "polygon size bound " + std::to_string(max_size) + " outside [4, " + std::to_string(t.order()) + "]");
  }
  const auto fs = faces(t);
  const auto nf = fs.size();
  if (nf > 64) throw Error(ErrorCode::InvalidArgument, "too many faces for polygon search");

  // Face index of each dart.
  const auto n = static_cast<std::size_t>(t.order());
  std::vector<int> face_of(n * n, -1);
  for (std::size_t i = 0; i < nf; ++i) {
    const auto& v = fs[i].v;
    for (int j = 0; j < 3; ++j) {
      face_of[static_cast<std::size_t>(v[j]) * n + static_cast<std::size_t>(v[(j + 1) % 3])] = static_cast<int>(i);
    }
  }
  const auto dart_face = [&](VertexId a, VertexId b) {
    return static_cast<std::size_t>(face_of[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]);
  };

  // Triangulated polygons grow by ears: every polygon with m+1 triangles is a
  // polygon with m triangles plus one face glued along a boundary edge that
  // brings in exactly one new vertex.
  std::vector<ChordalPolygon> out;
  std::unordered_set<std::uint64_t> level;
  for (std::size_t i = 0; i < nf; ++i) level.insert(std::uint64_t{1} << i);

  for (int m = 2; m + 2 <= max_size; ++m) {
    std::unordered_set<std::uint64_t> grown;
    for (std::uint64_t mask : level) {
      std::uint64_t verts = 0;
      for (std::size_t i = 0; i < nf; ++i) {
        if (mask >> i & 1) {
          for (VertexId v : fs[i].v) verts |= std::uint64_t{1} << v;
        }
      }
      for (std::size_t i = 0; i < nf; ++i) {
        if (!(mask >> i & 1)) continue;
        const auto& v = fs[i].v;
        for (int j = 0; j < 3; ++j) {
          const std::size_t g = dart_face(v[(j + 1) % 3], v[j]);
          if (mask >> g & 1) continue;
          const VertexId apex = t.face_apex(v[(j + 1) % 3], v[j]);
          if (verts >> apex & 1) continue;
          grown.insert(mask | std::uint64_t{1} << g);
        }
      }
    }
    level = std::move(grown);

    for (std::uint64_t mask : level) {
      // Boundary darts: darts of region faces whose reverse lies outside.
      std::vector<VertexId> succ(n, -1);
      std::set<Edge> chords;
      VertexId start = -1;
      for (std::size_t i = 0; i < nf; ++i) {
        if (!(mask >> i & 1)) continue;
        const auto& v = fs[i].v;
        for (int j = 0; j < 3; ++j) {
          const VertexId a = v[j], b = v[(j + 1) % 3];
          if (mask >> dart_face(b, a) & 1) {
            chords.insert(Edge::of(a, b));
          } else {
            succ[static_cast<std::size_t>(a)] = b;
            if (start < 0 || a < start) start = a;
          }
        }
      }
      ChordalPolygon p;
      for (VertexId v = start; p.boundary.empty() || v != start; v = succ[static_cast<std::size_t>(v)]) {
        p.boundary.push_back(v);
      }
      p.chords.assign(chords.begin(), chords.end());
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const ChordalPolygon& a, const ChordalPolygon& b) {
    return std::pair(a.size(), a.boundary) < std::pair(b.size(), b.boundary);
  });
  return out;
}

std::size_t EnumerationResult::count(int n) const {
  const auto it = by_n.find(n);
  return it == by_n.end() ? 0 : it->second.size();
}

std::vector<Representative> expand(const PlaneTriangulation& t, const EnumerationOptions& options) {
  using Site = std::variant<Face, Edge, ChordalPolygon>;
  std::vector<Site> sites;
  for (const auto& f : faces(t)) sites.emplace_back(f);
  for (const auto& e : edges(t)) sites.emplace_back(e);
  const int cap = std::min(options.polygon_cap, t.order());
  if (options.use_polygons && cap >= 4) {
    for (auto& p : enumerate_polygons(t, cap)) sites.emplace_back(std::move(p));
  }
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(sites.begin(), sites.end(), rng);
  }

  const CanonicalCode parent = canonical_code(t);
  std::vector<Representative> children;
  std::set<CanonicalCode> seen;
  for (const auto& site : sites) {
    std::optional<PlaneTriangulation> child;
    Provenance prov{parent, Procedure::Face, {}};
    if (const auto* f = std::get_if<Face>(&site)) {
      child = insert_in_face(t, *f);
      prov.site = "face " + join({f->v[0], f->v[1], f->v[2]});
    } else if (const auto* e = std::get_if<Edge>(&site)) {
      if (t.face_apex(e->u, e->v) == t.face_apex(e->v, e->u)) continue;
      child = insert_on_edge(t, *e);
      prov.procedure = Procedure::Edge;
      prov.site = "edge " + std::to_string(e->u) + "-" + std::to_string(e->v);
    } else {
      const auto& p = std::get<ChordalPolygon>(site);
      child = replace_disk(t, p.boundary);
      prov.procedure = Procedure::Polygon;
      prov.site = "polygon " + join(p.boundary);
    }
    auto code = canonical_code(*child);
    if (!seen.insert(code).second) continue;
    children.push_back(Representative{decode(code), std::move(code), std::move(prov)});
  }
  return children;
}

EnumerationResult enumerate(int max_n, const EnumerationOptions& options) {
  if (max_n < 4 || max_n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::NMaxOutOfRange,
                "max n must be in [4, 11]; the insertion method is only valid for n < 12, got " +
                    std::to_string(max_n));
  }
  if (options.polygon_cap < 4) {
    throw Error(ErrorCode::InvalidArgument, "polygon cap must be at least 4");
  }

  EnumerationResult result;
  result.polygon_cap = options.polygon_cap;
  result.polygons_enabled = options.use_polygons;
  auto root_code = canonical_code(tetrahedron());
  result.by_n[4].push_back(Representative{decode(root_code), std::move(root_code), std::nullopt});

  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  for (int n = 4; n < max_n; ++n) {
    const auto& parents = result.by_n[n];
    std::vector<std::size_t> order(parents.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (options.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

    // Parents expand independently; the merge below is serial and follows
    // `order`, so first-seen provenance does not depend on scheduling.
    std::vector<std::vector<Representative>> expanded(parents.size());
    std::vector<EnumerationOptions> per_parent(parents.size(), options);
    if (options.shuffle_seed) {
      for (auto& o : per_parent) o.shuffle_seed = rng();
    }
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(parents.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
      for (std::size_t i = next++; i < parents.size() && !failed; i = next++) {
        try {
          expanded[i] = expand(parents[i].triangulation, per_parent[i]);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    std::map<CanonicalCode, Representative> merged;
    for (std::size_t i : order) {
      for (auto& child : expanded[i]) merged.try_emplace(child.code, std::move(child));
    }
    auto& level = result.by_n[n + 1];
    for (auto& [code, rep] : merged) level.push_back(std::move(rep));
  }
  return result;
}

}  // namespace spheretri
