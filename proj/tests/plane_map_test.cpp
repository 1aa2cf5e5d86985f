#include "spheretri/plane_map.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "support.hpp"

namespace spheretri {
namespace {

using testing::named;
using testing::up_to;

ErrorCode build_error(Rotation r) {
  try {
    PlaneTriangulation::build(std::move(r));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "build accepted an invalid rotation system";
  return ErrorCode::InvalidArgument;
}

bool cyclically_equal(std::vector<VertexId> a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return a == b;
}

TEST(PlaneMapTest, Tetrahedron) {
  const auto t = tetrahedron();
  EXPECT_EQ(t.order(), 4);
  EXPECT_EQ(t.edge_count(), 6);
  EXPECT_EQ(t.face_count(), 4);
  EXPECT_EQ(faces(t).size(), 4u);
  EXPECT_EQ(edges(t).size(), 6u);
  EXPECT_EQ(degree_multiset(t), (std::vector<int>{3, 3, 3, 3}));
  for (const auto& e : edges(t)) EXPECT_EQ(edge_class(t, e), std::pair(3, 3));
}

TEST(PlaneMapTest, Octahedron) {
  const auto t = octahedron();
  EXPECT_EQ(t.edge_count(), 12);
  EXPECT_EQ(faces(t).size(), 8u);
  EXPECT_EQ(degree_multiset(t), std::vector<int>(6, 4));
}

TEST(PlaneMapTest, TransposedRotationIsNotTriangular) {
  EXPECT_EQ(build_error({{1, 3, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}), ErrorCode::NotTriangular);
}

TEST(PlaneMapTest, RejectsMalformedInput) {
  EXPECT_EQ(build_error({{1, 2}, {0, 2}, {0, 1}}), ErrorCode::TooFewVertices);
  EXPECT_EQ(build_error({{1, 2, 4}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(build_error({{0, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}), ErrorCode::NotSimple);
  EXPECT_EQ(build_error({{1, 2, 3, 1}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}), ErrorCode::NotSimple);
  EXPECT_EQ(build_error({{1, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}), ErrorCode::NotSymmetric);
  EXPECT_EQ(build_error({{1, 2}, {0, 2}, {0, 1}, {}}), ErrorCode::DegreeTooLow);
}

TEST(PlaneMapTest, TorusTriangulationViolatesEuler) {
  // K7 on the torus: neighbour offsets 1,3,2,6,4,5 around every vertex.
  Rotation r(7);
  for (int v = 0; v < 7; ++v) {
    for (int off : {1, 3, 2, 6, 4, 5}) r[static_cast<std::size_t>(v)].push_back((v + off) % 7);
  }
  EXPECT_EQ(build_error(r), ErrorCode::EulerViolation);
}

TEST(PlaneMapTest, DegreeTables) {
  EXPECT_EQ(degree_multiset(named("G7,5")), (std::vector<int>{3, 3, 3, 5, 5, 5, 6}));
  EXPECT_EQ(degree_multiset(named("G8,39")), (std::vector<int>{3, 3, 5, 5, 5, 5, 5, 5}));
}

TEST(PlaneMapTest, EdgeClassesOfG5) {
  const auto& g5 = named("G5");
  std::multiset<std::pair<int, int>> classes;
  for (const auto& e : edges(g5)) classes.insert(edge_class(g5, e));
  EXPECT_EQ(classes.count({4, 4}), 3u);
  EXPECT_EQ(classes.count({3, 4}), 6u);
  EXPECT_EQ(classes.count({3, 3}), 0u);
  // The two degree-3 apexes are not adjacent.
  VertexId a = -1, b = -1;
  for (VertexId v = 0; v < g5.order(); ++v) {
    if (g5.degree(v) == 3) (a < 0 ? a : b) = v;
  }
  try {
    edge_class(g5, Edge::of(a, b));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EdgeAbsent);
  }
}

TEST(PlaneMapTest, EulerIdentitiesOnEveryEnumeratedTriangulation) {
  for (const auto* rep : up_to(9)) {
    const auto& t = rep->triangulation;
    const int n = t.order();
    const auto d = degree_multiset(t);
    EXPECT_EQ(std::accumulate(d.begin(), d.end(), 0), 6 * (n - 2));
    EXPECT_EQ(static_cast<int>(edges(t).size()), 3 * n - 6);
    EXPECT_EQ(static_cast<int>(faces(t).size()), 2 * n - 4);
    EXPECT_GE(d.front(), 3);

    // Each dart on exactly one face.
    std::set<std::pair<VertexId, VertexId>> darts;
    for (const auto& f : faces(t)) {
      for (int i = 0; i < 3; ++i) EXPECT_TRUE(darts.emplace(f.v[i], f.v[(i + 1) % 3]).second);
    }
    EXPECT_EQ(static_cast<int>(darts.size()), 2 * t.edge_count());
  }
}

TEST(PlaneMapTest, EdgesAreSortedAndUnique) {
  const auto es = edges(named("G8,6"));
  EXPECT_TRUE(std::is_sorted(es.begin(), es.end()));
  EXPECT_EQ(std::set<Edge>(es.begin(), es.end()).size(), es.size());
  for (const auto& e : es) EXPECT_LT(e.u, e.v);
}

TEST(PlaneMapTest, MirrorIsAnInvolution) {
  for (const auto* rep : up_to(9)) {
    const auto& t = rep->triangulation;
    const auto m = mirror(t);
    EXPECT_EQ(mirror(m), t);
    EXPECT_EQ(degree_multiset(m), degree_multiset(t));
  }
}

TEST(PlaneMapTest, RelabelCarriesTheEmbedding) {
  std::mt19937 rng(7);
  const auto& t = named("G7,3");
  const auto perm = testing::random_permutation(t.order(), rng);
  const auto r = relabel(t, perm);
  for (VertexId v = 0; v < t.order(); ++v) {
    for (VertexId u : t.rotation(v)) {
      EXPECT_EQ(r.next_after(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>(u)]),
                perm[static_cast<std::size_t>(t.next_after(v, u))]);
    }
  }
}

// Random corruptions of valid rotation systems are rejected unless they leave
// every rotation cyclically unchanged.
TEST(PlaneMapTest, CorruptionsAreRejected) {
  std::mt19937 rng(12345);
  int rejected = 0;
  for (const auto* rep : up_to(8)) {
    const auto& t = rep->triangulation;
    const int n = t.order();
    for (int trial = 0; trial < 200; ++trial) {
      Rotation r = t.rotations();
      auto& ring = r[rng() % static_cast<unsigned>(n)];
      const auto i = rng() % ring.size();
      switch (rng() % 4) {
        case 0: std::swap(ring[i], ring[rng() % ring.size()]); break;
        case 1: ring[i] = static_cast<VertexId>(rng() % static_cast<unsigned>(n)); break;
        case 2: ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i)); break;
        default: ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(i), static_cast<VertexId>(rng() % static_cast<unsigned>(n))); break;
      }
      try {
        const auto built = PlaneTriangulation::build(r);
        for (VertexId v = 0; v < n; ++v) {
          EXPECT_TRUE(cyclically_equal(r[static_cast<std::size_t>(v)], t.rotations()[static_cast<std::size_t>(v)]));
        }
      } catch (const Error&) {
        ++rejected;
      }
    }
  }
  EXPECT_GT(rejected, 0);
}

}  // namespace
}  // namespace spheretri
