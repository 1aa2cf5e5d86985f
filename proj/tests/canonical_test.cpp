#include "spheretri/canonical.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "spheretri/generator.hpp"
#include "support.hpp"

namespace spheretri {
namespace {

using testing::named;
using testing::up_to;

// Independent automorphism count: every vertex permutation that preserves
// adjacency.
std::size_t count_graph_automorphisms(const PlaneTriangulation& t) {
  const int n = t.order();
  std::vector<VertexId> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (const auto& e : edges(t)) {
      if (!t.adjacent(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

TEST(CanonicalTest, FiveVertexConstructionsAgree) {
  const auto t = tetrahedron();
  const auto by_face = insert_in_face(t, faces(t).front());
  const auto by_edge = insert_on_edge(t, edges(t).front());
  EXPECT_EQ(canonical_code(by_face), canonical_code(by_edge));
  EXPECT_TRUE(is_isomorphic(by_face, by_edge));
}

TEST(CanonicalTest, OctahedronDiffersFromG62) {
  EXPECT_NE(canonical_code(octahedron()), canonical_code(named("G6,2")));
  EXPECT_FALSE(is_isomorphic(octahedron(), named("G6,2")));
}

TEST(CanonicalTest, CodeLengthAndOrder) {
  for (const auto* rep : up_to(9)) {
    const int n = rep->triangulation.order();
    EXPECT_EQ(rep->code.bytes().size(), static_cast<std::size_t>(7 * n - 12));
    EXPECT_EQ(rep->code.order(), n);
    EXPECT_EQ(rep->code.hex().size(), 2 * rep->code.bytes().size());
  }
}

TEST(CanonicalTest, InvariantUnderRelabelling) {
  std::mt19937 rng(99);
  for (const auto* rep : up_to(9)) {
    for (int k = 0; k < 3; ++k) {
      const auto perm = testing::random_permutation(rep->triangulation.order(), rng);
      EXPECT_EQ(canonical_code(relabel(rep->triangulation, perm)), rep->code);
    }
  }
}

TEST(CanonicalTest, InvariantUnderMirror) {
  for (const auto* rep : up_to(9)) EXPECT_EQ(canonical_code(mirror(rep->triangulation)), rep->code);
}

TEST(CanonicalTest, MirrorAwareCodeIsTheSmallerOrientedCode) {
  const CanonicalOptions oriented{.include_mirror = false};
  for (const auto* rep : up_to(9)) {
    const auto& t = rep->triangulation;
    EXPECT_EQ(rep->code, std::min(canonical_code(t, oriented), canonical_code(mirror(t), oriented)));
  }
}

TEST(CanonicalTest, DecodeRoundTrip) {
  for (const auto* rep : up_to(9)) {
    const auto t = decode(rep->code);
    EXPECT_EQ(t, rep->triangulation);
    EXPECT_EQ(canonical_code(t), rep->code);
    EXPECT_EQ(canonical_form(t), t);
  }
}

TEST(CanonicalTest, CanonicalFormIsShared) {
  std::mt19937 rng(5);
  const auto& t = named("G8,13");
  EXPECT_EQ(canonical_form(relabel(t, testing::random_permutation(8, rng))), canonical_form(mirror(t)));
}

TEST(CanonicalTest, EqualDegreePairIsSeparated) {
  const auto& a = named("G8,4");
  const auto& b = named("G8,27");
  EXPECT_TRUE(degree_filter(a, b));
  EXPECT_FALSE(is_isomorphic(a, b));
  EXPECT_FALSE(degree_filter(named("G7,1"), named("G7,2")));
}

TEST(CanonicalTest, DistinctCodesMatchKnownCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 50};
  for (int n = 4; n <= 9; ++n) {
    std::set<CanonicalCode> codes;
    for (const auto& rep : testing::enumerated().by_n.at(n)) codes.insert(canonical_code(rep.triangulation));
    EXPECT_EQ(codes.size(), expected[static_cast<std::size_t>(n - 4)]) << "n=" << n;
  }
}

TEST(CanonicalTest, AutomorphismGroupOrders) {
  EXPECT_EQ(automorphisms(tetrahedron()).size(), 24u);
  EXPECT_EQ(automorphisms(octahedron()).size(), 48u);
  EXPECT_EQ(automorphisms(named("G5")).size(), 12u);
  EXPECT_EQ(automorphisms(tetrahedron(), {.include_mirror = false}).size(), 12u);
  EXPECT_EQ(automorphisms(octahedron(), {.include_mirror = false}).size(), 24u);
}

TEST(CanonicalTest, AutomorphismsMatchPermutationSearch) {
  for (const auto* rep : up_to(8)) {
    const auto& t = rep->triangulation;
    const auto autos = automorphisms(t);
    EXPECT_EQ(autos.size(), count_graph_automorphisms(t));
    std::vector<VertexId> identity(static_cast<std::size_t>(t.order()));
    std::iota(identity.begin(), identity.end(), 0);
    EXPECT_EQ(autos.front(), identity);
    for (const auto& a : autos) {
      for (const auto& e : edges(t)) EXPECT_TRUE(t.adjacent(a[static_cast<std::size_t>(e.u)], a[static_cast<std::size_t>(e.v)]));
    }
  }
}

}  // namespace
}  // namespace spheretri
