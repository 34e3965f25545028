#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sidlab/families.hpp"
#include "sidlab/reflection.hpp"
#include "sidlab/symmetry.hpp"

using namespace sidlab;

TEST(Symmetry, AutomorphismsMatchBruteForceOnRandomGraphs) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int v1 = 1 + static_cast<int>(uniform_below(rng, 4));
    const int v2 = 1 + static_cast<int>(uniform_below(rng, 4));
    const Bigraph g = oracle::random_bigraph(v1, v2, 0.5, rng);
    EXPECT_EQ(automorphisms(g), oracle::automorphisms(g)) << "trial " << trial;
  }
}

TEST(Symmetry, KnownGroupOrders) {
  EXPECT_EQ(automorphisms(cycle4()).size(), 4u);
  EXPECT_EQ(automorphisms(star(3)).size(), 6u);
  EXPECT_EQ(automorphisms(book(2)).size(), 2u);
  EXPECT_EQ(automorphisms(build_incidence(4, {2}).graph.graph()).size(), 24u);
  EXPECT_EQ(automorphisms(cycle4()).front(), identity_map(4));
}

TEST(Symmetry, InvolutionsAreSelfInverse) {
  const auto invs = involutive_automorphisms(book(3));
  ASSERT_FALSE(invs.empty());
  EXPECT_EQ(invs.front(), identity_map(book(3).v()));
  for (const auto& m : invs) EXPECT_EQ(compose(m, m), identity_map(static_cast<int>(m.size())));
  const auto all = oracle::automorphisms(book(3));
  const auto expected = std::count_if(all.begin(), all.end(), [](const VertexMap& m) {
    return compose(m, m) == identity_map(static_cast<int>(m.size()));
  });
  EXPECT_EQ(static_cast<long>(invs.size()), expected);
}

TEST(Symmetry, IsomorphismRespectsSides) {
  EXPECT_FALSE(are_isomorphic(star(2), dual_star(2)));
  EXPECT_TRUE(are_isomorphic(cycle4(), two_core(book(1))));
  const Bigraph relabeled({"p", "q"}, {"r", "s"}, {{"p", "r"}, {"p", "s"}, {"q", "r"}, {"q", "s"}});
  const auto iso = find_isomorphism(cycle4(), relabeled);
  ASSERT_TRUE(iso.has_value());
  const Bigraph c4 = cycle4();
  for (const auto& [a, b] : c4.edges()) EXPECT_TRUE(relabeled.adjacent((*iso)[a], (*iso)[b]));
}

TEST(Symmetry, FlagIsomorphismFixesLabels) {
  const Bigraph p = star(2);
  EXPECT_TRUE(find_flag_isomorphism(Flag(p, {"y1"}), Flag(p, {"y2"})).has_value());
  EXPECT_FALSE(find_flag_isomorphism(Flag(p, {"x"}), Flag(p, {"y1"})).has_value());
}

TEST(Symmetry, ColorEdgeTransitivity) {
  const auto ib = build_incidence(4, {2, 3});
  EXPECT_TRUE(is_color_edge_transitive(ib.graph));
  EXPECT_FALSE(is_color_edge_transitive(ColoredBigraph(book(2), 1)));
  EXPECT_TRUE(is_color_edge_transitive(ColoredBigraph(cycle4(), 1)));
}

TEST(Symmetry, MapHelpers) {
  const VertexMap m{1, 0, 3, 2};
  EXPECT_TRUE(is_bijection(m, 4));
  EXPECT_FALSE(is_bijection(VertexMap{0, 0, 1, 2}, 4));
  EXPECT_EQ(inverse(VertexMap{1, 2, 0}), (VertexMap{2, 0, 1}));
  EXPECT_TRUE(is_automorphism(cycle4(), m));
  // Folding both left vertices onto one is an endomorphism, not an automorphism.
  EXPECT_TRUE(is_endomorphism(cycle4(), VertexMap{0, 0, 2, 3}));
  EXPECT_FALSE(is_automorphism(cycle4(), VertexMap{0, 0, 2, 3}));
  const auto orbit = vertex_orbit(std::vector<VertexMap>{m}, 0);
  EXPECT_EQ(orbit, (std::vector<Vertex>{0, 1}));
}
