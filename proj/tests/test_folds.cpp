#include <gtest/gtest.h>

#include <set>

#include "fixture_graphs.hpp"
#include "oracles.hpp"
#include "sidlab/families.hpp"
#include "sidlab/folds.hpp"
#include "sidlab/reflection.hpp"
#include "sidlab/symmetry.hpp"

using namespace sidlab;

TEST(Folds, CounterexampleIsCutInvolutionWithoutFold) {
  const Bigraph g = fixtures::cut_involution_counterexample();
  const VertexMap phi = fixtures::counterexample_involution(g);
  EXPECT_TRUE(is_cut_involution(g, phi));
  EXPECT_FALSE(complete_to_fold(g, phi).has_value());
  EXPECT_FALSE(oracle::has_fold_completion(g, phi));
}

TEST(Folds, CycleSwapCompletesToFold) {
  const Bigraph c4 = cycle4();
  // Swap the two left vertices, fix both right vertices.
  const VertexMap phi{1, 0, 2, 3};
  ASSERT_TRUE(is_cut_involution(c4, phi));
  const auto f = complete_to_fold(c4, phi);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->left, (std::vector<Vertex>{0}));
  EXPECT_TRUE(is_fold(c4, *f));
  EXPECT_EQ(fixed_points(phi), (std::vector<Vertex>{2, 3}));
}

TEST(Folds, NonBijectionThrows) {
  EXPECT_THROW(is_cut_involution(cycle4(), VertexMap{0, 0, 2, 3}), std::invalid_argument);
}

TEST(Folds, ViolationsAreNamed) {
  const Bigraph c4 = cycle4();
  Fold f{{1, 0, 2, 3}, {0, 1}};
  EXPECT_TRUE(fold_violation(c4, f).has_value());
  f.left = {0};
  EXPECT_FALSE(fold_violation(c4, f).has_value());
  // The identity has no cut.
  EXPECT_TRUE(fold_violation(c4, Fold{{0, 1, 2, 3}, {}}).has_value());
}

TEST(Folds, CompletionAgreesWithExhaustiveSearch) {
  Rng rng(11);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Bigraph g = oracle::random_bigraph(1 + static_cast<int>(uniform_below(rng, 4)),
                                             1 + static_cast<int>(uniform_below(rng, 4)), 0.5, rng);
    for (const auto& phi : involutive_automorphisms(g)) {
      if (phi == identity_map(g.v()) || !is_cut_involution(g, phi)) continue;
      const auto f = complete_to_fold(g, phi);
      EXPECT_EQ(f.has_value(), oracle::has_fold_completion(g, phi));
      if (f) EXPECT_TRUE(oracle::is_fold(g, f->phi, std::set<Vertex>(f->left.begin(), f->left.end())));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Folds, FoldingMapsAreEndomorphisms) {
  for (const Bigraph& g : {cycle4(), book(2), book(3), build_incidence(4, {2}).graph.graph()}) {
    const auto folds = enumerate_folds(g);
    ASSERT_FALSE(folds.empty());
    for (const auto& f : folds) {
      EXPECT_TRUE(oracle::is_fold(g, f.phi, std::set<Vertex>(f.left.begin(), f.left.end())));
      const auto maps = folding_maps(g, f);
      EXPECT_TRUE(is_endomorphism(g, maps.left));
      EXPECT_TRUE(is_endomorphism(g, maps.right));
      for (Vertex v : f.left) {
        EXPECT_EQ(maps.left[v], v);
        EXPECT_EQ(maps.right[v], f.phi[v]);
      }
      EXPECT_EQ(left_folding_map(f), maps.left);
      EXPECT_EQ(right_folding_map(f), maps.right);
    }
  }
}

TEST(Folds, EnumerationSkipsIdentityAndNonFolds) {
  const auto folds = enumerate_folds(cycle4());
  // Swapping the left pair or the right pair.
  EXPECT_EQ(folds.size(), 2u);
  for (const auto& f : folds) EXPECT_NE(f.phi, identity_map(4));
  const Bigraph cx = fixtures::cut_involution_counterexample();
  const VertexMap stated = fixtures::counterexample_involution(cx);
  for (const auto& f : enumerate_folds(cx)) {
    EXPECT_NE(f.phi, stated);
    EXPECT_TRUE(oracle::is_fold(cx, f.phi, {f.left.begin(), f.left.end()}));
  }
}
