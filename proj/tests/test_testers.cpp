#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "oracles.hpp"
#include "sidlab/errors.hpp"
#include "sidlab/families.hpp"
#include "sidlab/reflection.hpp"
#include "sidlab/symmetry.hpp"
#include "sidlab/testers.hpp"

using namespace sidlab;

namespace {

TestConfig quick(int trials = 200, std::uint64_t seed = 7) {
  TestConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

Bigraph edge_plus_isolated_left() { return Bigraph({"a", "b"}, {"w"}, {{"a", "w"}}); }

Bigraph cycle8() {
  return Bigraph({"1", "2", "3", "4"}, {"a", "b", "c", "d"},
                 {{"1", "a"}, {"2", "a"}, {"2", "b"}, {"3", "b"}, {"3", "c"}, {"4", "c"}, {"4", "d"}, {"1", "d"}});
}

/// Every side-preserving endomorphism, by brute force.
std::vector<VertexMap> all_endomorphisms(const Bigraph& g) {
  std::vector<VertexMap> out;
  VertexMap m(static_cast<std::size_t>(g.v()), 0);
  std::function<void(Vertex)> rec = [&](Vertex v) {
    if (v == g.v()) {
      for (const auto& [a, b] : g.edges()) {
        if (!g.adjacent(m[a], m[b])) return;
      }
      out.push_back(m);
      return;
    }
    const Vertex lo = g.is_left(v) ? 0 : g.v1();
    const Vertex hi = g.is_left(v) ? g.v1() : g.v();
    for (Vertex x = lo; x < hi; ++x) {
      m[v] = x;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

/// Calls fn on every vector in {0,..,base-1}^n.
void for_each_vector(int n, int base, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(x);
    int pos = 0;
    while (pos < n && ++x[pos] == base) x[pos++] = 0;
    if (pos == n) return;
  }
}

PercolationCertificate left_certificate(const Bigraph& g) {
  auto res = find_left_cut_percolating(g);
  if (!res.found()) throw std::logic_error("no certificate");
  return *res.certificate;
}

}  // namespace

TEST(Testers, RelativeMargin) {
  EXPECT_DOUBLE_EQ(relative_margin(2.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(relative_margin(0.0, 0.0), 0.0);
  EXPECT_TRUE(std::isinf(relative_margin(-1.0, 0.0)));
}

TEST(Testers, ConfigValidation) {
  TestConfig bad = quick();
  bad.tol = 0.0;
  EXPECT_THROW(test_sidorenko(cycle4(), bad), std::invalid_argument);
  bad = quick();
  bad.trials = -1;
  EXPECT_THROW(test_sidorenko(cycle4(), bad), std::invalid_argument);
}

TEST(Sidorenko, Examples) {
  const auto rho = test_sidorenko(edge_bigraph(), quick());
  EXPECT_EQ(rho.verdict, Verdict::kHolds);
  EXPECT_NEAR(rho.worst_margin, 0.0, 1e-14);
  EXPECT_EQ(test_sidorenko(cycle4(), quick(1000, 42)).verdict, Verdict::kHolds);
  EXPECT_EQ(test_sidorenko(build_incidence(4, {2}).graph.graph(), quick()).verdict, Verdict::kHolds);
}

TEST(StrongSidorenko, Examples) {
  const auto rho = test_strong_sidorenko(edge_bigraph(), quick());
  EXPECT_EQ(rho.verdict, Verdict::kHolds);
  EXPECT_NEAR(rho.worst_margin, 0.0, 1e-12);
  const auto bad = test_strong_sidorenko(edge_plus_isolated_left(), quick(1000));
  ASSERT_EQ(bad.verdict, Verdict::kViolated);
  EXPECT_NEAR(replay_witness(bad.witness), bad.worst_margin, 1e-12);
  EXPECT_EQ(test_strong_sidorenko(build_incidence(4, {2}).graph.graph(), quick()).verdict, Verdict::kHolds);
  EXPECT_THROW(test_strong_sidorenko(Bigraph({"a"}, {"b"}, {}), quick()), std::domain_error);
}

TEST(WeakDomination, Examples) {
  const auto same = test_weak_domination(cycle4(), cycle4(), quick());
  EXPECT_EQ(same.verdict, Verdict::kHolds);
  EXPECT_NEAR(same.worst_margin, 0.0, 1e-12);
  EXPECT_EQ(test_weak_domination(cycle4(), edge_bigraph(), quick()).verdict, Verdict::kHolds);
  const auto bad = test_weak_domination(edge_bigraph(), cycle4(), quick());
  ASSERT_EQ(bad.verdict, Verdict::kViolated);
  EXPECT_NEAR(replay_witness(bad.witness), bad.worst_margin, 1e-12);
}

TEST(InducedSidorenko, Examples) {
  EXPECT_EQ(test_induced_sidorenko(edge_bigraph(), quick(50)).verdict, Verdict::kHolds);
  EXPECT_EQ(test_induced_sidorenko(book(2), quick(100)).verdict, Verdict::kHolds);
  // A star's induced subgraphs have trivial 2-cores.
  EXPECT_EQ(induced_core_classes(star(3)), 1);
  EXPECT_GE(induced_core_classes(book(2)), 2);
  std::vector<std::string> left;
  for (int i = 0; i < 21; ++i) left.push_back("l" + std::to_string(i));
  EXPECT_THROW(test_induced_sidorenko(Bigraph(left, {}, {}), quick(1)), std::length_error);
}

TEST(WeaklyNorming, Examples) {
  EXPECT_EQ(test_weakly_norming(cycle4(), quick()).verdict, Verdict::kHolds);
  EXPECT_EQ(test_weakly_norming(edge_bigraph(), quick()).verdict, Verdict::kHolds);
  const auto path = Bigraph({"a", "b"}, {"x", "y"}, {{"a", "x"}, {"a", "y"}, {"b", "y"}});
  const auto r = test_weakly_norming(path, quick());
  EXPECT_EQ(r.verdict, Verdict::kPreconditionFailed);
  EXPECT_FALSE(r.reasons.empty());
  EXPECT_EQ(r.trials, 0);
}

TEST(LeftWeakHolder, Examples) {
  const auto ib = build_incidence(4, {2, 3});
  EXPECT_EQ(test_left_weak_holder(ib.graph, quick(100)).verdict, Verdict::kHolds);
  // A single left vertex admits only constant left colorings.
  const auto single = test_left_weak_holder(ColoredBigraph(star(2), std::vector<int>{1, 1}), quick(50));
  EXPECT_EQ(single.verdict, Verdict::kHolds);
  EXPECT_NEAR(single.worst_margin, 0.0, 1e-12);
  const auto irregular = Bigraph({"a", "b"}, {"x", "y"}, {{"a", "x"}, {"a", "y"}, {"b", "y"}});
  EXPECT_EQ(test_left_weak_holder(ColoredBigraph(irregular, std::vector<int>{1, 1, 1}), quick()).verdict,
            Verdict::kPreconditionFailed);
}

TEST(ColorSidorenko, Examples) {
  const auto rho = ColoredFractionalBigraph::from_colored(rainbow_star_graph({1, 2}));
  const auto self = test_color_sidorenko(rho.rainbow_star(), quick());
  EXPECT_EQ(self.verdict, Verdict::kHolds);
  EXPECT_NEAR(self.worst_margin, 0.0, 1e-12);
  const auto h = ColoredFractionalBigraph::from_colored(build_incidence(3, {2}).graph);
  EXPECT_EQ(test_color_sidorenko(h, quick()).verdict, Verdict::kHolds);
  EXPECT_EQ(test_color_sidorenko(h.color_power({{1, 2.0}}), quick()).verdict, Verdict::kHolds);
  EXPECT_THROW(test_color_sidorenko(h.color_power({{1, 0.0}}), quick()), std::domain_error);
}

TEST(Jensen, HandExample) {
  const auto [lhs, rhs] = inductive_jensen_sides({2.0}, {{1.0, 3.0}}, {1.0, 1.0}, {0.5, 0.5});
  EXPECT_DOUBLE_EQ(lhs, 5.0);
  EXPECT_DOUBLE_EQ(rhs, 4.0);
  const auto [l0, r0] = inductive_jensen_sides({}, {}, {2.0, 4.0}, {0.5, 0.5});
  EXPECT_DOUBLE_EQ(l0, r0);
  EXPECT_THROW(inductive_jensen_sides({0.5}, {{1.0, 3.0}}, {1.0, 1.0}, {0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(inductive_jensen_sides({1.0, 2.0}, {{1.0, 3.0}, {1.0, 1.0}}, {1.0, 1.0}, {0.5, 0.5}),
               std::invalid_argument);
}

TEST(Jensen, RandomTrials) {
  const auto zero = test_inductive_jensen(0, quick());
  EXPECT_EQ(zero.verdict, Verdict::kHolds);
  EXPECT_NEAR(zero.worst_margin, 0.0, 1e-12);
  EXPECT_EQ(test_inductive_jensen(3, quick(1000)).verdict, Verdict::kHolds);
}

TEST(ColorRestriction, Examples) {
  const auto ib = build_incidence(3, {1, 2});
  Rng rng(4);
  const auto shape = oracle::random_bigraphon(3, 3, rng);
  BigraphonTuple ws{{1, shape}, {2, shape.with_values(oracle::random_bigraphon(3, 3, rng).values())}};
  const auto all = test_color_restriction(ib.graph, {1, 2}, ws);
  EXPECT_EQ(all.verdict, Verdict::kHolds);
  EXPECT_NEAR(all.worst_margin, 0.0, 1e-12);
  EXPECT_THROW(test_color_restriction(ib.graph, {2}, ws), PreconditionError);
  EXPECT_EQ(test_color_restriction_random(ib.graph, {2}, quick()).verdict, Verdict::kHolds);
  EXPECT_EQ(test_color_restriction_random(ib.graph, {1}, quick()).verdict, Verdict::kHolds);
}

TEST(Testers, Deterministic) {
  const auto cfg = quick(100, 1234);
  EXPECT_EQ(report_to_json(test_sidorenko(book(2), cfg)), report_to_json(test_sidorenko(book(2), cfg)));
  EXPECT_EQ(report_to_json(test_strong_sidorenko(edge_plus_isolated_left(), cfg)),
            report_to_json(test_strong_sidorenko(edge_plus_isolated_left(), cfg)));
  EXPECT_EQ(report_to_json(test_cs_inequality(cycle4(), {}, cfg)),
            report_to_json(test_cs_inequality(cycle4(), {}, cfg)));
  EXPECT_NE(report_to_json(test_sidorenko(book(2), cfg)).dump(),
            report_to_json(test_sidorenko(book(2), quick(100, 1235))).dump());
}

TEST(CsTree, Leaves) {
  const Bigraph g = cycle4();
  const std::vector<int> c{1, 2, 3, 4};
  EXPECT_EQ(cs_tree_leaves(g, c, {}), std::vector<std::vector<int>>{c});
  // Swap the two left vertices, L = {first}.
  VertexMap phi{1, 0, 2, 3};
  const Fold fold{phi, {0}};
  ASSERT_TRUE(is_fold(g, fold));
  const auto leaves = cs_tree_leaves(g, c, {fold});
  ASSERT_EQ(leaves.size(), 2U);
  // Edges sorted as (0,2),(0,3),(1,2),(1,3).
  EXPECT_EQ(leaves[0], (std::vector<int>{1, 2, 1, 2}));
  EXPECT_EQ(leaves[1], (std::vector<int>{3, 4, 3, 4}));
  EXPECT_THROW(cs_tree_leaves(g, {1, 2}, {fold}), std::invalid_argument);
  EXPECT_THROW(cs_tree_leaves(g, c, {Fold{phi, {}}}), std::invalid_argument);
}

TEST(CsTree, LeftmostLeafIsLeftConstant) {
  for (const auto& ks : {std::vector<int>{2}, std::vector<int>{2, 3}, std::vector<int>{1, 3}}) {
    const auto ib = build_incidence(4, ks);
    const Bigraph& g = ib.graph.graph();
    SearchOptions opt;
    opt.pool = reflection_fold_pool(ib);
    const auto res = find_left_cut_percolating(g, opt);
    ASSERT_TRUE(res.found());
    std::vector<int> coloring(static_cast<std::size_t>(g.e()));
    for (int k = 0; k < g.e(); ++k) coloring[k] = 10 * (g.edges()[k].first + 1) + ib.graph.color(k);
    const auto leaves = cs_tree_leaves(g, coloring, res.certificate->folds);
    ASSERT_EQ(leaves.size(), std::size_t{1} << res.certificate->length());
    for (int k = 0; k < g.e(); ++k) EXPECT_EQ(leaves.front()[k] / 10, leaves.front()[0] / 10);
    // The underlying natural coloring survives in every leaf.
    for (const auto& leaf : leaves) {
      for (int k = 0; k < g.e(); ++k) EXPECT_EQ(leaf[k] % 10, ib.graph.color(k));
    }
  }
}

TEST(CsTree, InequalityExamples) {
  const Bigraph g = cycle4();
  Rng rng(8);
  const auto shape = oracle::random_bigraphon(3, 3, rng);
  BigraphonTuple ws;
  for (int c = 1; c <= 4; ++c) ws.emplace(c, shape.with_values(oracle::random_bigraphon(3, 3, rng).values()));
  const auto m0 = verify_cs_inequality(g, {1, 2, 3, 4}, {}, ws);
  EXPECT_EQ(m0.verdict, Verdict::kHolds);
  EXPECT_NEAR(m0.worst_margin, 0.0, 1e-12);
  EXPECT_EQ(verify_cs_inequality(g, {1, 2, 3, 4}, {Fold{{1, 0, 2, 3}, {0}}}, ws).verdict, Verdict::kHolds);

  const auto ib = build_incidence(4, {2});
  SearchOptions opt;
  opt.pool = reflection_fold_pool(ib);
  const auto cert = find_left_cut_percolating(ib.graph.graph(), opt).certificate;
  ASSERT_TRUE(cert.has_value());
  std::vector<int> coloring(static_cast<std::size_t>(ib.graph.graph().e()));
  for (int& c : coloring) c = 1 + static_cast<int>(uniform_below(rng, 3));
  BigraphonTuple ws3(ws.begin(), ws.find(4));
  EXPECT_EQ(verify_cs_inequality(ib.graph.graph(), coloring, cert->folds, ws3).verdict, Verdict::kHolds);
  EXPECT_EQ(test_cs_inequality(cycle4(), {}, quick()).verdict, Verdict::kHolds);
}

TEST(Threshold, TwoThresholdExamples) {
  const Bigraph g = book(2);
  const int n = g.v();
  EXPECT_EQ(two_threshold(g, std::vector<int>(n, 2)), g);
  EXPECT_EQ(two_threshold(g, std::vector<int>(n, 0)).e(), 0);
  EXPECT_EQ(two_threshold(g, std::vector<int>(n, 0)).v(), n);
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  std::vector<char> keep(static_cast<std::size_t>(n), 0);
  for (Vertex v : {0, 1, g.v1()}) f[v] = keep[v] = 1;
  EXPECT_EQ(two_threshold(g, f).e(), induced_subgraph(g, keep).e());
  f[0] = 3;
  EXPECT_THROW(two_threshold(g, f), std::invalid_argument);
}

TEST(Threshold, EndoPreimageMatchesComposition) {
  for (const Bigraph& g : {cycle4(), book(2), star(3), dual_star(2), cycle8()}) {
    const auto endos = all_endomorphisms(g);
    ASSERT_FALSE(endos.empty());
    for_each_vector(g.v(), 3, [&](const std::vector<int>& f) {
      const Bigraph sub = two_threshold(g, f);
      for (const auto& phi : endos) {
        std::vector<int> pulled(f.size());
        for (std::size_t v = 0; v < f.size(); ++v) pulled[v] = f[phi[v]];
        ASSERT_EQ(endo_preimage(g, sub, phi), two_threshold(g, pulled));
      }
    });
    EXPECT_EQ(endo_preimage(g, g, identity_map(g.v())), g);
  }
  const Bigraph g = cycle4();
  EXPECT_THROW(endo_preimage(g, g, VertexMap{0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(endo_preimage(g, edge_bigraph(), identity_map(4)), std::invalid_argument);
}

TEST(Threshold, BoundBalancesAndHolds) {
  Rng rng(17);
  for (const Bigraph& g : {cycle4(), build_incidence(3, {2}).graph.graph(), build_incidence(3, {1, 2}).graph.graph(),
                           build_incidence(4, {2}).graph.graph()}) {
    const auto cert = left_certificate(g);
    std::vector<StepBigraphon> ws;
    for (int i = 0; i < 10; ++i) ws.push_back(sinkhorn_biregularize(oracle::random_bigraphon(3, 3, rng), 1e-13));
    int checked = 0;
    for_each_vector(g.v(), 3, [&](const std::vector<int>& f) {
      for (Vertex v = g.v1(); v < g.v(); ++v) {
        if (f[v] == 2) return;
      }
      const auto b = threshold_bound(g, cert, f);
      ASSERT_EQ(b.h, two_threshold(g, f));
      ASSERT_NEAR(exponent_balance(b.terms()), 0.0, 1e-12);
      double rsum = 0.0;
      for (const auto& [hp, r] : b.r) rsum += r;
      ASSERT_NEAR(rsum + std::ldexp(1.0, -b.m), 1.0, 1e-12);
      for (const auto& w : ws) ASSERT_GE(threshold_bound_margin(b, w), -1e-9);
      ++checked;
    });
    EXPECT_GT(checked, 0);
  }
  const Bigraph g = cycle4();
  std::vector<int> f{0, 0, 2, 0};
  EXPECT_THROW(threshold_bound(g, left_certificate(g), f), std::invalid_argument);
}

TEST(Replay, RejectsUnknownProperty) {
  EXPECT_THROW(replay_witness(nlohmann::json{{"property", "nope"}}), std::invalid_argument);
}
