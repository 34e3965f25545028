#include <gtest/gtest.h>

#include "sidlab/checkers.hpp"
#include "sidlab/errors.hpp"
#include "sidlab/families.hpp"
#include "sidlab/reflection.hpp"
#include "sidlab/symmetry.hpp"

using namespace sidlab;

namespace {

DegreeProfile profile(int v1, std::map<int, std::int64_t> counts) { return DegreeProfile{v1, std::move(counts)}; }

TestConfig holder_cfg() {
  TestConfig cfg;
  cfg.trials = 50;
  return cfg;
}

/// Left ids "1".."n" and one right vertex per listed neighborhood.
Bigraph from_neighborhoods(int n, const std::vector<std::vector<std::string>>& hoods, const std::string& prefix = "w") {
  std::vector<std::string> left;
  for (int i = 1; i <= n; ++i) left.push_back(std::to_string(i));
  std::vector<std::string> right;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t j = 0; j < hoods.size(); ++j) {
    right.push_back(prefix + std::to_string(j));
    for (const auto& l : hoods[j]) edges.emplace_back(l, right.back());
  }
  return Bigraph(left, right, edges);
}

const std::vector<std::vector<std::string>> kPairs{{"1", "2"}, {"1", "3"}, {"1", "4"},
                                                   {"2", "3"}, {"2", "4"}, {"3", "4"}};

}  // namespace

TEST(Largeright, Examples) {
  EXPECT_TRUE(check_largeright(profile(4, {{2, 6}})).pass);
  EXPECT_FALSE(check_largeright(profile(4, {{2, 5}})).pass);
  EXPECT_TRUE(check_largeright(profile(4, {{3, 4}})).pass);
  EXPECT_TRUE(check_largeright(profile(4, {{1, 1}, {2, 0}})).pass);
  const auto r = check_largeright(profile(4, {{2, 5}, {3, 4}}));
  ASSERT_EQ(r.items.size(), 2U);
  EXPECT_FALSE(r.items[0].ok);
  EXPECT_EQ(r.items[0].required, 6);
  EXPECT_TRUE(r.items[1].ok);
}

TEST(Divisibility, Examples) {
  EXPECT_TRUE(check_conlonlee_divisibility(profile(4, {{2, 6}})).pass);
  EXPECT_FALSE(check_conlonlee_divisibility(profile(4, {{2, 7}})).pass);
  EXPECT_TRUE(check_largeright(profile(4, {{2, 7}})).pass);
  EXPECT_FALSE(check_conlonlee_divisibility(profile(4, {{2, 3}})).pass);
  EXPECT_FALSE(check_largeright(profile(4, {{2, 3}})).pass);
  // r = 3, v1 = 4: C(4,3) C(3,2) = 12 must divide d_2 and C(4,3) = 4 must divide d_3.
  EXPECT_TRUE(check_conlonlee_divisibility(profile(4, {{2, 12}, {3, 4}})).pass);
  EXPECT_FALSE(check_conlonlee_divisibility(profile(4, {{2, 6}, {3, 4}})).pass);
}

TEST(Profiles, GraphEntryPointsAndValidation) {
  const Bigraph g = graph_from_profile(4, {{2, 6}});
  const auto p = degree_profile(g);
  EXPECT_EQ(p.v1, 4);
  EXPECT_EQ(p.counts.at(2), 6);
  EXPECT_TRUE(check_largeright(g).pass);
  EXPECT_TRUE(check_conlonlee_divisibility(g).pass);
  EXPECT_THROW(degree_profile(Bigraph({"a", "b"}, {"x"}, {{"a", "x"}})), PreconditionError);
  EXPECT_THROW(check_largeright(profile(0, {})), std::invalid_argument);
  EXPECT_THROW(check_largeright(profile(3, {{4, 1}})), std::invalid_argument);
  EXPECT_THROW(check_largeright(profile(3, {{2, -1}})), std::invalid_argument);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_THROW(binomial(200, 100), std::overflow_error);
}

TEST(Orbits, UnderlyingGraphGivesEquality) {
  const auto ib = build_incidence(4, {2});
  const auto r = check_orbit_hypotheses(ib.graph.graph(), ib.graph, holder_cfg());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.group_order, 24);
  ASSERT_FALSE(r.orbits.empty());
  for (const auto& o : r.orbits) {
    EXPECT_EQ(o.sum_g, o.sum_h);
    EXPECT_TRUE(o.zero_iff_zero);
  }
  EXPECT_EQ(r.holder_evidence.verdict, Verdict::kHolds);
}

TEST(Orbits, AggregatedSumsPass) {
  const auto ib = build_incidence(4, {2});
  auto hoods = kPairs;
  hoods.push_back({"1", "2"});
  const auto r = check_orbit_hypotheses(from_neighborhoods(4, hoods), ib.graph, holder_cfg());
  EXPECT_TRUE(r.pass);
  // Relabeling right vertices leaves the report unchanged.
  std::reverse(hoods.begin(), hoods.end());
  const auto r2 = check_orbit_hypotheses(from_neighborhoods(4, hoods, "z"), ib.graph, holder_cfg());
  EXPECT_EQ(r2.pass, r.pass);
  ASSERT_EQ(r2.orbits.size(), r.orbits.size());
  for (std::size_t i = 0; i < r.orbits.size(); ++i) EXPECT_EQ(r2.orbits[i].sum_g, r.orbits[i].sum_g);
}

TEST(Orbits, ZeroIffZeroFails) {
  const auto ib = build_incidence(4, {2});
  auto hoods = kPairs;
  hoods.push_back({"1", "2", "3"});
  const auto r = check_orbit_hypotheses(from_neighborhoods(4, hoods), ib.graph, holder_cfg());
  EXPECT_FALSE(r.pass);
  bool saw = false;
  for (const auto& o : r.orbits) saw = saw || !o.zero_iff_zero;
  EXPECT_TRUE(saw);
}

TEST(Orbits, Preconditions) {
  const auto ib = build_incidence(4, {2});
  EXPECT_THROW(check_orbit_hypotheses(from_neighborhoods(3, {{"1", "2"}, {"2", "3"}, {"1", "3"}}), ib.graph,
                                      holder_cfg()),
               PreconditionError);
  // Not color-edge transitive: two colors on a C4.
  const ColoredBigraph mixed(cycle4(), std::vector<int>{1, 1, 2, 2});
  EXPECT_THROW(check_orbit_hypotheses(cycle4(), mixed, holder_cfg()), PreconditionError);
}

TEST(Rtd, SingleBag) {
  for (const Bigraph& g : {cycle4(), book(2), build_incidence(4, {2}).graph.graph()}) {
    const auto r = verify_rtd(g, {{g.ids()}, {}});
    ASSERT_TRUE(r.ok) << r.diagnostic;
    ASSERT_TRUE(r.core.has_value());
    EXPECT_EQ(*r.core, two_core(g));
  }
}

TEST(Rtd, BookTwoBags) {
  const ReflectiveTreeDecomposition t{{{"P", "Q", "A1", "B1"}, {"P", "Q", "A2", "B2"}}, {{0, 1}}};
  const auto r = verify_rtd(book(2), t);
  ASSERT_TRUE(r.ok) << r.diagnostic;
  EXPECT_TRUE(are_isomorphic(*r.core, cycle4()));
}

TEST(Rtd, Failures) {
  const Bigraph b2 = book(2);
  const auto ri = verify_rtd(b2, {{{"P", "Q", "A1", "B1"}, {"P", "Q", "A2", "B2"}, {"B1", "Q"}}, {{0, 1}, {1, 2}}});
  EXPECT_FALSE(ri.ok);
  EXPECT_NE(ri.diagnostic.find("running intersection"), std::string::npos) << ri.diagnostic;
  EXPECT_NE(ri.diagnostic.find("B1"), std::string::npos);

  EXPECT_FALSE(verify_rtd(b2, {{{"P", "Q", "A1", "B1"}}, {}}).ok);
  EXPECT_FALSE(verify_rtd(b2, {{{"P", "Q", "A1", "B1"}, {"P", "Q", "A2", "B2"}}, {}}).ok);
  EXPECT_FALSE(verify_rtd(b2, {{{"P", "Q", "A1", "B1", "X"}}, {}}).ok);
  // Edge (B1, A1) lives in no bag.
  EXPECT_FALSE(verify_rtd(b2, {{{"P", "Q", "A1"}, {"P", "Q", "A2", "B2", "B1"}}, {{0, 1}}}).ok);

  const Bigraph pendant({"a", "b"}, {"c", "d", "e"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"a", "e"}});
  const auto fc = verify_rtd(pendant, {{{"a", "b", "c", "d"}, {"a", "e"}}, {{0, 1}}});
  EXPECT_FALSE(fc.ok);
  EXPECT_NE(fc.diagnostic.find("flag 2-cores"), std::string::npos) << fc.diagnostic;

  EXPECT_FALSE(verify_rtd(Bigraph({"a"}, {"b"}, {}), {{{"a", "b"}}, {}}).ok);
}
