#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sidlab/bigraph.hpp"
#include "sidlab/testers.hpp"

namespace sidlab {

/// Right-degree profile: counts[k] = number of right vertices of degree k.
struct DegreeProfile {
  int v1 = 0;
  std::map<int, std::int64_t> counts;

  /// Throws std::invalid_argument unless v1 >= 1, every degree lies in
  /// [1, v1] and every count is nonnegative.
  void validate() const;
  std::int64_t v2() const;
  int max_degree() const;
};

/// Throws PreconditionError if g has isolated vertices.
DegreeProfile degree_profile(const Bigraph& g);

/// One row of a profile check: degree k, its count and the required bound
/// (a lower bound or a divisor).
struct DegreeCheck {
  int k = 0;
  std::int64_t count = 0;
  std::int64_t required = 0;
  bool ok = false;
};

struct ProfileReport {
  bool pass = false;
  std::vector<DegreeCheck> items;
};

/// d_k = 0 or d_k >= C(v1, k) for every k >= 2.
ProfileReport check_largeright(const DegreeProfile& p);
ProfileReport check_largeright(const Bigraph& g);

/// C(v1, r) * C(r, k) divides d_k for k = 2..r, r the maximum degree.
ProfileReport check_conlonlee_divisibility(const DegreeProfile& p);
ProfileReport check_conlonlee_divisibility(const Bigraph& g);

/// Binomial coefficient; throws std::overflow_error past int64.
std::int64_t binomial(int n, int k);

/// Orbit sums for one Aut(h)-orbit of left subsets U with |U| >= 2. Sums run
/// over every sigma in Aut(h), so each equals |Aut(h)|/|orbit| times the
/// plain sum over the orbit.
struct OrbitCheck {
  std::vector<VertexId> representative;
  int orbit_size = 0;
  std::int64_t sum_g = 0;
  std::int64_t sum_h = 0;
  bool zero_iff_zero = false;
  bool dominates = false;
};

struct OrbitReport {
  bool pass = false;
  std::vector<OrbitCheck> orbits;
  int group_order = 0;
  /// Numeric evidence for the left-weakly Hoelder hypothesis.
  TestReport holder_evidence;
  std::string verdict;
};

/// Checks the orbit conditions for g against the colored graph h. Throws
/// PreconditionError listing every unmet structural hypothesis: equal left
/// sides, h right-uniform, nontrivial, no isolated vertices, color-edge
/// transitive and left-color-regular, g without isolated vertices, and no
/// left-weak Hoelder violation found by `holder_cfg`. Throws
/// std::length_error if v1 > 16.
OrbitReport check_orbit_hypotheses(const Bigraph& g, const ColoredBigraph& h, const TestConfig& holder_cfg = {});

struct ReflectiveTreeDecomposition {
  std::vector<std::vector<VertexId>> bags;
  std::vector<std::pair<int, int>> tree_edges;
};

struct RtdReport {
  bool ok = false;
  std::string diagnostic;
  /// C_2 of the first bag; set when ok.
  std::optional<Bigraph> core;
};

/// Checks vertex cover, edge cover, running intersection and the flag
/// 2-core condition on every tree edge; stops at the first failure.
RtdReport verify_rtd(const Bigraph& g, const ReflectiveTreeDecomposition& t);

}  // namespace sidlab
