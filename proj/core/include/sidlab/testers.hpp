#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sidlab/bigraph.hpp"
#include "sidlab/density.hpp"
#include "sidlab/folds.hpp"
#include "sidlab/fractional.hpp"
#include "sidlab/percolation.hpp"

namespace sidlab {

enum class Verdict { kHolds, kViolated, kPreconditionFailed };
std::string to_string(Verdict v);

/// Sampling parameters shared by every randomized tester.
struct TestConfig {
  int trials = 1000;
  /// Largest grid; each trial draws its own size in [2, rows] x [2, cols]
  /// (or exactly 1 when the bound is 1).
  int rows = 4;
  int cols = 4;
  std::uint64_t seed = 0;
  /// Relative tolerance: a trial fails when (big - small) / small < -tol.
  double tol = 1e-9;
  /// Lower bound of sampled entries.
  double floor = 1e-3;
  /// Mix in near-indicator matrices and aligned weight functions.
  bool adversarial = true;
  /// Draw random step weights mu, nu instead of uniform ones.
  bool nonuniform_weights = false;
  double sinkhorn_tol = 1e-10;
};

/// Outcome of a randomized test. Numeric evidence, not proof.
struct TestReport {
  std::string property;
  Verdict verdict = Verdict::kHolds;
  int trials = 0;
  /// Trials that could not be evaluated (e.g. Sinkhorn did not converge).
  int skipped = 0;
  /// Minimum relative margin over evaluated trials; +inf if none.
  double worst_margin = 0.0;
  /// Inputs of the worst trial; set on violation.
  nlohmann::json witness;
  std::uint64_t seed = 0;
  std::vector<std::string> reasons;
  std::string note = "numeric evidence, not proof";
};

nlohmann::json report_to_json(const TestReport& r);

/// Relative margin of the claim big >= small.
double relative_margin(double big, double small);

/// Recomputes the margin of a witness emitted by any tester.
double replay_witness(const nlohmann::json& witness);

/// t(G,W) >= t(rho,W)^e(G).
TestReport test_sidorenko(const Bigraph& g, const TestConfig& cfg = {});

/// t(G;f,g;W) >= (int Prod f_v^(1/e) Prod g_w^(1/e) W)^e(G).
/// Throws std::domain_error if e(G) = 0.
TestReport test_strong_sidorenko(const Bigraph& g, const TestConfig& cfg = {});

/// t(G,W)/t(rho,W)^e(G) >= t(H,W)/t(rho,W)^e(H) on biregularized W.
TestReport test_weak_domination(const Bigraph& g, const Bigraph& h, const TestConfig& cfg = {});

/// Weak domination of every induced subgraph, one class per isomorphism
/// type of 2-core. Throws std::length_error if v(G) > 20.
TestReport test_induced_sidorenko(const Bigraph& g, const TestConfig& cfg = {});

/// Number of 2-core classes test_induced_sidorenko checks.
int induced_core_classes(const Bigraph& g);

/// Biregularity precheck, then t((G,c),W) <= Prod_e t(G,W_c(e))^(1/e(G)).
TestReport test_weakly_norming(const Bigraph& g, const TestConfig& cfg = {});

/// Left-color-regularity precheck, then the left-weakly Hoelder bound over
/// random left colorings.
TestReport test_left_weak_holder(const ColoredBigraph& h, const TestConfig& cfg = {});

/// t(h,W) >= t(rho_h,W)^e(h). Throws std::domain_error if e(h) = 0.
TestReport test_color_sidorenko(const ColoredFractionalBigraph& h, const TestConfig& cfg = {});

/// Both sides of the inductive Jensen bound on a finite probability space.
/// f[i][x] > 0, g[x] > 0, p non-increasing with p_n >= 1.
std::pair<double, double> inductive_jensen_sides(const std::vector<double>& p,
                                                 const std::vector<std::vector<double>>& f,
                                                 const std::vector<double>& g, const std::vector<double>& mu);

TestReport test_inductive_jensen(int n, const TestConfig& cfg = {});

/// Single instance of t(H_C,W) <= t(H,W) / Prod_{i not in C} t(rho,W_i)^e_i(H).
/// Throws PreconditionError unless H is right-uniform and W_i is left-regular
/// and strictly positive for every color i outside C.
TestReport test_color_restriction(const ColoredBigraph& h, const std::vector<int>& colors,
                                  const BigraphonTuple& ws, double tol = 1e-9);

/// Randomized version: colors outside C get row-normalized bigraphons.
TestReport test_color_restriction_random(const ColoredBigraph& h, const std::vector<int>& colors,
                                         const TestConfig& cfg = {});

/// Leaf colorings of the Cauchy-Schwarz tree, left to right. Each node
/// labeled c' at height i-1 has children c' o (phi_i)_L and c' o (phi_i)_L^*.
/// Throws std::invalid_argument on an invalid fold or coloring.
std::vector<std::vector<int>> cs_tree_leaves(const Bigraph& g, const std::vector<int>& coloring,
                                             const std::vector<Fold>& folds);

/// t((G,c),W) <= Prod_leaves t((G,c_t),W)^(2^-m) for one tuple.
TestReport verify_cs_inequality(const Bigraph& g, const std::vector<int>& coloring,
                                const std::vector<Fold>& folds, const BigraphonTuple& ws, double tol = 1e-9);

/// Random colorings (up to `max_colors` colors), fold sequences of length
/// up to `max_folds` drawn from `pool` (all folds if empty) and tuples.
TestReport test_cs_inequality(const Bigraph& g, const std::vector<Fold>& pool, const TestConfig& cfg = {},
                              int max_colors = 3, int max_folds = 3);

/// Spanning subgraph with the edges where f(v) + f(w) >= 2; f indexed by
/// global vertex. Throws std::invalid_argument on a value outside {0,1,2}.
Bigraph two_threshold(const Bigraph& g, const std::vector<int>& f);

/// Spanning subgraph of g whose edges map into `sub` under phi. Throws
/// std::invalid_argument if phi is not an endomorphism or `sub` is not a
/// spanning subgraph of g.
Bigraph endo_preimage(const Bigraph& g, const Bigraph& sub, const VertexMap& phi);

/// Bound t(H,W) <= t(G,W)^(2^-m) / t(rho,W)^ell * Prod t(H',W)^r(H') for a
/// 2-threshold subgraph H = G_f, read off a left-cut-percolating certificate.
struct ThresholdBound {
  Bigraph g;
  Bigraph h;
  int m = 0;
  double ell = 0.0;
  std::vector<std::pair<Bigraph, double>> r;

  /// Terms (graph, exponent) of the bound's logarithm with H at exponent -1;
  /// their exponent balance is zero.
  std::vector<std::pair<Bigraph, double>> terms() const;
};

/// Throws std::invalid_argument if f is not {0,1,2}-valued, f^{-1}(2) is not
/// inside V1, or the certificate does not verify.
ThresholdBound threshold_bound(const Bigraph& g, const PercolationCertificate& cert, const std::vector<int>& f);

/// Relative margin of the bound on W.
double threshold_bound_margin(const ThresholdBound& b, const StepBigraphon& w);

}  // namespace sidlab
