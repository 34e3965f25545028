#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sidlab/bigraph.hpp"
#include "sidlab/folds.hpp"

namespace sidlab {

enum class PercolationMode { kLeft, kEdge };

/// Left mode: trajectory holds sets of left vertices (global indices).
/// Edge mode: trajectory holds sets of edge indices into edges().
/// Every set is sorted.
struct PercolationCertificate {
  PercolationMode mode = PercolationMode::kLeft;
  std::vector<Fold> folds;
  std::vector<std::vector<int>> trajectory;

  int length() const { return static_cast<int>(folds.size()); }
  friend bool operator==(const PercolationCertificate&, const PercolationCertificate&) = default;
};

struct Verification {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Checks every fold axiom and every preimage step from scratch.
Verification verify_certificate(const Bigraph& g, const PercolationCertificate& cert);

inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

struct SearchOptions {
  /// Folds the search may use, in tie-break order. Defaults to
  /// enumerate_folds(g).
  std::optional<std::vector<Fold>> pool;
  std::size_t budget = kDefaultSearchBudget;
};

struct SearchResult {
  std::optional<PercolationCertificate> certificate;
  /// The number of distinct states exceeded the budget.
  bool budget_exhausted = false;
  /// The pool was the full fold set, so a miss without budget exhaustion
  /// means no certificate exists.
  bool pool_exhaustive = false;
  std::size_t states = 0;

  bool found() const { return certificate.has_value(); }
};

/// Breadth-first search over reachable subsets of V1, from every singleton
/// (in vertex order) toward V1; returns a shortest certificate. Throws
/// std::invalid_argument if V1 is empty.
SearchResult find_left_cut_percolating(const Bigraph& g, const SearchOptions& options = {});

/// Same over subsets of E(G). Throws std::invalid_argument if E is empty.
SearchResult find_cut_percolating(const Bigraph& g, const SearchOptions& options = {});

/// Replaces every edge set of an edge-mode certificate by its set of left
/// endpoints.
PercolationCertificate project_to_left(const Bigraph& g, const PercolationCertificate& cert);

/// The group generated by the certificate's involutions is transitive on
/// V1 (left mode) or E (edge mode).
bool folds_act_transitively(const Bigraph& g, const PercolationCertificate& cert);

struct LiftedCertificate {
  Bigraph graph;
  PercolationCertificate certificate;
};

/// Lifts a left-mode certificate of parts[0] to amalgamate_left(parts).
/// companions[j][i] is the fold of parts[j + 1] paired with step i; at each
/// step all folds must agree on V1 and have equal L intersected with V1.
/// Throws std::invalid_argument on a violated hypothesis.
LiftedCertificate lift_certificate(std::span<const Bigraph> parts,
                                   const PercolationCertificate& base,
                                   const std::vector<std::vector<Fold>>& companions);

}  // namespace sidlab
