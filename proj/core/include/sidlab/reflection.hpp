#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sidlab/bigraph.hpp"
#include "sidlab/folds.hpp"

namespace sidlab {

/// Permutation of {0..n-1} in one-line notation.
using Permutation = std::vector<int>;

/// The symmetric group S_n acting on [n] as a reflection group: the
/// reflections are the transpositions, the simple ones are adjacent
/// transpositions.
class TypeAReflectionSystem {
 public:
  /// Throws std::invalid_argument unless 1 <= n.
  explicit TypeAReflectionSystem(int n);

  int n() const { return n_; }
  /// Transpositions (a, b), 1 <= a < b <= n, lexicographic.
  std::vector<std::pair<int, int>> reflections() const;
  /// (i, i+1) for i = 1..n-1.
  std::vector<std::pair<int, int>> simple_reflections() const;
  /// Simple reflections without (k, k+1); they generate the stabilizer of
  /// the set {1..k}.
  std::vector<std::pair<int, int>> parabolic_generators(int k) const;

  /// Left cosets sigma R_k of the parabolic subgroup, each as a sorted list
  /// of permutations, found by closure under the generators. Needs n <= 7.
  std::vector<std::vector<Permutation>> parabolic_cosets(int k) const;

  /// sigma R_k -> sigma({1..k}) is well defined and a bijection onto the
  /// k-subsets of [n].
  bool coset_subset_correspondence(int k) const;

 private:
  int n_;
};

struct IncidenceBigraph {
  int n = 0;
  std::vector<int> uniformities;
  /// Left ids "1".."n"; right ids "{u1,...,uk}#i" for the i-th uniformity
  /// (1-based); edges are containments; edge color is i.
  ColoredBigraph graph;
};

/// Throws std::invalid_argument unless 1 <= n and every k lies in [1, n].
IncidenceBigraph build_incidence(int n, const std::vector<int>& ks);

/// The part of build_incidence(n, ks) with right vertices of index i only,
/// uncolored.
Bigraph incidence_component(int n, int k, int index);

/// The same graph built from parabolic cosets: left vertices are cosets of
/// the stabilizer of 1, right vertices cosets of R_k, adjacent when the
/// cosets intersect. Ids are not meaningful; compare up to isomorphism.
Bigraph coset_intersection_bigraph(int n, const std::vector<int>& ks);

/// +1 if a in U and b not in U, -1 for the reverse, 0 otherwise.
int reflection_side(const std::vector<int>& subset, int a, int b);

/// Fold induced by the transposition (a, b). Throws std::invalid_argument
/// unless 1 <= a < b <= n.
Fold reflection_fold(const IncidenceBigraph& ib, int a, int b);

/// The C(n, 2) transposition folds in lexicographic order of (a, b).
std::vector<Fold> reflection_fold_pool(const IncidenceBigraph& ib);

/// Recovers n and the uniformities from a graph carrying build_incidence
/// ids and edges, or nullopt if the graph is not of that form.
std::optional<IncidenceBigraph> recognize_incidence(const Bigraph& g);

}  // namespace sidlab
