#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sidlab/bigraph.hpp"

namespace sidlab {

/// A cut-involution `phi` with a left side `left` (sorted global indices).
struct Fold {
  VertexMap phi;
  std::vector<Vertex> left;

  friend bool operator==(const Fold&, const Fold&) = default;
  friend auto operator<=>(const Fold&, const Fold&) = default;
};

/// Sorted fixed points of a vertex map.
std::vector<Vertex> fixed_points(const VertexMap& phi);

/// Automorphism, involution, and G - Fix(phi) has at least two components
/// (any involutive automorphism qualifies if G is disconnected). Throws
/// std::invalid_argument if phi is not a bijection of V(G).
bool is_cut_involution(const Bigraph& g, const VertexMap& phi);

/// Completes a cut-involution to a fold if no component of G - Fix(phi) is
/// setwise fixed. From each swapped pair of components, L takes the one
/// holding the smaller vertex. Throws std::invalid_argument if phi is not a
/// cut-involution.
std::optional<Fold> complete_to_fold(const Bigraph& g, const VertexMap& phi);

/// First violated fold axiom, or nullopt for a valid fold.
std::optional<std::string> fold_violation(const Bigraph& g, const Fold& f);
inline bool is_fold(const Bigraph& g, const Fold& f) { return !fold_violation(g, f).has_value(); }

struct FoldingMaps {
  VertexMap left;   // phi_L: identity on L, phi elsewhere
  VertexMap right;  // phi_L^*: phi on L, identity elsewhere
};

/// Throws std::invalid_argument for an invalid fold.
FoldingMaps folding_maps(const Bigraph& g, const Fold& f);

/// Unchecked phi_L, for callers that validated the fold already.
VertexMap left_folding_map(const Fold& f);
VertexMap right_folding_map(const Fold& f);

/// One canonical fold per non-identity cut-involution that completes, in
/// the order of involutive_automorphisms(g).
std::vector<Fold> enumerate_folds(const Bigraph& g);

}  // namespace sidlab
