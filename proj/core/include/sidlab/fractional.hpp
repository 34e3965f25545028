#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "sidlab/bigraph.hpp"
#include "sidlab/density.hpp"

namespace sidlab {

/// Subset of a fractional bigraph's vertex set, bit k = k-th vertex.
using SubsetMask = std::uint64_t;

/// Nonnegative weights h(U, i) on (vertex subset, color) pairs.
class ColoredFractionalBigraph {
 public:
  /// Largest supported vertex set.
  static constexpr int kMaxVertices = 63;

  ColoredFractionalBigraph() = default;
  /// Vertex ids are kept in canonical order. Throws std::invalid_argument
  /// for repeated ids or more than kMaxVertices vertices.
  ColoredFractionalBigraph(std::vector<VertexId> vertices, std::set<int> colors);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  int v() const { return static_cast<int>(vertices_.size()); }
  const std::set<int>& colors() const { return colors_; }
  /// Nonzero weights only.
  const std::map<std::pair<SubsetMask, int>, double>& weights() const { return weights_; }

  double weight(SubsetMask u, int color) const;
  /// Throws std::invalid_argument for a negative or non-finite weight, an
  /// unknown color or a mask outside the vertex set.
  void set_weight(SubsetMask u, int color, double value);
  SubsetMask mask_of(std::span<const VertexId> ids) const;

  double e(int color) const;
  double e() const;
  double degree(int vertex, int color) const;
  bool is_color_regular(double tol = 1e-12) const;

  /// h_H for a right-uniform colored bigraph: h(U, i) counts right vertices
  /// with neighborhood U whose edges have color i. Throws
  /// std::invalid_argument if H is not right-uniform, has an isolated right
  /// vertex, or more than kMaxVertices left vertices.
  static ColoredFractionalBigraph from_colored(const ColoredBigraph& h);

  /// h^p(U, i) = h(U, i) * p_i. Throws std::invalid_argument if p misses a
  /// color or has a negative entry.
  ColoredFractionalBigraph color_power(const std::map<int, double>& p) const;

  /// rho_h: one vertex "1", weight e_i(h)/e(h) on ({1}, i). Throws
  /// std::domain_error if e(h) = 0.
  ColoredFractionalBigraph rainbow_star() const;

  friend bool operator==(const ColoredFractionalBigraph&, const ColoredFractionalBigraph&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::set<int> colors_;
  std::map<std::pair<SubsetMask, int>, double> weights_;
};

/// The C-rainbow star as a colored bigraph: left "1", right one vertex per
/// color named after it, each edge colored by its right endpoint.
ColoredBigraph rainbow_star_graph(const std::set<int>& colors);

/// Sum over X^{V_h} of prod_{U,i} t(K_{|U|,1}^L, W_i)(x_U)^{h(U,i)}, with
/// 0^0 = 1. Throws std::invalid_argument for a missing color and
/// std::length_error if rows^v(h) exceeds the enumeration cap.
double fractional_density(const ColoredFractionalBigraph& h, const BigraphonTuple& ws);

/// Rescales a positive tuple so that every non-pivot member is left
/// regular while t(h, .) and t(rho_h, .) stay fixed: a non-pivot W_i is
/// multiplied by t(rho, W_i) / t(e_1, W_i)(x) and the pivot by the product
/// over j != pivot of (t(e_1, W_j)(x) / t(rho, W_j))^{e_j(h) / e_pivot(h)}.
/// Throws PreconditionError if h is not color-regular, e_pivot(h) = 0, the
/// pivot is not a color of h, or a member of the tuple is not positive.
BigraphonTuple left_regularize_tuple(const ColoredFractionalBigraph& h, const BigraphonTuple& ws, int pivot);

}  // namespace sidlab
