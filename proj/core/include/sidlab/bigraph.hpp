#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sidlab {

using VertexId = std::string;

/// Global vertex index. Left vertices occupy [0, v1), right vertices
/// [v1, v1 + v2); within a side, indices follow the canonical id order.
using Vertex = int;

/// A map V(G) -> V(G) stored as the image of every global index.
using VertexMap = std::vector<Vertex>;

/// Edge as (left global index, right global index).
using Edge = std::pair<Vertex, Vertex>;

/// Canonical order on vertex ids: maximal digit runs compare numerically,
/// everything else byte-wise. "2" < "10", "{1,2}#1" < "{1,10}#1".
bool id_less(std::string_view a, std::string_view b);

enum class Side { kLeft, kRight };

/// Finite bigraph with explicit sides. Immutable after construction; ids
/// are stored sorted by `id_less` and every list it emits is in that order.
class Bigraph {
 public:
  Bigraph() = default;

  /// Throws std::invalid_argument if ids repeat, the sides overlap, an
  /// edge endpoint is undeclared or on the wrong side, or an edge repeats.
  Bigraph(std::vector<VertexId> left, std::vector<VertexId> right,
          const std::vector<std::pair<VertexId, VertexId>>& edges);

  int v1() const { return static_cast<int>(left_.size()); }
  int v2() const { return static_cast<int>(right_.size()); }
  int v() const { return v1() + v2(); }
  int e() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& left_ids() const { return left_; }
  const std::vector<VertexId>& right_ids() const { return right_; }
  std::vector<VertexId> ids() const;

  const VertexId& id(Vertex v) const;
  std::optional<Vertex> find(std::string_view id) const;
  /// Throws std::invalid_argument for an unknown id.
  Vertex index(std::string_view id) const;

  bool is_left(Vertex v) const { return v < v1(); }
  Side side(Vertex v) const { return is_left(v) ? Side::kLeft : Side::kRight; }

  /// Sorted by (left, right).
  const std::vector<Edge>& edges() const { return edges_; }
  std::pair<VertexId, VertexId> edge_ids(int edge) const;
  /// Index into edges() of the edge between a and b (either order), if any.
  std::optional<int> edge_index(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Connected-component label per vertex, ignoring vertices with
  /// removed[v] set (their label is -1). Labels are assigned in order of
  /// the smallest vertex of each component.
  std::vector<int> component_labels(const std::vector<char>& removed) const;
  int component_count(const std::vector<char>& removed) const;
  bool connected() const;
  bool has_isolated_vertices() const;

  /// Spanning subgraph keeping only the listed edges (indices into edges()).
  Bigraph spanning_subgraph(std::span<const int> edge_indices) const;

  friend bool operator==(const Bigraph& a, const Bigraph& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> left_;
  std::vector<VertexId> right_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<int> edge_lookup_;  // v1 x v2, -1 when absent
};

/// Partially labeled bigraph; `labels` is the injective labeling theta.
struct Flag {
  Bigraph graph;
  std::vector<VertexId> labels;

  Flag() = default;
  /// Throws std::invalid_argument if labels repeat or are not vertices.
  Flag(Bigraph g, std::vector<VertexId> theta);

  friend bool operator==(const Flag&, const Flag&) = default;
};

/// Bigraph with an edge coloring; colors[i] is the color of edges()[i].
class ColoredBigraph {
 public:
  ColoredBigraph() = default;
  /// Throws std::invalid_argument if colors.size() != g.e().
  ColoredBigraph(Bigraph g, std::vector<int> colors);
  /// Constant coloring.
  explicit ColoredBigraph(Bigraph g, int color = 1);

  const Bigraph& graph() const { return graph_; }
  const std::vector<int>& colors() const { return colors_; }
  int color(int edge) const { return colors_[edge]; }

  /// Sorted distinct colors in use.
  std::vector<int> color_set() const;
  int edges_of_color(int c) const;
  int color_degree(Vertex v, int c) const;

  /// All edges at each right vertex share one color.
  bool is_right_uniform() const;
  /// d_{H,i}(v) independent of v over the left side for every color.
  bool is_left_color_regular() const;
  /// Color of the edges at a right vertex of a right-uniform graph; -1 if
  /// the vertex is isolated.
  int right_color(Vertex w) const;

  /// Keeps only edges with color in `keep`; vertex sets unchanged.
  ColoredBigraph restrict_colors(std::span<const int> keep) const;

  friend bool operator==(const ColoredBigraph&, const ColoredBigraph&) = default;

 private:
  Bigraph graph_;
  std::vector<int> colors_;
};

/// Subgraph induced by a vertex-id set. Throws std::invalid_argument on an
/// unknown id.
Bigraph induced_subgraph(const Bigraph& g, std::span<const VertexId> u);
/// Same, on a membership mask over global indices.
Bigraph induced_subgraph(const Bigraph& g, const std::vector<char>& keep);

/// Amalgamation over the left side: shared V1, union of right sides and
/// edges. Throws std::invalid_argument if left sides differ or right ids
/// collide.
Bigraph amalgamate_left(std::span<const Bigraph> parts);

/// Disjoint union with ids prefixed by `prefix_a` / `prefix_b`.
Bigraph disjoint_union(const Bigraph& a, const Bigraph& b,
                       std::string_view prefix_a = "a.",
                       std::string_view prefix_b = "b.");

/// Fixed point of deleting vertices of degree < 2. On disconnected input
/// this is the union of the cores of the components.
Bigraph two_core(const Bigraph& g);

/// Same, never deleting labeled vertices.
Flag two_core_flag(const Flag& f);

/// Membership mask of the 2-core of g restricted to `alive`; vertices in
/// `protect` are never deleted.
std::vector<char> core_mask(const Bigraph& g, std::vector<char> alive,
                            const std::vector<char>& protect);

}  // namespace sidlab
