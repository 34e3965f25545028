#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sidlab/bigraph.hpp"

namespace sidlab {

/// Hard limit on v(G) for full automorphism enumeration.
inline constexpr int kMaxSymmetryVertices = 24;
/// Hard limit on the number of maps an enumeration may return.
inline constexpr std::size_t kMaxEnumeratedMaps = 2'000'000;

/// Options for the side-, edge- (and color-) preserving matcher.
struct MatchOptions {
  /// Edge colors of the source and target graph (parallel to edges()),
  /// or empty for uncolored matching.
  std::span<const int> source_colors;
  std::span<const int> target_colors;
  /// Pairs (source vertex, target vertex) forced in every match.
  std::vector<std::pair<Vertex, Vertex>> fixed;
  /// Only involutions; requires source and target to be the same graph.
  bool involutions_only = false;
  /// Stop after this many matches.
  std::size_t limit = kMaxEnumeratedMaps;
};

/// Backtracking search for isomorphisms source -> target. Candidates are
/// restricted by side, degree and per-color degree, then checked against
/// every already-placed vertex. Results are sorted lexicographically.
std::vector<VertexMap> find_isomorphisms(const Bigraph& source, const Bigraph& target,
                                         const MatchOptions& options);

std::optional<VertexMap> find_isomorphism(const Bigraph& a, const Bigraph& b);
bool are_isomorphic(const Bigraph& a, const Bigraph& b);
bool are_isomorphic(const ColoredBigraph& a, const ColoredBigraph& b);

/// Isomorphism of flags that sends each labeled vertex of `a` to the
/// vertex of `b` carrying the same label.
std::optional<VertexMap> find_flag_isomorphism(const Flag& a, const Flag& b);

/// Aut(G), identity first, sorted. Throws std::length_error if
/// v(G) > kMaxSymmetryVertices or the group exceeds kMaxEnumeratedMaps.
std::vector<VertexMap> automorphisms(const Bigraph& g);

/// Aut(H) for a colored bigraph: automorphisms preserving edge colors.
std::vector<VertexMap> colored_automorphisms(const ColoredBigraph& h);

/// Involutive automorphisms, identity included, sorted. Same limits.
std::vector<VertexMap> involutive_automorphisms(const Bigraph& g);

/// Every automorphism of `h` sends an edge of color i to an edge of
/// color i and, for every color, the color class is a single orbit.
bool is_color_edge_transitive(const ColoredBigraph& h, std::span<const VertexMap> group);
bool is_color_edge_transitive(const ColoredBigraph& h);

/// Orbit of `start` under the group generated by `generators`
/// (sorted vertex list).
std::vector<Vertex> vertex_orbit(std::span<const VertexMap> generators, Vertex start);

/// Isomorphism-invariant fingerprint used to bucket graphs before running
/// an exact isomorphism test.
std::vector<int> graph_invariant(const Bigraph& g);

VertexMap identity_map(int n);
VertexMap compose(const VertexMap& outer, const VertexMap& inner);
VertexMap inverse(const VertexMap& map);

bool is_bijection(const VertexMap& map, int n);
bool is_endomorphism(const Bigraph& g, const VertexMap& map);
bool is_automorphism(const Bigraph& g, const VertexMap& map);

}  // namespace sidlab
