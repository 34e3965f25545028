#include "sidlab/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace sidlab {

namespace {

// Per-vertex signature: side, then sorted multiset of incident colors.
std::vector<int> vertex_signature(const Bigraph& g, std::span<const int> colors, Vertex v) {
  std::vector<int> sig;
  sig.push_back(g.is_left(v) ? 0 : 1);
  sig.push_back(g.degree(v));
  if (!colors.empty()) {
    std::vector<int> incident;
    for (Vertex u : g.neighbors(v)) incident.push_back(colors[*g.edge_index(v, u)]);
    std::sort(incident.begin(), incident.end());
    sig.insert(sig.end(), incident.begin(), incident.end());
  }
  return sig;
}

class Matcher {
 public:
  Matcher(const Bigraph& source, const Bigraph& target, const MatchOptions& options)
      : a_(source), b_(target), opt_(options) {}

  std::vector<VertexMap> run() {
    if (a_.v1() != b_.v1() || a_.v2() != b_.v2() || a_.e() != b_.e()) return {};
    if (opt_.source_colors.empty() != opt_.target_colors.empty()) {
      throw std::invalid_argument("both or neither graph must carry edge colors");
    }
    const int n = a_.v();
    map_.assign(n, -1);
    used_.assign(n, 0);

    std::map<std::vector<int>, int> sig_ids;
    sig_a_.resize(n);
    sig_b_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      sig_a_[v] = sig_ids.try_emplace(vertex_signature(a_, opt_.source_colors, v),
                                      static_cast<int>(sig_ids.size())).first->second;
    }
    for (Vertex v = 0; v < n; ++v) {
      auto sig = vertex_signature(b_, opt_.target_colors, v);
      auto it = sig_ids.find(sig);
      sig_b_[v] = it == sig_ids.end() ? -1 : it->second;
    }
    // Signature multisets must agree.
    {
      auto sa = sig_a_;
      auto sb = sig_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return {};
    }

    for (const auto& [x, y] : opt_.fixed) {
      if (x < 0 || x >= n || y < 0 || y >= n) throw std::invalid_argument("fixed pair out of range");
      if (map_[x] != -1 && map_[x] != y) return {};
      if (map_[x] == y) continue;
      if (used_[y] || !consistent(x, y)) return {};
      assign(x, y);
      if (opt_.involutions_only && x != y) {
        if (map_[y] != -1 && map_[y] != x) return {};
        if (map_[y] == -1) {
          if (used_[x] || !consistent(y, x)) return {};
          assign(y, x);
        }
      }
    }
    build_order();
    search(0);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  void assign(Vertex x, Vertex y) {
    map_[x] = y;
    used_[y] = 1;
  }
  void unassign(Vertex x) {
    used_[map_[x]] = 0;
    map_[x] = -1;
  }

  bool consistent(Vertex x, Vertex y) const {
    if (sig_a_[x] != sig_b_[y]) return false;
    // Check adjacency (and colors) against every placed vertex on the
    // opposite side; same-side pairs are never adjacent.
    const int n = a_.v();
    for (Vertex z = 0; z < n; ++z) {
      const Vertex w = map_[z];
      if (w == -1 || a_.is_left(z) == a_.is_left(x)) continue;
      const auto ea = a_.edge_index(x, z);
      const auto eb = b_.edge_index(y, w);
      if (ea.has_value() != eb.has_value()) return false;
      if (ea && !opt_.source_colors.empty() && opt_.source_colors[*ea] != opt_.target_colors[*eb]) {
        return false;
      }
    }
    return true;
  }

  // Place vertices so each new one has as many placed neighbors as possible.
  void build_order() {
    const int n = a_.v();
    std::vector<char> placed(n, 0);
    std::vector<int> placed_neighbors(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (map_[v] != -1) {
        placed[v] = 1;
        for (Vertex u : a_.neighbors(v)) ++placed_neighbors[u];
      }
    }
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == -1 || placed_neighbors[v] > placed_neighbors[best] ||
            (placed_neighbors[v] == placed_neighbors[best] && a_.degree(v) > a_.degree(best))) {
          best = v;
        }
      }
      if (best == -1) break;
      placed[best] = 1;
      order_.push_back(best);
      for (Vertex u : a_.neighbors(best)) ++placed_neighbors[u];
    }
  }

  void search(std::size_t depth) {
    if (results_.size() >= opt_.limit) return;
    while (depth < order_.size() && map_[order_[depth]] != -1) ++depth;
    if (depth == order_.size()) {
      results_.push_back(map_);
      return;
    }
    const Vertex x = order_[depth];
    const int n = b_.v();
    for (Vertex y = 0; y < n; ++y) {
      if (used_[y] || !consistent(x, y)) continue;
      if (opt_.involutions_only && y != x) {
        // x -> y forces y -> x.
        if (map_[y] != -1 || used_[x]) continue;
        assign(x, y);
        if (consistent(y, x)) {
          assign(y, x);
          search(depth + 1);
          unassign(y);
        }
        unassign(x);
      } else {
        assign(x, y);
        search(depth + 1);
        unassign(x);
      }
      if (results_.size() >= opt_.limit) return;
    }
  }

  const Bigraph& a_;
  const Bigraph& b_;
  const MatchOptions& opt_;
  std::vector<int> sig_a_;
  std::vector<int> sig_b_;
  VertexMap map_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  std::vector<VertexMap> results_;
};

void check_enumeration_size(const Bigraph& g) {
  if (g.v() > kMaxSymmetryVertices) {
    throw std::length_error("automorphism enumeration is limited to " +
                            std::to_string(kMaxSymmetryVertices) + " vertices (got " +
                            std::to_string(g.v()) + ")");
  }
}

std::vector<VertexMap> enumerate_all(const Bigraph& g, MatchOptions options) {
  check_enumeration_size(g);
  options.limit = kMaxEnumeratedMaps + 1;
  auto maps = find_isomorphisms(g, g, options);
  if (maps.size() > kMaxEnumeratedMaps) {
    throw std::length_error("automorphism group exceeds the enumeration limit");
  }
  return maps;
}

}  // namespace

std::vector<VertexMap> find_isomorphisms(const Bigraph& source, const Bigraph& target,
                                         const MatchOptions& options) {
  if (options.involutions_only && !(source == target)) {
    throw std::invalid_argument("involution search needs source == target");
  }
  return Matcher(source, target, options).run();
}

std::optional<VertexMap> find_isomorphism(const Bigraph& a, const Bigraph& b) {
  MatchOptions opt;
  opt.limit = 1;
  auto maps = find_isomorphisms(a, b, opt);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

bool are_isomorphic(const Bigraph& a, const Bigraph& b) { return find_isomorphism(a, b).has_value(); }

bool are_isomorphic(const ColoredBigraph& a, const ColoredBigraph& b) {
  MatchOptions opt;
  opt.source_colors = a.colors();
  opt.target_colors = b.colors();
  opt.limit = 1;
  return !find_isomorphisms(a.graph(), b.graph(), opt).empty();
}

std::optional<VertexMap> find_flag_isomorphism(const Flag& a, const Flag& b) {
  if (a.labels.size() != b.labels.size()) return std::nullopt;
  MatchOptions opt;
  opt.limit = 1;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    opt.fixed.emplace_back(a.graph.index(a.labels[i]), b.graph.index(b.labels[i]));
  }
  // Fixed pairs must respect sides.
  for (const auto& [x, y] : opt.fixed) {
    if (a.graph.is_left(x) != b.graph.is_left(y)) return std::nullopt;
  }
  auto maps = find_isomorphisms(a.graph, b.graph, opt);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

std::vector<VertexMap> automorphisms(const Bigraph& g) { return enumerate_all(g, {}); }

std::vector<VertexMap> colored_automorphisms(const ColoredBigraph& h) {
  MatchOptions opt;
  opt.source_colors = h.colors();
  opt.target_colors = h.colors();
  return enumerate_all(h.graph(), opt);
}

std::vector<VertexMap> involutive_automorphisms(const Bigraph& g) {
  MatchOptions opt;
  opt.involutions_only = true;
  return enumerate_all(g, opt);
}

bool is_color_edge_transitive(const ColoredBigraph& h, std::span<const VertexMap> group) {
  const Bigraph& g = h.graph();
  std::vector<char> reached(static_cast<std::size_t>(g.e()), 0);
  for (int c : h.color_set()) {
    int first = -1;
    for (int k = 0; k < g.e(); ++k) {
      if (h.color(k) == c) {
        first = k;
        break;
      }
    }
    const auto [l, r] = g.edges()[first];
    for (const auto& sigma : group) {
      const auto image = g.edge_index(sigma[l], sigma[r]);
      if (!image || h.color(*image) != c) return false;
      reached[*image] = 1;
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](char x) { return x != 0; });
}

bool is_color_edge_transitive(const ColoredBigraph& h) {
  const auto group = colored_automorphisms(h);
  return is_color_edge_transitive(h, group);
}

std::vector<Vertex> vertex_orbit(std::span<const VertexMap> generators, Vertex start) {
  std::vector<Vertex> orbit{start};
  std::deque<Vertex> queue{start};
  std::vector<char> seen;
  if (!generators.empty()) seen.assign(generators.front().size(), 0);
  if (seen.empty()) return orbit;
  seen[start] = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      const Vertex y = gen[x];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<int> graph_invariant(const Bigraph& g) {
  std::vector<int> inv{g.v1(), g.v2(), g.e()};
  std::vector<std::vector<int>> profiles;
  for (Vertex v = 0; v < g.v(); ++v) {
    std::vector<int> p{g.is_left(v) ? 0 : 1, g.degree(v)};
    std::vector<int> nd;
    for (Vertex u : g.neighbors(v)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    p.insert(p.end(), nd.begin(), nd.end());
    profiles.push_back(std::move(p));
  }
  std::sort(profiles.begin(), profiles.end());
  for (const auto& p : profiles) {
    inv.push_back(-1);
    inv.insert(inv.end(), p.begin(), p.end());
  }
  return inv;
}

VertexMap identity_map(int n) {
  VertexMap m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  VertexMap out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

VertexMap inverse(const VertexMap& map) {
  VertexMap out(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) out[map[i]] = static_cast<Vertex>(i);
  return out;
}

bool is_bijection(const VertexMap& map, int n) {
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Vertex y : map) {
    if (y < 0 || y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool is_endomorphism(const Bigraph& g, const VertexMap& map) {
  if (static_cast<int>(map.size()) != g.v()) return false;
  for (Vertex v = 0; v < g.v(); ++v) {
    if (map[v] < 0 || map[v] >= g.v() || g.is_left(v) != g.is_left(map[v])) return false;
  }
  for (const auto& [l, r] : g.edges()) {
    if (!g.adjacent(map[l], map[r])) return false;
  }
  return true;
}

bool is_automorphism(const Bigraph& g, const VertexMap& map) {
  // A bijective endomorphism of a finite graph is an automorphism.
  return is_bijection(map, g.v()) && is_endomorphism(g, map);
}

}  // namespace sidlab
