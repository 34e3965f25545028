#include "sidlab/bigraph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace sidlab {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

void sort_ids(std::vector<VertexId>& ids) {
  std::sort(ids.begin(), ids.end(),
            [](const VertexId& a, const VertexId& b) { return id_less(a, b); });
}

}  // namespace

bool id_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t i_end = i;
      std::size_t j_end = j;
      while (i_end < a.size() && is_digit(a[i_end])) ++i_end;
      while (j_end < b.size() && is_digit(b[j_end])) ++j_end;
      // Compare numerically without overflow: strip leading zeros, then
      // longer run is larger, then lexicographic.
      std::size_t i0 = i;
      std::size_t j0 = j;
      while (i0 + 1 < i_end && a[i0] == '0') ++i0;
      while (j0 + 1 < j_end && b[j0] == '0') ++j0;
      const std::size_t len_a = i_end - i0;
      const std::size_t len_b = j_end - j0;
      if (len_a != len_b) return len_a < len_b;
      const int cmp = a.substr(i0, len_a).compare(b.substr(j0, len_b));
      if (cmp != 0) return cmp < 0;
      // Equal values: fewer leading zeros first keeps the order strict.
      if (i_end - i != j_end - j) return i_end - i < j_end - j;
      i = i_end;
      j = j_end;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

Bigraph::Bigraph(std::vector<VertexId> left, std::vector<VertexId> right,
                 const std::vector<std::pair<VertexId, VertexId>>& edges)
    : left_(std::move(left)), right_(std::move(right)) {
  sort_ids(left_);
  sort_ids(right_);
  for (const auto* side : {&left_, &right_}) {
    if (std::adjacent_find(side->begin(), side->end()) != side->end()) {
      throw std::invalid_argument("duplicate vertex id");
    }
  }
  std::set<std::string_view> left_set(left_.begin(), left_.end());
  for (const auto& r : right_) {
    if (left_set.count(r) != 0) {
      throw std::invalid_argument("vertex id '" + r + "' appears on both sides");
    }
  }

  edges_.reserve(edges.size());
  for (const auto& [l, r] : edges) {
    const auto li = std::lower_bound(left_.begin(), left_.end(), l,
                                     [](const VertexId& a, const VertexId& b) { return id_less(a, b); });
    if (li == left_.end() || *li != l) {
      throw std::invalid_argument("edge (" + l + "," + r + "): '" + l + "' is not a left vertex");
    }
    const auto ri = std::lower_bound(right_.begin(), right_.end(), r,
                                     [](const VertexId& a, const VertexId& b) { return id_less(a, b); });
    if (ri == right_.end() || *ri != r) {
      throw std::invalid_argument("edge (" + l + "," + r + "): '" + r + "' is not a right vertex");
    }
    edges_.emplace_back(static_cast<Vertex>(li - left_.begin()),
                        v1() + static_cast<Vertex>(ri - right_.begin()));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }

  adjacency_.assign(static_cast<std::size_t>(v()), {});
  edge_lookup_.assign(static_cast<std::size_t>(v1()) * static_cast<std::size_t>(v2()), -1);
  for (int k = 0; k < e(); ++k) {
    const auto [l, r] = edges_[k];
    adjacency_[l].push_back(r);
    adjacency_[r].push_back(l);
    edge_lookup_[static_cast<std::size_t>(l) * v2() + (r - v1())] = k;
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::vector<VertexId> Bigraph::ids() const {
  std::vector<VertexId> out(left_);
  out.insert(out.end(), right_.begin(), right_.end());
  return out;
}

const VertexId& Bigraph::id(Vertex v) const {
  if (v < 0 || v >= this->v()) throw std::out_of_range("vertex index out of range");
  return v < v1() ? left_[v] : right_[v - v1()];
}

std::optional<Vertex> Bigraph::find(std::string_view id) const {
  const auto cmp = [](const VertexId& a, std::string_view b) { return id_less(a, b); };
  if (auto it = std::lower_bound(left_.begin(), left_.end(), id, cmp); it != left_.end() && *it == id) {
    return static_cast<Vertex>(it - left_.begin());
  }
  if (auto it = std::lower_bound(right_.begin(), right_.end(), id, cmp);
      it != right_.end() && *it == id) {
    return v1() + static_cast<Vertex>(it - right_.begin());
  }
  return std::nullopt;
}

Vertex Bigraph::index(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw std::invalid_argument("unknown vertex id '" + std::string(id) + "'");
}

std::pair<VertexId, VertexId> Bigraph::edge_ids(int edge) const {
  return {id(edges_.at(edge).first), id(edges_.at(edge).second)};
}

std::optional<int> Bigraph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= v() || b >= v()) return std::nullopt;
  if (is_left(a) == is_left(b)) return std::nullopt;
  if (!is_left(a)) std::swap(a, b);
  const int k = edge_lookup_[static_cast<std::size_t>(a) * v2() + (b - v1())];
  if (k < 0) return std::nullopt;
  return k;
}

std::vector<int> Bigraph::component_labels(const std::vector<char>& removed) const {
  std::vector<int> label(static_cast<std::size_t>(v()), -1);
  int next = 0;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < v(); ++s) {
    if (label[s] != -1 || (!removed.empty() && removed[s])) continue;
    label[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : adjacency_[x]) {
        if (label[y] == -1 && (removed.empty() || !removed[y])) {
          label[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

int Bigraph::component_count(const std::vector<char>& removed) const {
  const auto labels = component_labels(removed);
  int count = 0;
  for (int l : labels) count = std::max(count, l + 1);
  return count;
}

bool Bigraph::connected() const { return component_count({}) <= 1; }

bool Bigraph::has_isolated_vertices() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& nb) { return nb.empty(); });
}

Bigraph Bigraph::spanning_subgraph(std::span<const int> edge_indices) const {
  std::vector<std::pair<VertexId, VertexId>> kept;
  kept.reserve(edge_indices.size());
  for (int k : edge_indices) kept.push_back(edge_ids(k));
  return Bigraph(left_, right_, kept);
}

Flag::Flag(Bigraph g, std::vector<VertexId> theta) : graph(std::move(g)), labels(std::move(theta)) {
  std::set<VertexId> seen;
  for (const auto& l : labels) {
    if (!graph.find(l)) throw std::invalid_argument("flag label '" + l + "' is not a vertex");
    if (!seen.insert(l).second) throw std::invalid_argument("flag labeling is not injective");
  }
}

ColoredBigraph::ColoredBigraph(Bigraph g, std::vector<int> colors)
    : graph_(std::move(g)), colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != graph_.e()) {
    throw std::invalid_argument("edge coloring must assign exactly one color per edge");
  }
}

ColoredBigraph::ColoredBigraph(Bigraph g, int color)
    : graph_(std::move(g)), colors_(static_cast<std::size_t>(graph_.e()), color) {}

std::vector<int> ColoredBigraph::color_set() const {
  std::vector<int> out(colors_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int ColoredBigraph::edges_of_color(int c) const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

int ColoredBigraph::color_degree(Vertex v, int c) const {
  int d = 0;
  for (Vertex u : graph_.neighbors(v)) {
    if (colors_[*graph_.edge_index(v, u)] == c) ++d;
  }
  return d;
}

bool ColoredBigraph::is_right_uniform() const {
  for (Vertex w = graph_.v1(); w < graph_.v(); ++w) {
    const auto& nb = graph_.neighbors(w);
    for (Vertex u : nb) {
      if (colors_[*graph_.edge_index(u, w)] != colors_[*graph_.edge_index(nb.front(), w)]) return false;
    }
  }
  return true;
}

bool ColoredBigraph::is_left_color_regular() const {
  if (graph_.v1() == 0) return true;
  for (int c : color_set()) {
    const int d0 = color_degree(0, c);
    for (Vertex v = 1; v < graph_.v1(); ++v) {
      if (color_degree(v, c) != d0) return false;
    }
  }
  return true;
}

int ColoredBigraph::right_color(Vertex w) const {
  const auto& nb = graph_.neighbors(w);
  if (nb.empty()) return -1;
  return colors_[*graph_.edge_index(nb.front(), w)];
}

ColoredBigraph ColoredBigraph::restrict_colors(std::span<const int> keep) const {
  std::vector<int> edges;
  std::vector<int> colors;
  for (int k = 0; k < graph_.e(); ++k) {
    if (std::find(keep.begin(), keep.end(), colors_[k]) != keep.end()) {
      edges.push_back(k);
      colors.push_back(colors_[k]);
    }
  }
  // spanning_subgraph preserves relative edge order, so colors line up.
  return ColoredBigraph(graph_.spanning_subgraph(edges), std::move(colors));
}

Bigraph induced_subgraph(const Bigraph& g, std::span<const VertexId> u) {
  std::vector<char> keep(static_cast<std::size_t>(g.v()), 0);
  for (const auto& id : u) keep[g.index(id)] = 1;
  return induced_subgraph(g, keep);
}

Bigraph induced_subgraph(const Bigraph& g, const std::vector<char>& keep) {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  for (Vertex v = 0; v < g.v(); ++v) {
    if (!keep[v]) continue;
    (g.is_left(v) ? left : right).push_back(g.id(v));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [l, r] : g.edges()) {
    if (keep[l] && keep[r]) edges.emplace_back(g.id(l), g.id(r));
  }
  return Bigraph(std::move(left), std::move(right), edges);
}

Bigraph amalgamate_left(std::span<const Bigraph> parts) {
  if (parts.empty()) return Bigraph();
  const auto& left = parts.front().left_ids();
  std::vector<VertexId> right;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<VertexId> seen;
  for (const auto& part : parts) {
    if (part.left_ids() != left) throw std::invalid_argument("amalgamation parts have different left sides");
    for (const auto& r : part.right_ids()) {
      if (!seen.insert(r).second) {
        throw std::invalid_argument("right vertex id '" + r + "' occurs in more than one part");
      }
      right.push_back(r);
    }
    for (int k = 0; k < part.e(); ++k) edges.push_back(part.edge_ids(k));
  }
  return Bigraph(left, std::move(right), edges);
}

Bigraph disjoint_union(const Bigraph& a, const Bigraph& b, std::string_view prefix_a,
                       std::string_view prefix_b) {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [g, prefix] : {std::pair{&a, prefix_a}, std::pair{&b, prefix_b}}) {
    const std::string p(prefix);
    for (const auto& id : g->left_ids()) left.push_back(p + id);
    for (const auto& id : g->right_ids()) right.push_back(p + id);
    for (int k = 0; k < g->e(); ++k) {
      const auto [l, r] = g->edge_ids(k);
      edges.emplace_back(p + l, p + r);
    }
  }
  return Bigraph(std::move(left), std::move(right), edges);
}

std::vector<char> core_mask(const Bigraph& g, std::vector<char> alive, const std::vector<char>& protect) {
  std::vector<int> deg(static_cast<std::size_t>(g.v()), 0);
  for (const auto& [l, r] : g.edges()) {
    if (alive[l] && alive[r]) {
      ++deg[l];
      ++deg[r];
    }
  }
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < g.v(); ++v) {
    if (alive[v] && deg[v] < 2 && (protect.empty() || !protect[v])) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (Vertex u : g.neighbors(v)) {
      if (!alive[u]) continue;
      if (--deg[u] < 2 && (protect.empty() || !protect[u])) queue.push_back(u);
    }
  }
  return alive;
}

Bigraph two_core(const Bigraph& g) {
  return induced_subgraph(g, core_mask(g, std::vector<char>(static_cast<std::size_t>(g.v()), 1), {}));
}

Flag two_core_flag(const Flag& f) {
  std::vector<char> protect(static_cast<std::size_t>(f.graph.v()), 0);
  for (const auto& l : f.labels) protect[f.graph.index(l)] = 1;
  auto keep = core_mask(f.graph, std::vector<char>(static_cast<std::size_t>(f.graph.v()), 1), protect);
  return Flag(induced_subgraph(f.graph, keep), f.labels);
}

}  // namespace sidlab
