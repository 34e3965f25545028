#include "sidlab/folds.hpp"

#include <algorithm>
#include <stdexcept>

#include "sidlab/symmetry.hpp"

namespace sidlab {

namespace {

std::vector<char> fixed_mask(const VertexMap& phi) {
  std::vector<char> mask(phi.size(), 0);
  for (std::size_t v = 0; v < phi.size(); ++v) mask[v] = phi[v] == static_cast<Vertex>(v);
  return mask;
}

bool is_involution(const VertexMap& phi) {
  for (std::size_t v = 0; v < phi.size(); ++v) {
    if (phi[phi[v]] != static_cast<Vertex>(v)) return false;
  }
  return true;
}

}  // namespace

std::vector<Vertex> fixed_points(const VertexMap& phi) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < phi.size(); ++v) {
    if (phi[v] == static_cast<Vertex>(v)) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool is_cut_involution(const Bigraph& g, const VertexMap& phi) {
  if (!is_bijection(phi, g.v())) throw std::invalid_argument("phi is not a bijection of V(G)");
  if (!is_automorphism(g, phi) || !is_involution(phi)) return false;
  if (!g.connected()) return true;
  return g.component_count(fixed_mask(phi)) >= 2;
}

std::optional<Fold> complete_to_fold(const Bigraph& g, const VertexMap& phi) {
  if (!is_cut_involution(g, phi)) throw std::invalid_argument("phi is not a cut-involution");
  const auto labels = g.component_labels(fixed_mask(phi));
  const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  // phi permutes components; partner[c] is the image of component c.
  std::vector<int> partner(static_cast<std::size_t>(count), -1);
  for (Vertex v = 0; v < g.v(); ++v) {
    if (labels[v] >= 0) partner[labels[v]] = labels[phi[v]];
  }
  for (int c = 0; c < count; ++c) {
    if (partner[c] == c) return std::nullopt;
  }
  // Labels are numbered by smallest vertex, so the smaller label wins.
  Fold fold{phi, {}};
  for (Vertex v = 0; v < g.v(); ++v) {
    if (labels[v] >= 0 && labels[v] < partner[labels[v]]) fold.left.push_back(v);
  }
  return fold;
}

std::optional<std::string> fold_violation(const Bigraph& g, const Fold& f) {
  if (!is_bijection(f.phi, g.v())) return "phi is not a bijection of V(G)";
  if (!is_automorphism(g, f.phi)) return "phi is not an automorphism";
  if (!is_involution(f.phi)) return "phi is not an involution";
  if (!is_cut_involution(g, f.phi)) return "Fix(phi) is not a vertex cut";
  const int n = g.v();
  std::vector<int> part(static_cast<std::size_t>(n), -1);  // 0 = L, 1 = Fix, 2 = phi(L)
  for (Vertex v : f.left) {
    if (v < 0 || v >= n) return "left side contains an unknown vertex";
    if (part[v] != -1) return "left side repeats vertex " + g.id(v);
    part[v] = 0;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (f.phi[v] != v) continue;
    if (part[v] != -1) return "vertex " + g.id(v) + " is both in L and fixed";
    part[v] = 1;
  }
  for (Vertex v : f.left) {
    const Vertex w = f.phi[v];
    if (part[w] != -1 && part[w] != 2) return "L and phi(L) meet at " + g.id(w);
    part[w] = 2;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] == -1) return "vertex " + g.id(v) + " is not covered by L, Fix, phi(L)";
  }
  for (const auto& [l, r] : g.edges()) {
    if (part[l] + part[r] == 2 && part[l] != 1) {
      return "edge " + g.id(l) + "-" + g.id(r) + " joins L to phi(L)";
    }
  }
  return std::nullopt;
}

VertexMap left_folding_map(const Fold& f) {
  VertexMap m = f.phi;
  for (Vertex v : f.left) m[v] = v;
  return m;
}

VertexMap right_folding_map(const Fold& f) {
  VertexMap m = identity_map(static_cast<int>(f.phi.size()));
  for (Vertex v : f.left) m[v] = f.phi[v];
  return m;
}

FoldingMaps folding_maps(const Bigraph& g, const Fold& f) {
  if (auto why = fold_violation(g, f)) throw std::invalid_argument("invalid fold: " + *why);
  return {left_folding_map(f), right_folding_map(f)};
}

std::vector<Fold> enumerate_folds(const Bigraph& g) {
  std::vector<Fold> folds;
  const VertexMap id = identity_map(g.v());
  for (const auto& phi : involutive_automorphisms(g)) {
    if (phi == id || !is_cut_involution(g, phi)) continue;
    if (auto fold = complete_to_fold(g, phi)) folds.push_back(std::move(*fold));
  }
  return folds;
}

}  // namespace sidlab
