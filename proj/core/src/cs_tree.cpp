#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "sidlab/families.hpp"
#include "sidlab/symmetry.hpp"
#include "sidlab/testers.hpp"

namespace sidlab {

namespace {

// (c o phi)(v, w) = c(phi(v), phi(w)); phi must be an endomorphism.
std::vector<int> pull_back(const Bigraph& g, const std::vector<int>& c, const VertexMap& phi) {
  std::vector<int> out(static_cast<std::size_t>(g.e()));
  for (int k = 0; k < g.e(); ++k) {
    const auto [l, r] = g.edges()[k];
    out[k] = c[g.edge_index(phi[l], phi[r]).value()];
  }
  return out;
}

std::vector<int> threshold_coloring(const Bigraph& g, const std::vector<int>& f) {
  std::vector<int> c(static_cast<std::size_t>(g.e()));
  for (int k = 0; k < g.e(); ++k) c[k] = f[g.edges()[k].first] + f[g.edges()[k].second] >= 2 ? 1 : 0;
  return c;
}

void check_threshold_values(const Bigraph& g, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.v()) throw std::invalid_argument("f needs one value per vertex");
  for (int x : f) {
    if (x < 0 || x > 2) throw std::invalid_argument("f takes values in {0, 1, 2}");
  }
}

}  // namespace

std::vector<std::vector<int>> cs_tree_leaves(const Bigraph& g, const std::vector<int>& coloring,
                                             const std::vector<Fold>& folds) {
  if (static_cast<int>(coloring.size()) != g.e()) throw std::invalid_argument("coloring needs one color per edge");
  std::vector<std::vector<int>> level{coloring};
  for (const auto& fold : folds) {
    const FoldingMaps maps = folding_maps(g, fold);
    std::vector<std::vector<int>> next;
    next.reserve(level.size() * 2);
    for (const auto& c : level) {
      next.push_back(pull_back(g, c, maps.left));
      next.push_back(pull_back(g, c, maps.right));
    }
    level = std::move(next);
  }
  return level;
}

Bigraph two_threshold(const Bigraph& g, const std::vector<int>& f) {
  check_threshold_values(g, f);
  const auto c = threshold_coloring(g, f);
  std::vector<int> keep;
  for (int k = 0; k < g.e(); ++k) {
    if (c[k]) keep.push_back(k);
  }
  return g.spanning_subgraph(keep);
}

Bigraph endo_preimage(const Bigraph& g, const Bigraph& sub, const VertexMap& phi) {
  if (static_cast<int>(phi.size()) != g.v() || !is_endomorphism(g, phi)) {
    throw std::invalid_argument("map is not an endomorphism");
  }
  if (sub.left_ids() != g.left_ids() || sub.right_ids() != g.right_ids()) {
    throw std::invalid_argument("subgraph does not span the graph");
  }
  for (const auto& [l, r] : sub.edges()) {
    if (!g.adjacent(l, r)) throw std::invalid_argument("subgraph has an edge outside the graph");
  }
  std::vector<int> keep;
  for (int k = 0; k < g.e(); ++k) {
    const auto [l, r] = g.edges()[k];
    if (sub.adjacent(phi[l], phi[r])) keep.push_back(k);
  }
  return g.spanning_subgraph(keep);
}

std::vector<std::pair<Bigraph, double>> ThresholdBound::terms() const {
  std::vector<std::pair<Bigraph, double>> out{{g, std::ldexp(1.0, -m)}, {edge_bigraph(), -ell}};
  out.insert(out.end(), r.begin(), r.end());
  out.emplace_back(h, -1.0);
  return out;
}

ThresholdBound threshold_bound(const Bigraph& g, const PercolationCertificate& cert, const std::vector<int>& f) {
  check_threshold_values(g, f);
  for (Vertex v = g.v1(); v < g.v(); ++v) {
    if (f[v] == 2) throw std::invalid_argument("f may take the value 2 only on left vertices");
  }
  if (cert.mode != PercolationMode::kLeft) throw std::invalid_argument("threshold bound needs a left-mode certificate");
  if (auto ver = verify_certificate(g, cert); !ver) throw std::invalid_argument("certificate rejected: " + ver.diagnostic);

  ThresholdBound b;
  b.g = g;
  b.h = two_threshold(g, f);
  b.m = cert.length();
  const double share = std::ldexp(1.0, -b.m);
  const Vertex v0 = cert.trajectory.front().front();

  Vertex pivot = -1;
  for (Vertex v = 0; v < g.v1() && pivot < 0; ++v) {
    if (f[v] == 2) pivot = v;
  }
  for (Vertex v = 0; v < g.v1() && pivot < 0; ++v) {
    if (f[v] == 1) pivot = v;
  }
  if (pivot < 0) {
    // f vanishes on V1, so H has no edges.
    b.ell = g.e() * share;
    b.r.emplace_back(b.h, 1.0 - share);
    return b;
  }

  // psi in the group generated by the folds with psi(v0) = pivot.
  std::map<Vertex, VertexMap> transversal{{v0, identity_map(g.v())}};
  std::queue<Vertex> queue;
  queue.push(v0);
  while (!queue.empty() && !transversal.count(pivot)) {
    const Vertex u = queue.front();
    queue.pop();
    for (const auto& fold : cert.folds) {
      const Vertex next = fold.phi[u];
      if (transversal.count(next)) continue;
      transversal.emplace(next, compose(fold.phi, transversal.at(u)));
      queue.push(next);
    }
  }
  if (!transversal.count(pivot)) throw std::logic_error("certificate folds do not act transitively on the left side");
  const VertexMap& psi = transversal.at(pivot);
  std::vector<int> moved(static_cast<std::size_t>(g.v()));
  for (Vertex x = 0; x < g.v(); ++x) moved[x] = f[psi[x]];
  if (moved[v0] == 1) {
    int ell = 0;
    for (Vertex w : g.neighbors(v0)) ell += moved[w] == 0 ? 1 : 0;
    b.ell = ell;
    moved[v0] = 2;
  }

  const auto leaves = cs_tree_leaves(g, threshold_coloring(g, moved), cert.folds);
  if (std::any_of(leaves.front().begin(), leaves.front().end(), [](int c) { return c == 0; })) {
    throw std::logic_error("leftmost leaf of the threshold tree is not the whole graph");
  }
  std::map<std::vector<int>, int> counts;
  for (std::size_t t = 1; t < leaves.size(); ++t) ++counts[leaves[t]];
  for (const auto& [leaf, count] : counts) {
    std::vector<int> keep;
    for (int k = 0; k < g.e(); ++k) {
      if (leaf[k]) keep.push_back(k);
    }
    b.r.emplace_back(g.spanning_subgraph(keep), count * share);
  }
  return b;
}

double threshold_bound_margin(const ThresholdBound& b, const StepBigraphon& w) {
  double big = std::pow(density(b.g, w), std::ldexp(1.0, -b.m)) / std::pow(w.edge_density(), b.ell);
  for (const auto& [hp, r] : b.r) big *= std::pow(density(hp, w), r);
  return relative_margin(big, density(b.h, w));
}

}  // namespace sidlab
