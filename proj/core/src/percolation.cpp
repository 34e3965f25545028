#include "sidlab/percolation.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "sidlab/symmetry.hpp"

namespace sidlab {

namespace {

using Words = std::vector<std::uint64_t>;

struct WordsHash {
  std::size_t operator()(const Words& w) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

bool test_bit(const Words& w, int i) { return (w[i >> 6] >> (i & 63)) & 1U; }
void set_bit(Words& w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

std::vector<int> to_list(const Words& w, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (test_bit(w, i)) out.push_back(i);
  }
  return out;
}

// Action of phi_L on the search universe: left vertices or edges.
std::vector<int> universe_map(const Bigraph& g, const Fold& f, PercolationMode mode) {
  const VertexMap m = left_folding_map(f);
  std::vector<int> out;
  if (mode == PercolationMode::kLeft) {
    out.assign(m.begin(), m.begin() + g.v1());
  } else {
    for (const auto& [l, r] : g.edges()) {
      const auto k = g.edge_index(m[l], m[r]);
      if (!k) throw std::invalid_argument("folding map does not preserve edges");
      out.push_back(*k);
    }
  }
  return out;
}

SearchResult search(const Bigraph& g, const SearchOptions& options, PercolationMode mode) {
  const int n = mode == PercolationMode::kLeft ? g.v1() : g.e();
  if (n == 0) {
    throw std::invalid_argument(mode == PercolationMode::kLeft ? "percolation search needs a nonempty left side"
                                                              : "percolation search needs a nonempty edge set");
  }
  SearchResult result;
  result.pool_exhaustive = !options.pool.has_value();
  const std::vector<Fold> pool = options.pool ? *options.pool : enumerate_folds(g);
  for (const Fold& f : pool) {
    if (auto why = fold_violation(g, f)) throw std::invalid_argument("pool contains an invalid fold: " + *why);
  }
  std::vector<std::vector<int>> maps;
  maps.reserve(pool.size());
  for (const Fold& f : pool) maps.push_back(universe_map(g, f, mode));

  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  Words full(words, 0);
  for (int i = 0; i < n; ++i) set_bit(full, i);

  struct Node {
    Words set;
    int parent;
    int fold;
  };
  std::vector<Node> nodes;
  std::unordered_map<Words, int, WordsHash> seen;
  std::deque<int> queue;

  auto finish = [&](int idx) {
    PercolationCertificate cert;
    cert.mode = mode;
    for (int at = idx; at != -1; at = nodes[at].parent) {
      cert.trajectory.push_back(to_list(nodes[at].set, n));
      if (nodes[at].fold != -1) cert.folds.push_back(pool[nodes[at].fold]);
    }
    std::reverse(cert.trajectory.begin(), cert.trajectory.end());
    std::reverse(cert.folds.begin(), cert.folds.end());
    result.certificate = std::move(cert);
    result.states = nodes.size();
    return result;
  };

  // Returns the new node index, or -1 if seen already or over budget.
  auto add = [&](Words set, int parent, int fold) {
    if (seen.count(set)) return -1;
    if (nodes.size() >= options.budget) {
      result.budget_exhausted = true;
      return -1;
    }
    const int idx = static_cast<int>(nodes.size());
    seen.emplace(set, idx);
    nodes.push_back({std::move(set), parent, fold});
    queue.push_back(idx);
    return idx;
  };

  for (int i = 0; i < n; ++i) {
    Words s(words, 0);
    set_bit(s, i);
    const int idx = add(std::move(s), -1, -1);
    if (idx != -1 && nodes[idx].set == full) return finish(idx);
  }
  while (!queue.empty() && !result.budget_exhausted) {
    const int at = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < maps.size(); ++k) {
      Words pre(words, 0);
      bool empty = true;
      const Words& cur = nodes[at].set;
      for (int x = 0; x < n; ++x) {
        if (test_bit(cur, maps[k][x])) {
          set_bit(pre, x);
          empty = false;
        }
      }
      if (empty) continue;
      const int idx = add(std::move(pre), at, static_cast<int>(k));
      if (idx != -1 && nodes[idx].set == full) return finish(idx);
      if (result.budget_exhausted) break;
    }
  }
  result.states = nodes.size();
  return result;
}

std::string describe(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

Verification verify_certificate(const Bigraph& g, const PercolationCertificate& cert) {
  const bool left = cert.mode == PercolationMode::kLeft;
  const int n = left ? g.v1() : g.e();
  if (cert.trajectory.size() != cert.folds.size() + 1) {
    return {false, "trajectory length must be the number of folds plus one"};
  }
  std::vector<std::set<int>> sets;
  for (std::size_t i = 0; i < cert.trajectory.size(); ++i) {
    std::set<int> s(cert.trajectory[i].begin(), cert.trajectory[i].end());
    if (s.size() != cert.trajectory[i].size()) return {false, "set " + std::to_string(i) + " repeats an element"};
    for (int x : s) {
      if (x < 0 || x >= n) return {false, "set " + std::to_string(i) + " has an out-of-range element"};
    }
    sets.push_back(std::move(s));
  }
  if (sets.front().size() != 1) return {false, "the initial set must be a singleton"};
  if (static_cast<int>(sets.back().size()) != n) {
    return {false, left ? "the final set must be all of V1" : "the final set must be all of E"};
  }
  for (std::size_t i = 0; i < cert.folds.size(); ++i) {
    const Fold& f = cert.folds[i];
    if (auto why = fold_violation(g, f)) return {false, "fold " + std::to_string(i + 1) + ": " + *why};
    std::set<Vertex> in_left(f.left.begin(), f.left.end());
    auto fold_left = [&](Vertex v) { return in_left.count(v) ? v : f.phi[v]; };
    std::set<int> expected;
    if (left) {
      for (Vertex u = 0; u < g.v1(); ++u) {
        if (sets[i].count(fold_left(u))) expected.insert(u);
      }
    } else {
      const auto& edges = g.edges();
      std::set<Edge> previous;
      for (int k : sets[i]) previous.insert(edges[k]);
      for (int k = 0; k < g.e(); ++k) {
        const Edge image{fold_left(edges[k].first), fold_left(edges[k].second)};
        if (previous.count(image)) expected.insert(k);
      }
    }
    if (expected != sets[i + 1]) {
      return {false, "step " + std::to_string(i + 1) + ": set is not the preimage of the previous set (expected " +
                         describe({expected.begin(), expected.end()}) + ")"};
    }
  }
  return {true, ""};
}

SearchResult find_left_cut_percolating(const Bigraph& g, const SearchOptions& options) {
  return search(g, options, PercolationMode::kLeft);
}

SearchResult find_cut_percolating(const Bigraph& g, const SearchOptions& options) {
  return search(g, options, PercolationMode::kEdge);
}

PercolationCertificate project_to_left(const Bigraph& g, const PercolationCertificate& cert) {
  if (cert.mode != PercolationMode::kEdge) throw std::invalid_argument("projection needs an edge-mode certificate");
  PercolationCertificate out;
  out.mode = PercolationMode::kLeft;
  out.folds = cert.folds;
  for (const auto& set : cert.trajectory) {
    std::set<int> ends;
    for (int k : set) {
      if (k < 0 || k >= g.e()) throw std::invalid_argument("edge index out of range");
      ends.insert(g.edges()[k].first);
    }
    out.trajectory.emplace_back(ends.begin(), ends.end());
  }
  return out;
}

bool folds_act_transitively(const Bigraph& g, const PercolationCertificate& cert) {
  std::vector<VertexMap> gens;
  for (const Fold& f : cert.folds) gens.push_back(f.phi);
  if (cert.mode == PercolationMode::kLeft) {
    if (g.v1() == 0) return true;
    return static_cast<int>(vertex_orbit(gens, 0).size()) == g.v1();
  }
  if (g.e() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.e()), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const auto [l, r] = g.edges()[queue.front()];
    queue.pop_front();
    for (const auto& phi : gens) {
      const auto k = g.edge_index(phi[l], phi[r]);
      if (k && !seen[*k]) {
        seen[*k] = 1;
        ++reached;
        queue.push_back(*k);
      }
    }
  }
  return reached == g.e();
}

LiftedCertificate lift_certificate(std::span<const Bigraph> parts, const PercolationCertificate& base,
                                   const std::vector<std::vector<Fold>>& companions) {
  if (parts.empty()) throw std::invalid_argument("lift needs at least one part");
  if (base.mode != PercolationMode::kLeft) throw std::invalid_argument("lift needs a left-mode certificate");
  if (companions.size() + 1 != parts.size()) {
    throw std::invalid_argument("need one companion fold sequence per additional part");
  }
  if (auto v = verify_certificate(parts[0], base); !v) {
    throw std::invalid_argument("base certificate does not verify: " + v.diagnostic);
  }
  const int m = base.length();
  const int v1 = parts[0].v1();
  for (std::size_t j = 0; j < companions.size(); ++j) {
    if (static_cast<int>(companions[j].size()) != m) {
      throw std::invalid_argument("companion sequence " + std::to_string(j + 1) + " has the wrong length");
    }
  }
  Bigraph amalgam = amalgamate_left(parts);

  LiftedCertificate out{amalgam, {}};
  out.certificate.mode = PercolationMode::kLeft;
  out.certificate.trajectory = base.trajectory;
  for (int i = 0; i < m; ++i) {
    Fold lifted{identity_map(amalgam.v()), {}};
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const Bigraph& part = parts[j];
      const Fold& f = j == 0 ? base.folds[i] : companions[j - 1][i];
      if (auto why = fold_violation(part, f)) {
        throw std::invalid_argument("part " + std::to_string(j + 1) + ", step " + std::to_string(i + 1) + ": " + *why);
      }
      const Fold& ref = base.folds[i];
      for (Vertex x = 0; x < v1; ++x) {
        if (f.phi[x] != ref.phi[x]) {
          throw std::invalid_argument("step " + std::to_string(i + 1) + ": folds disagree on left vertex " + part.id(x));
        }
      }
      auto left_part = [v1](const Fold& fold) {
        std::vector<Vertex> s;
        for (Vertex x : fold.left) {
          if (x < v1) s.push_back(x);
        }
        return s;
      };
      if (left_part(f) != left_part(ref)) {
        throw std::invalid_argument("step " + std::to_string(i + 1) + ": left sides meet V1 differently");
      }
      auto to_amalgam = [&](Vertex x) { return x < v1 ? x : amalgam.index(part.id(x)); };
      for (Vertex x = v1; x < part.v(); ++x) lifted.phi[to_amalgam(x)] = to_amalgam(f.phi[x]);
      for (Vertex x : f.left) {
        if (x >= v1 || j == 0) lifted.left.push_back(to_amalgam(x));
      }
    }
    for (Vertex x = 0; x < v1; ++x) lifted.phi[x] = base.folds[i].phi[x];
    std::sort(lifted.left.begin(), lifted.left.end());
    out.certificate.folds.push_back(std::move(lifted));
  }
  if (auto v = verify_certificate(amalgam, out.certificate); !v) {
    throw std::invalid_argument("lifted certificate does not verify: " + v.diagnostic);
  }
  return out;
}

}  // namespace sidlab
