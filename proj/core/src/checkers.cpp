#include "sidlab/checkers.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "sidlab/errors.hpp"
#include "sidlab/symmetry.hpp"

namespace sidlab {

void DegreeProfile::validate() const {
  if (v1 < 1) throw std::invalid_argument("profile needs v1 >= 1");
  for (const auto& [k, d] : counts) {
    if (k < 1 || k > v1) throw std::invalid_argument("degree " + std::to_string(k) + " is outside [1, v1]");
    if (d < 0) throw std::invalid_argument("negative count for degree " + std::to_string(k));
  }
}

std::int64_t DegreeProfile::v2() const {
  std::int64_t total = 0;
  for (const auto& [k, d] : counts) total += d;
  return total;
}

int DegreeProfile::max_degree() const {
  int r = 0;
  for (const auto& [k, d] : counts) {
    if (d > 0) r = std::max(r, k);
  }
  return r;
}

DegreeProfile degree_profile(const Bigraph& g) {
  if (g.has_isolated_vertices()) throw PreconditionError({"graph has isolated vertices"});
  DegreeProfile p;
  p.v1 = g.v1();
  for (Vertex w = g.v1(); w < g.v(); ++w) ++p.counts[g.degree(w)];
  return p;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t num = n - k + i;
    if (c > std::numeric_limits<std::int64_t>::max() / num) throw std::overflow_error("binomial coefficient overflows");
    c = c * num / i;
  }
  return c;
}

ProfileReport check_largeright(const DegreeProfile& p) {
  p.validate();
  ProfileReport r{true, {}};
  for (const auto& [k, d] : p.counts) {
    if (k < 2) continue;
    DegreeCheck item{k, d, binomial(p.v1, k), false};
    item.ok = d == 0 || d >= item.required;
    r.pass = r.pass && item.ok;
    r.items.push_back(item);
  }
  return r;
}

ProfileReport check_largeright(const Bigraph& g) { return check_largeright(degree_profile(g)); }

ProfileReport check_conlonlee_divisibility(const DegreeProfile& p) {
  p.validate();
  ProfileReport r{true, {}};
  const int top = p.max_degree();
  for (int k = 2; k <= top; ++k) {
    auto it = p.counts.find(k);
    const std::int64_t d = it == p.counts.end() ? 0 : it->second;
    DegreeCheck item{k, d, binomial(p.v1, top) * binomial(top, k), false};
    item.ok = d % item.required == 0;
    r.pass = r.pass && item.ok;
    r.items.push_back(item);
  }
  return r;
}

ProfileReport check_conlonlee_divisibility(const Bigraph& g) { return check_conlonlee_divisibility(degree_profile(g)); }

namespace {

using Mask = std::uint32_t;

// d(U) for every left subset U, keyed by neighborhood mask.
std::map<Mask, std::int64_t> neighborhood_counts(const Bigraph& g) {
  std::map<Mask, std::int64_t> counts;
  for (Vertex w = g.v1(); w < g.v(); ++w) {
    Mask u = 0;
    for (Vertex x : g.neighbors(w)) u |= Mask{1} << x;
    ++counts[u];
  }
  return counts;
}

Mask image(const VertexMap& sigma, Mask u, int v1) {
  Mask out = 0;
  for (int x = 0; x < v1; ++x) {
    if ((u >> x) & 1U) out |= Mask{1} << sigma[x];
  }
  return out;
}

}  // namespace

OrbitReport check_orbit_hypotheses(const Bigraph& g, const ColoredBigraph& h, const TestConfig& holder_cfg) {
  constexpr int kMaxLeft = 16;
  const Bigraph& hg = h.graph();
  std::vector<std::string> reasons;
  if (g.left_ids() != hg.left_ids()) reasons.push_back("left sides of g and h differ");
  if (hg.e() == 0) reasons.push_back("h is trivial");
  if (hg.has_isolated_vertices()) reasons.push_back("h has isolated vertices");
  if (g.has_isolated_vertices()) reasons.push_back("g has isolated vertices");
  if (!h.is_right_uniform()) reasons.push_back("h is not right-uniform");
  if (!h.is_left_color_regular()) reasons.push_back("h is not left-color-regular");
  if (!reasons.empty()) throw PreconditionError(std::move(reasons));
  if (g.v1() > kMaxLeft) throw std::length_error("orbit check supports at most 16 left vertices");

  const auto group = colored_automorphisms(h);
  if (!is_color_edge_transitive(h, group)) throw PreconditionError({"h is not color-edge-transitive"});

  OrbitReport report;
  report.holder_evidence = test_left_weak_holder(h, holder_cfg);
  if (report.holder_evidence.verdict == Verdict::kViolated) {
    throw PreconditionError({"left-weak Hoelder inequality violated on a sampled instance"});
  }
  report.group_order = static_cast<int>(group.size());

  const auto dg = neighborhood_counts(g);
  const auto dh = neighborhood_counts(hg);
  auto count = [](const std::map<Mask, std::int64_t>& d, Mask u) {
    auto it = d.find(u);
    return it == d.end() ? std::int64_t{0} : it->second;
  };
  const int v1 = g.v1();
  std::vector<char> seen(std::size_t{1} << v1, 0);
  report.pass = true;
  for (Mask u = 0; u < (Mask{1} << v1); ++u) {
    if (seen[u] || __builtin_popcount(u) < 2) continue;
    std::set<Mask> orbit;
    for (const auto& sigma : group) orbit.insert(image(sigma, u, v1));
    OrbitCheck item;
    for (int x = 0; x < v1; ++x) {
      if ((u >> x) & 1U) item.representative.push_back(g.id(x));
    }
    item.orbit_size = static_cast<int>(orbit.size());
    const std::int64_t stabilizer = report.group_order / item.orbit_size;
    for (Mask o : orbit) {
      seen[o] = 1;
      item.sum_g += stabilizer * count(dg, o);
      item.sum_h += stabilizer * count(dh, o);
    }
    item.zero_iff_zero = (item.sum_g == 0) == (item.sum_h == 0);
    item.dominates = item.sum_g >= item.sum_h;
    report.pass = report.pass && item.zero_iff_zero && item.dominates;
    report.orbits.push_back(std::move(item));
  }
  report.verdict = report.pass ? "orbit conditions hold; left-weak Hoelder supported by numeric evidence only"
                               : "orbit conditions fail";
  return report;
}

namespace {

RtdReport fail(std::string why) { return {false, std::move(why), std::nullopt}; }

std::string bag_name(int i) { return "bag " + std::to_string(i); }

}  // namespace

RtdReport verify_rtd(const Bigraph& g, const ReflectiveTreeDecomposition& t) {
  if (g.e() == 0) return fail("graph is trivial");
  if (!g.connected()) return fail("graph is not connected");
  const int n = static_cast<int>(t.bags.size());
  if (n == 0) return fail("decomposition has no bags");

  std::vector<std::vector<char>> member(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(g.v()), 0));
  for (int i = 0; i < n; ++i) {
    for (const auto& id : t.bags[i]) {
      const auto v = g.find(id);
      if (!v) return fail(bag_name(i) + " names unknown vertex " + id);
      if (member[i][*v]) return fail(bag_name(i) + " repeats vertex " + id);
      member[i][*v] = 1;
    }
  }

  // Tree: n - 1 edges that connect all bags.
  if (static_cast<int>(t.tree_edges.size()) != n - 1) return fail("tree needs exactly one edge fewer than bags");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : t.tree_edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return fail("tree edge has an invalid endpoint");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // parent[s][x]: predecessor of x on the path from s.
  std::vector<std::vector<int>> parent(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -2));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    parent[s][s] = -1;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (parent[s][y] != -2) continue;
        parent[s][y] = x;
        q.push(y);
      }
    }
    if (std::count(parent[s].begin(), parent[s].end(), -2) > 0) return fail("tree is not connected");
  }

  for (Vertex v = 0; v < g.v(); ++v) {
    const bool covered = std::any_of(member.begin(), member.end(), [v](const auto& m) { return m[v] != 0; });
    if (!covered) return fail("vertex " + g.id(v) + " is in no bag");
  }
  for (const auto& [l, r] : g.edges()) {
    const bool covered = std::any_of(member.begin(), member.end(), [&](const auto& m) { return m[l] && m[r]; });
    if (!covered) return fail("edge (" + g.id(l) + ", " + g.id(r) + ") is in no bag");
  }

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = parent[a][b]; c != a; c = parent[a][c]) {
        for (Vertex v = 0; v < g.v(); ++v) {
          if (member[a][v] && member[b][v] && !member[c][v]) {
            return fail("running intersection fails for bags " + std::to_string(a) + ", " + std::to_string(b) +
                        " via bag " + std::to_string(c) + " (vertex " + g.id(v) + ")");
          }
        }
      }
    }
  }

  auto restrict = [&](int i) {
    return induced_subgraph(g, member[i]);
  };
  for (const auto& [a, b] : t.tree_edges) {
    std::vector<VertexId> shared;
    for (Vertex v = 0; v < g.v(); ++v) {
      if (member[a][v] && member[b][v]) shared.push_back(g.id(v));
    }
    const Flag fa = two_core_flag(Flag(restrict(a), shared));
    const Flag fb = two_core_flag(Flag(restrict(b), shared));
    if (!find_flag_isomorphism(fa, fb)) {
      return fail("flag 2-cores of " + bag_name(a) + " and " + bag_name(b) + " are not isomorphic");
    }
  }
  return {true, "", two_core(restrict(0))};
}

}  // namespace sidlab
