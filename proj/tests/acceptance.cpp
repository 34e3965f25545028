// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion checks its result and its wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixture_graphs.hpp"
#include "oracles.hpp"
#include "sidlab/checkers.hpp"
#include "sidlab/families.hpp"
#include "sidlab/fractional.hpp"
#include "sidlab/percolation.hpp"
#include "sidlab/reflection.hpp"
#include "sidlab/symmetry.hpp"
#include "sidlab/testers.hpp"

using namespace sidlab;

namespace {

/// Returns an empty string on success, otherwise the failure detail.
using Check = std::function<std::string()>;

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Check run;
};

std::string describe(const TestReport& r) {
  std::ostringstream os;
  os << r.property << ": " << to_string(r.verdict) << ", trials " << r.trials << ", skipped " << r.skipped
     << ", worst margin " << r.worst_margin;
  return os.str();
}

std::string constructor_fidelity() {
  struct Case {
    int n;
    std::vector<int> ks;
    int v2;
    int e;
  };
  const std::vector<Case> cases{{4, {1}, 4, 4}, {4, {2}, 6, 12}, {4, {3}, 4, 12}, {4, {2, 3}, 10, 24}};
  for (const auto& c : cases) {
    const Bigraph g = build_incidence(c.n, c.ks).graph.graph();
    if (g.v1() != c.n || g.v2() != c.v2 || g.e() != c.e) {
      return "incidence(" + std::to_string(c.n) + ") has v2=" + std::to_string(g.v2()) + ", e=" + std::to_string(g.e());
    }
  }
  return "";
}

std::string counterexample() {
  const Bigraph g = fixtures::cut_involution_counterexample();
  const VertexMap phi = fixtures::counterexample_involution(g);
  if (g.v() != 7) return "graph has " + std::to_string(g.v()) + " vertices";
  if (!is_cut_involution(g, phi)) return "involution rejected by is_cut_involution";
  if (complete_to_fold(g, phi)) return "complete_to_fold produced a fold";
  return "";
}

std::string reflection_percolation() {
  int count = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int a = 1; a <= n; ++a) {
      for (int b = a; b <= n; ++b) {
        const std::vector<int> ks = a == b ? std::vector<int>{a} : std::vector<int>{a, b};
        const auto ib = build_incidence(n, ks);
        const Bigraph& g = ib.graph.graph();
        SearchOptions opt;
        opt.pool = reflection_fold_pool(ib);
        const auto res = find_left_cut_percolating(g, opt);
        std::string tag = "n=" + std::to_string(n) + " ks={" + std::to_string(a) + (a == b ? "" : "," + std::to_string(b)) + "}";
        if (!res.found()) return tag + ": no certificate";
        if (auto v = verify_certificate(g, *res.certificate); !v) return tag + ": " + v.diagnostic;
        if (!folds_act_transitively(g, *res.certificate)) return tag + ": folds not transitive";
        ++count;
      }
    }
  }
  return count == 35 ? "" : "covered " + std::to_string(count) + " instances";
}

std::string cs_suite() {
  TestConfig cfg;
  cfg.trials = 250;
  cfg.rows = 4;
  cfg.cols = 4;
  cfg.tol = 1e-9;
  cfg.seed = 401;
  const auto c4 = test_cs_inequality(cycle4(), {}, cfg);
  cfg.seed = 402;
  const auto inc = test_cs_inequality(build_incidence(4, {2}).graph.graph(), {}, cfg);
  for (const auto* r : {&c4, &inc}) {
    if (r->verdict != Verdict::kHolds || r->trials + r->skipped != 250 || r->skipped != 0) return describe(*r);
  }
  return "";
}

std::string induced_suite() {
  TestConfig cfg;
  cfg.trials = 500;
  cfg.tol = 1e-8;
  cfg.sinkhorn_tol = 1e-10;
  cfg.seed = 500;
  const std::vector<Bigraph> graphs{cycle4(), book(2), build_incidence(4, {2}).graph.graph(),
                                    build_incidence(4, {2, 3}).graph.graph()};
  for (const auto& g : graphs) {
    const auto r = test_induced_sidorenko(g, cfg);
    if (r.verdict != Verdict::kHolds || r.skipped != 0 || r.trials != 500) return describe(r);
  }
  return "";
}

std::string profile_sidorenko() {
  TestConfig cfg;
  cfg.trials = 1000;
  cfg.tol = 1e-9;
  cfg.seed = 600;
  const std::vector<std::map<int, int>> profiles{{{2, 6}}, {{3, 4}}, {{2, 6}, {3, 4}}};
  for (const auto& p : profiles) {
    const Bigraph g = graph_from_profile(4, p);
    if (!check_largeright(g).pass) return "profile fails the threshold check";
    for (const auto& r : {test_sidorenko(g, cfg), test_strong_sidorenko(g, cfg)}) {
      if (r.verdict != Verdict::kHolds || r.trials != 1000) return describe(r);
    }
  }
  return "";
}

std::string generalization_ordering() {
  constexpr int kMaxCount = 90;
  long long profiles = 0;
  long long strict = 0;
  for (int v1 = 1; v1 <= 6; ++v1) {
    const int top = std::min(v1, 4);
    // d_1 in {0, 1}; d_k in [0, kMaxCount] for 2 <= k <= top.
    std::vector<int> d(static_cast<std::size_t>(top) + 1, 0);
    while (true) {
      DegreeProfile p{v1, {}};
      for (int k = 1; k <= top; ++k) {
        if (d[k] > 0) p.counts[k] = d[k];
      }
      if (!p.counts.empty()) {
        ++profiles;
        const bool div = check_conlonlee_divisibility(p).pass;
        const bool thr = check_largeright(p).pass;
        if (div && !thr) return "divisibility passes but threshold fails at v1=" + std::to_string(v1);
        if (thr && !div) ++strict;
      }
      int k = 1;
      while (k <= top && ++d[k] > (k == 1 ? 1 : kMaxCount)) d[k++] = 0;
      if (k > top) break;
    }
  }
  const DegreeProfile example{4, {{2, 7}}};
  if (!check_largeright(example).pass || check_conlonlee_divisibility(example).pass) return "d2=7 example misclassified";
  if (strict == 0) return "no profile separates the two checks";
  return "";
}

std::string density_engine() {
  Rng rng(800);
  for (int t = 0; t < 1000; ++t) {
    const int v = 2 + static_cast<int>(uniform_below(rng, 9));
    const int v1 = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(v - 1)));
    const Bigraph g = oracle::random_bigraph(v1, v - v1, 0.2 + 0.6 * uniform01(rng), rng);
    const auto w = oracle::random_bigraphon(1 + static_cast<int>(uniform_below(rng, 4)),
                                            1 + static_cast<int>(uniform_below(rng, 4)), rng);
    const double fast = density(g, w);
    if (oracle::rel_diff(fast, oracle::density(g, w)) > 1e-12) return "brute-force mismatch on instance " + std::to_string(t);
    const double lambda = 0.2 + uniform01(rng);
    if (oracle::rel_diff(density(g, w.scaled(lambda)), std::pow(lambda, g.e()) * fast) > 1e-12) {
      return "scaling law fails on instance " + std::to_string(t);
    }
    const Bigraph h = oracle::random_bigraph(1 + static_cast<int>(uniform_below(rng, 3)),
                                             1 + static_cast<int>(uniform_below(rng, 3)), 0.6, rng);
    if (oracle::rel_diff(density(disjoint_union(g, h), w), fast * density(h, w)) > 1e-12) {
      return "multiplicativity fails on instance " + std::to_string(t);
    }
  }
  return "";
}

/// Random right-uniform colored bigraph without isolated right vertices.
ColoredBigraph random_right_uniform(Rng& rng) {
  while (true) {
    const int v1 = 1 + static_cast<int>(uniform_below(rng, 4));
    const int v2 = 1 + static_cast<int>(uniform_below(rng, 4));
    const Bigraph g = oracle::random_bigraph(v1, v2, 0.6, rng);
    std::vector<char> keep(static_cast<std::size_t>(g.v()), 1);
    for (Vertex r = g.v1(); r < g.v(); ++r) keep[r] = g.degree(r) > 0;
    const Bigraph core = induced_subgraph(g, keep);
    if (core.v2() == 0) continue;
    std::vector<int> right_color(static_cast<std::size_t>(core.v2()));
    for (int& c : right_color) c = 1 + static_cast<int>(uniform_below(rng, 3));
    std::vector<int> colors;
    for (const auto& [l, r] : core.edges()) colors.push_back(right_color[r - core.v1()]);
    return ColoredBigraph(core, colors);
  }
}

BigraphonTuple random_tuple(const std::vector<int>& colors, Rng& rng) {
  const int rows = 1 + static_cast<int>(uniform_below(rng, 4));
  const int cols = 1 + static_cast<int>(uniform_below(rng, 4));
  const auto shape = oracle::random_bigraphon(rows, cols, rng);
  BigraphonTuple ws;
  for (int c : colors) ws.emplace(c, shape.with_values(oracle::random_bigraphon(rows, cols, rng).values()));
  return ws;
}

std::string fractional_consistency() {
  Rng rng(900);
  for (int t = 0; t < 200; ++t) {
    const auto h = random_right_uniform(rng);
    const auto ws = random_tuple(h.color_set(), rng);
    const double frac = fractional_density(ColoredFractionalBigraph::from_colored(h), ws);
    if (oracle::rel_diff(frac, colored_density(h, ws)) > 1e-12) return "density mismatch on instance " + std::to_string(t);
  }
  const std::vector<std::pair<int, std::vector<int>>> shapes{{3, {1, 2}}, {4, {2, 3}}, {4, {1, 3}}, {5, {2, 4}}, {4, {2}}};
  for (int t = 0; t < 200; ++t) {
    const auto& [n, ks] = shapes[t % shapes.size()];
    const auto h = ColoredFractionalBigraph::from_colored(build_incidence(n, ks).graph);
    std::vector<int> colors(h.colors().begin(), h.colors().end());
    const auto ws = random_tuple(colors, rng);
    const int pivot = colors[uniform_below(rng, colors.size())];
    const auto reg = left_regularize_tuple(h, ws, pivot);
    for (const auto& [c, w] : reg) {
      if (c != pivot && !w.is_left_regular(1e-9)) return "member not left-regular on instance " + std::to_string(t);
    }
    const auto rho = h.rainbow_star();
    if (oracle::rel_diff(fractional_density(h, reg), fractional_density(h, ws)) > 1e-9 ||
        oracle::rel_diff(fractional_density(rho, reg), fractional_density(rho, ws)) > 1e-9) {
      return "left regularization changed a density on instance " + std::to_string(t);
    }
  }
  return "";
}

std::string falsifiers() {
  TestConfig cfg;
  cfg.trials = 1000;
  cfg.seed = 1000;
  const auto strong = test_strong_sidorenko(Bigraph({"a", "b"}, {"w"}, {{"a", "w"}}), cfg);
  if (strong.verdict != Verdict::kViolated || strong.witness.is_null()) return describe(strong);
  if (std::abs(replay_witness(strong.witness) - strong.worst_margin) > 1e-12) return "witness replay differs";
  Rng rng(1001);
  int rejected = 0;
  while (rejected < 100) {
    const Bigraph g = oracle::random_bigraph(1 + static_cast<int>(uniform_below(rng, 5)),
                                             1 + static_cast<int>(uniform_below(rng, 5)), 0.5, rng);
    std::set<int> left_deg;
    std::set<int> right_deg;
    for (Vertex v = 0; v < g.v(); ++v) {
      if (g.degree(v) > 0) (g.is_left(v) ? left_deg : right_deg).insert(g.degree(v));
    }
    if (g.e() > 0 && left_deg.size() == 1 && right_deg.size() == 1) continue;
    const auto r = test_weakly_norming(g, cfg);
    if (r.verdict != Verdict::kPreconditionFailed || r.trials != 0) return "non-biregular graph accepted";
    ++rejected;
  }
  return "";
}

std::string rtd_verifier() {
  Rng rng(1100);
  for (int t = 0; t < 100; ++t) {
    const Bigraph g = oracle::random_bigraph(1 + static_cast<int>(uniform_below(rng, 4)),
                                             1 + static_cast<int>(uniform_below(rng, 4)), 0.7, rng);
    if (g.e() == 0 || !g.connected()) continue;
    const auto r = verify_rtd(g, {{g.ids()}, {}});
    if (!r.ok) return "single bag rejected: " + r.diagnostic;
    if (!r.core || *r.core != two_core(g)) return "single-bag core differs from the 2-core";
  }
  const auto b2 = verify_rtd(book(2), {{{"P", "Q", "A1", "B1"}, {"P", "Q", "A2", "B2"}}, {{0, 1}}});
  if (!b2.ok) return "B2 decomposition rejected: " + b2.diagnostic;
  if (!are_isomorphic(*b2.core, cycle4())) return "B2 core is not C4";
  for (int t = 0; t < 200; ++t) {
    const int k = 3 + static_cast<int>(uniform_below(rng, 3));
    const Bigraph g = book(k);
    ReflectiveTreeDecomposition d;
    for (int i = 1; i <= k; ++i) d.bags.push_back({"P", "Q", "A" + std::to_string(i), "B" + std::to_string(i)});
    for (int i = 1; i < k; ++i) d.tree_edges.emplace_back(static_cast<int>(uniform_below(rng, i)), i);
    if (auto ok = verify_rtd(g, d); !ok.ok) return "page decomposition rejected: " + ok.diagnostic;
    // Copy a private vertex of bag a into a bag b at tree distance >= 2.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    for (const auto& [x, y] : d.tree_edges) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    std::vector<std::pair<int, int>> far;
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (a != b && std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) far.emplace_back(a, b);
      }
    }
    if (far.empty()) continue;
    const auto [a, b] = far[uniform_below(rng, far.size())];
    d.bags[b].push_back(d.bags[a][2 + uniform_below(rng, 2)]);
    const auto bad = verify_rtd(g, d);
    if (bad.ok || bad.diagnostic.find("running intersection") == std::string::npos) {
      return "perturbed decomposition not rejected for running intersection: " + bad.diagnostic;
    }
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "constructor fidelity", 1.0, constructor_fidelity},
      {2, "cut-involution counterexample", 1.0, counterexample},
      {3, "reflection folds percolate incidence bigraphs", 60.0, reflection_percolation},
      {4, "Cauchy-Schwarz tree inequality suite", 60.0, cs_suite},
      {5, "induced-Sidorenko evidence", 300.0, induced_suite},
      {6, "Sidorenko evidence for threshold profiles", 300.0, profile_sidorenko},
      {7, "divisibility implies threshold", 10.0, generalization_ordering},
      {8, "density engine correctness", 120.0, density_engine},
      {9, "fractional and colored consistency", 120.0, fractional_consistency},
      {10, "inequality falsifiers", 30.0, falsifiers},
      {11, "reflective tree decomposition verifier", 10.0, rtd_verifier},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && seconds > c.limit_seconds) detail = "exceeded the time limit";
    const bool pass = detail.empty();
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d (%s) %.2fs / %.0fs%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, pass ? "" : ": ", detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
