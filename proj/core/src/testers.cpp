#include "sidlab/testers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "sidlab/errors.hpp"
#include "sidlab/families.hpp"
#include "sidlab/json_io.hpp"
#include "sidlab/symmetry.hpp"
#include "tester_support.hpp"

namespace sidlab {

namespace detail {

namespace {

int sample_dim(Rng& rng, int bound) {
  if (bound < 1) throw std::invalid_argument("grid bounds must be positive");
  if (bound == 1) return 1;
  return 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(bound - 1)));
}

std::vector<double> sample_weights(Rng& rng, int n, bool random) {
  std::vector<double> w(static_cast<std::size_t>(n), 1.0 / n);
  if (!random) return w;
  double total = 0.0;
  for (double& x : w) total += (x = 0.05 + uniform01(rng));
  for (double& x : w) x /= total;
  return w;
}

}  // namespace

TrialShape sample_shape(Rng& rng, const TestConfig& cfg) {
  const int rows = sample_dim(rng, cfg.rows);
  const int cols = sample_dim(rng, cfg.cols);
  TrialShape s;
  s.mu = sample_weights(rng, rows, cfg.nonuniform_weights);
  s.nu = sample_weights(rng, cols, cfg.nonuniform_weights);
  return s;
}

std::vector<double> sample_function(Rng& rng, std::size_t n, const TestConfig& cfg, bool indicator) {
  std::vector<double> v(n);
  for (double& x : v) {
    x = indicator ? (uniform_below(rng, 2) ? 1.0 : cfg.floor) : cfg.floor + (1.0 - cfg.floor) * uniform01(rng);
  }
  return v;
}

StepBigraphon sample_bigraphon(Rng& rng, const TrialShape& shape, const TestConfig& cfg, bool indicator) {
  return StepBigraphon(shape.mu, shape.nu, sample_function(rng, shape.mu.size() * shape.nu.size(), cfg, indicator));
}

bool adversarial_trial(Rng& rng, const TestConfig& cfg) { return cfg.adversarial && uniform_below(rng, 4) == 0; }

Aggregator::Aggregator(std::string property, const TestConfig& cfg) : tol_(cfg.tol) {
  if (cfg.trials < 0) throw std::invalid_argument("trial count must be nonnegative");
  if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw std::invalid_argument("tolerance must lie in (0, 1)");
  report_.property = std::move(property);
  report_.seed = cfg.seed;
  report_.worst_margin = std::numeric_limits<double>::infinity();
}

void Aggregator::record(double margin, const std::function<nlohmann::json()>& witness) {
  ++report_.trials;
  if (margin < report_.worst_margin) {
    report_.worst_margin = margin;
    if (margin < -tol_) {
      report_.witness = witness();
      report_.witness["margin"] = margin;
    }
  }
}

TestReport Aggregator::finish() {
  report_.verdict = report_.worst_margin < -tol_ ? Verdict::kViolated : Verdict::kHolds;
  return std::move(report_);
}

TestReport precondition_report(std::string property, std::uint64_t seed, std::vector<std::string> reasons) {
  TestReport r;
  r.property = std::move(property);
  r.verdict = Verdict::kPreconditionFailed;
  r.seed = seed;
  r.worst_margin = std::numeric_limits<double>::infinity();
  r.reasons = std::move(reasons);
  return r;
}

}  // namespace detail

using detail::Aggregator;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds-on-all-trials";
    case Verdict::kViolated: return "violated";
    case Verdict::kPreconditionFailed: return "precondition-failed";
  }
  return "unknown";
}

nlohmann::json report_to_json(const TestReport& r) {
  nlohmann::json j = {{"property", r.property},
                      {"verdict", to_string(r.verdict)},
                      {"trials", r.trials},
                      {"skipped", r.skipped},
                      {"seed", r.seed},
                      {"note", r.note}};
  j["worst_margin"] = std::isfinite(r.worst_margin) ? nlohmann::json(r.worst_margin) : nlohmann::json(nullptr);
  if (!r.reasons.empty()) j["reasons"] = r.reasons;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

double relative_margin(double big, double small) {
  if (small > 0.0) return (big - small) / small;
  return big >= small ? 0.0 : -std::numeric_limits<double>::infinity();
}

namespace {

using Fn = std::vector<double>;
using Fns = std::vector<Fn>;

BigraphonTuple sample_tuple(Rng& rng, const detail::TrialShape& shape, const TestConfig& cfg, bool indicator,
                            const std::vector<int>& colors) {
  BigraphonTuple ws;
  for (int c : colors) ws.emplace(c, detail::sample_bigraphon(rng, shape, cfg, indicator));
  return ws;
}

// ---- margins shared by the testers and replay ----

double sidorenko_margin(const Bigraph& g, const StepBigraphon& w) {
  return relative_margin(density(g, w), std::pow(w.edge_density(), g.e()));
}

double strong_sidorenko_margin(const Bigraph& g, const StepBigraphon& w, const Fns& f, const Fns& gw) {
  const double e = g.e();
  Fn fp(static_cast<std::size_t>(w.rows()), 1.0);
  Fn gp(static_cast<std::size_t>(w.cols()), 1.0);
  for (const auto& fn : f) {
    for (std::size_t x = 0; x < fp.size(); ++x) fp[x] *= std::pow(fn.at(x), 1.0 / e);
  }
  for (const auto& fn : gw) {
    for (std::size_t y = 0; y < gp.size(); ++y) gp[y] *= std::pow(fn.at(y), 1.0 / e);
  }
  const double small = std::pow(weighted_density(edge_bigraph(), {fp}, {gp}, w), e);
  return relative_margin(weighted_density(g, f, gw, w), small);
}

double normalized(const Bigraph& g, const StepBigraphon& w) { return density(g, w) / std::pow(w.edge_density(), g.e()); }

double weak_domination_margin(const Bigraph& g, const Bigraph& h, const StepBigraphon& w) {
  return relative_margin(normalized(g, w), normalized(h, w));
}

double weakly_norming_margin(const ColoredBigraph& h, const BigraphonTuple& ws) {
  const Bigraph& g = h.graph();
  double big = 1.0;
  for (int k = 0; k < g.e(); ++k) big *= std::pow(density(g, ws.at(h.color(k))), 1.0 / g.e());
  return relative_margin(big, colored_density(h, ws));
}

int pair_color(int a, int color_index, int colors) { return a * colors + color_index; }

double left_weak_holder_margin(const ColoredBigraph& h, const std::vector<int>& ell, const BigraphonTuple& ws) {
  const Bigraph& g = h.graph();
  const auto palette = h.color_set();
  const int k = static_cast<int>(palette.size());
  auto index_of = [&](int c) {
    return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
  };
  if (static_cast<int>(ell.size()) != g.v1()) throw std::invalid_argument("left coloring needs one value per left vertex");
  std::vector<int> mixed(static_cast<std::size_t>(g.e()));
  for (int e = 0; e < g.e(); ++e) mixed[e] = pair_color(ell[g.edges()[e].first], index_of(h.color(e)), k);
  const double small = colored_density(ColoredBigraph(g, mixed), ws);
  double big = 1.0;
  for (Vertex v = 0; v < g.v1(); ++v) {
    std::vector<int> constant(static_cast<std::size_t>(g.e()));
    for (int e = 0; e < g.e(); ++e) constant[e] = pair_color(ell[v], index_of(h.color(e)), k);
    big *= std::pow(colored_density(ColoredBigraph(g, constant), ws), 1.0 / g.v1());
  }
  return relative_margin(big, small);
}

double color_sidorenko_margin(const ColoredFractionalBigraph& h, const BigraphonTuple& ws) {
  return relative_margin(fractional_density(h, ws), std::pow(fractional_density(h.rainbow_star(), ws), h.e()));
}

double jensen_margin(const Fn& p, const Fns& f, const Fn& g, const Fn& mu) {
  const auto [lhs, rhs] = inductive_jensen_sides(p, f, g, mu);
  return relative_margin(lhs, rhs);
}

double color_restriction_margin(const ColoredBigraph& h, const std::vector<int>& colors, const BigraphonTuple& ws) {
  double big = colored_density(h, ws);
  const std::set<int> keep(colors.begin(), colors.end());
  for (int c : h.color_set()) {
    if (!keep.count(c)) big /= std::pow(ws.at(c).edge_density(), h.edges_of_color(c));
  }
  return relative_margin(big, colored_density(h.restrict_colors(colors), ws));
}

double cs_margin(const Bigraph& g, const std::vector<int>& coloring, const std::vector<Fold>& folds,
                 const BigraphonTuple& ws) {
  const auto leaves = cs_tree_leaves(g, coloring, folds);
  const double share = std::ldexp(1.0, -static_cast<int>(folds.size()));
  double big = 1.0;
  for (const auto& leaf : leaves) big *= std::pow(colored_density(ColoredBigraph(g, leaf), ws), share);
  return relative_margin(big, colored_density(ColoredBigraph(g, coloring), ws));
}

// ---- witness helpers ----

nlohmann::json witness_base(const char* property) { return {{"property", property}}; }

}  // namespace

double replay_witness(const nlohmann::json& w) {
  const std::string property = w.at("property").get<std::string>();
  if (property == "sidorenko") {
    return sidorenko_margin(bigraph_from_json(w.at("g")), bigraphon_from_json(w.at("w")));
  }
  if (property == "strong-sidorenko") {
    return strong_sidorenko_margin(bigraph_from_json(w.at("g")), bigraphon_from_json(w.at("w")), w.at("f").get<Fns>(),
                                   w.at("gw").get<Fns>());
  }
  if (property == "weak-domination") {
    return weak_domination_margin(bigraph_from_json(w.at("g")), bigraph_from_json(w.at("h")),
                                  bigraphon_from_json(w.at("w")));
  }
  if (property == "weakly-norming") {
    return weakly_norming_margin(colored_from_json(w.at("g")), tuple_from_json(w.at("ws")));
  }
  if (property == "left-weak-holder") {
    return left_weak_holder_margin(colored_from_json(w.at("h")), w.at("ell").get<std::vector<int>>(),
                                   tuple_from_json(w.at("ws")));
  }
  if (property == "color-sidorenko") {
    return color_sidorenko_margin(fractional_from_json(w.at("h")), tuple_from_json(w.at("ws")));
  }
  if (property == "jensen") {
    return jensen_margin(w.at("p").get<Fn>(), w.at("f").get<Fns>(), w.at("g").get<Fn>(), w.at("mu").get<Fn>());
  }
  if (property == "color-restriction") {
    return color_restriction_margin(colored_from_json(w.at("h")), w.at("colors").get<std::vector<int>>(),
                                    tuple_from_json(w.at("ws")));
  }
  if (property == "cs-tree") {
    const ColoredBigraph h = colored_from_json(w.at("g"));
    std::vector<Fold> folds;
    for (const auto& f : w.at("folds")) folds.push_back(fold_from_json(h.graph(), f));
    return cs_margin(h.graph(), h.colors(), folds, tuple_from_json(w.at("ws")));
  }
  throw std::invalid_argument("unknown witness property \"" + property + "\"");
}

TestReport test_sidorenko(const Bigraph& g, const TestConfig& cfg) {
  Aggregator agg("sidorenko", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const bool adv = detail::adversarial_trial(rng, cfg);
    const auto shape = detail::sample_shape(rng, cfg);
    const StepBigraphon w = detail::sample_bigraphon(rng, shape, cfg, adv);
    agg.record(sidorenko_margin(g, w), [&] {
      auto j = witness_base("sidorenko");
      j["g"] = bigraph_to_json(g);
      j["w"] = bigraphon_to_json(w);
      j["trial"] = t;
      return j;
    });
  }
  return agg.finish();
}

TestReport test_strong_sidorenko(const Bigraph& g, const TestConfig& cfg) {
  if (g.e() == 0) throw std::domain_error("strong Sidorenko test needs at least one edge");
  Aggregator agg("strong-sidorenko", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    // Presets: 0 generic, 1 near-indicator W, 2 constant W and g with one
    // shared two-valued f, 3 generic W with a shared two-valued f.
    const int kind = cfg.adversarial ? static_cast<int>(uniform_below(rng, 4)) : 0;
    const auto shape = detail::sample_shape(rng, cfg);
    const auto rows = shape.mu.size();
    const auto cols = shape.nu.size();
    const StepBigraphon w = kind == 2 ? StepBigraphon(shape.mu, shape.nu, Fn(rows * cols, 1.0))
                                      : detail::sample_bigraphon(rng, shape, cfg, kind == 1);
    Fns f;
    Fns gw;
    if (kind >= 2) {
      const Fn shared = detail::sample_function(rng, rows, cfg, true);
      f.assign(static_cast<std::size_t>(g.v1()), shared);
      gw.assign(static_cast<std::size_t>(g.v2()),
                kind == 2 ? Fn(cols, 1.0) : detail::sample_function(rng, cols, cfg, false));
    } else {
      for (int v = 0; v < g.v1(); ++v) f.push_back(detail::sample_function(rng, rows, cfg, false));
      for (int v = 0; v < g.v2(); ++v) gw.push_back(detail::sample_function(rng, cols, cfg, false));
    }
    agg.record(strong_sidorenko_margin(g, w, f, gw), [&] {
      auto j = witness_base("strong-sidorenko");
      j["g"] = bigraph_to_json(g);
      j["w"] = bigraphon_to_json(w);
      j["f"] = f;
      j["gw"] = gw;
      j["trial"] = t;
      return j;
    });
  }
  return agg.finish();
}

namespace {

// One Sinkhorn-biregularized bigraphon per trial; nullopt if scaling fails.
std::optional<StepBigraphon> biregular_trial(Rng& rng, const TestConfig& cfg) {
  const bool adv = detail::adversarial_trial(rng, cfg);
  const auto shape = detail::sample_shape(rng, cfg);
  const StepBigraphon raw = detail::sample_bigraphon(rng, shape, cfg, adv);
  try {
    return sinkhorn_biregularize(raw, cfg.sinkhorn_tol);
  } catch (const ConvergenceError&) {
    return std::nullopt;
  }
}

nlohmann::json domination_witness(const Bigraph& g, const Bigraph& h, const StepBigraphon& w, int t) {
  auto j = witness_base("weak-domination");
  j["g"] = bigraph_to_json(g);
  j["h"] = bigraph_to_json(h);
  j["w"] = bigraphon_to_json(w);
  j["trial"] = t;
  return j;
}

// Representatives of the isomorphism classes of 2-cores of induced
// subgraphs. For biregular W the normalized density of an induced subgraph
// equals that of its 2-core.
std::vector<Bigraph> induced_core_representatives(const Bigraph& g) {
  constexpr int kMaxInducedVertices = 20;
  if (g.v() > kMaxInducedVertices) {
    throw std::length_error("induced subgraph enumeration supports at most " + std::to_string(kMaxInducedVertices) +
                            " vertices");
  }
  const std::vector<char> none(static_cast<std::size_t>(g.v()), 0);
  std::set<std::vector<char>> masks;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.v()); ++s) {
    std::vector<char> alive(static_cast<std::size_t>(g.v()));
    for (int v = 0; v < g.v(); ++v) alive[v] = static_cast<char>((s >> v) & 1U);
    masks.insert(core_mask(g, std::move(alive), none));
  }
  std::map<std::vector<int>, std::vector<Bigraph>> buckets;
  std::vector<Bigraph> reps;
  for (const auto& mask : masks) {
    Bigraph core = induced_subgraph(g, mask);
    auto& bucket = buckets[graph_invariant(core)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const Bigraph& b) { return are_isomorphic(b, core); });
    if (seen) continue;
    bucket.push_back(core);
    reps.push_back(std::move(core));
  }
  return reps;
}

}  // namespace

TestReport test_weak_domination(const Bigraph& g, const Bigraph& h, const TestConfig& cfg) {
  Aggregator agg("weak-domination", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const auto w = biregular_trial(rng, cfg);
    if (!w) {
      agg.skip();
      continue;
    }
    agg.record(weak_domination_margin(g, h, *w), [&] { return domination_witness(g, h, *w, t); });
  }
  return agg.finish();
}

int induced_core_classes(const Bigraph& g) { return static_cast<int>(induced_core_representatives(g).size()); }

TestReport test_induced_sidorenko(const Bigraph& g, const TestConfig& cfg) {
  const auto reps = induced_core_representatives(g);
  Aggregator agg("induced-sidorenko", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const auto w = biregular_trial(rng, cfg);
    if (!w) {
      agg.skip();
      continue;
    }
    const double top = normalized(g, *w);
    double worst = std::numeric_limits<double>::infinity();
    const Bigraph* worst_h = nullptr;
    for (const auto& h : reps) {
      const double m = relative_margin(top, normalized(h, *w));
      if (m < worst) {
        worst = m;
        worst_h = &h;
      }
    }
    agg.record(worst, [&] { return domination_witness(g, *worst_h, *w, t); });
  }
  return agg.finish();
}

TestReport test_weakly_norming(const Bigraph& g, const TestConfig& cfg) {
  std::set<int> left_degrees;
  std::set<int> right_degrees;
  for (Vertex v = 0; v < g.v(); ++v) {
    if (g.degree(v) > 0) (g.is_left(v) ? left_degrees : right_degrees).insert(g.degree(v));
  }
  std::vector<std::string> reasons;
  if (g.e() == 0) reasons.push_back("graph has no edges");
  if (left_degrees.size() > 1) reasons.push_back("left degrees differ after removing isolated vertices");
  if (right_degrees.size() > 1) reasons.push_back("right degrees differ after removing isolated vertices");
  if (!reasons.empty()) return detail::precondition_report("weakly-norming", cfg.seed, std::move(reasons));

  Aggregator agg("weakly-norming", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const bool adv = detail::adversarial_trial(rng, cfg);
    const int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(std::min(g.e(), 3))));
    std::vector<int> coloring(static_cast<std::size_t>(g.e()));
    for (int& c : coloring) c = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
    const ColoredBigraph h(g, coloring);
    const auto shape = detail::sample_shape(rng, cfg);
    std::vector<int> palette(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) palette[i] = i + 1;
    const BigraphonTuple ws = sample_tuple(rng, shape, cfg, adv, palette);
    agg.record(weakly_norming_margin(h, ws), [&] {
      auto j = witness_base("weakly-norming");
      j["g"] = colored_to_json(h);
      j["ws"] = tuple_to_json(ws);
      j["trial"] = t;
      return j;
    });
  }
  return agg.finish();
}

TestReport test_left_weak_holder(const ColoredBigraph& h, const TestConfig& cfg) {
  const Bigraph& g = h.graph();
  std::vector<std::string> reasons;
  if (g.v1() == 0) reasons.push_back("graph has no left vertices");
  if (!h.is_left_color_regular()) reasons.push_back("colored graph is not left-color-regular");
  if (!reasons.empty()) return detail::precondition_report("left-weak-holder", cfg.seed, std::move(reasons));

  const int k = static_cast<int>(h.color_set().size());
  Aggregator agg("left-weak-holder", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const bool adv = detail::adversarial_trial(rng, cfg);
    const int left_colors = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(std::min(g.v1(), 3))));
    std::vector<int> ell(static_cast<std::size_t>(g.v1()));
    for (int& a : ell) a = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(left_colors)));
    const auto shape = detail::sample_shape(rng, cfg);
    std::vector<int> palette;
    for (int a = 0; a < left_colors; ++a) {
      for (int c = 0; c < k; ++c) palette.push_back(pair_color(a, c, k));
    }
    const BigraphonTuple ws = sample_tuple(rng, shape, cfg, adv, palette);
    agg.record(left_weak_holder_margin(h, ell, ws), [&] {
      auto j = witness_base("left-weak-holder");
      j["h"] = colored_to_json(h);
      j["ell"] = ell;
      j["ws"] = tuple_to_json(ws);
      j["trial"] = t;
      return j;
    });
  }
  return agg.finish();
}

TestReport test_color_sidorenko(const ColoredFractionalBigraph& h, const TestConfig& cfg) {
  if (!(h.e() > 0.0)) throw std::domain_error("color-Sidorenko test needs e(h) > 0");
  const std::vector<int> palette(h.colors().begin(), h.colors().end());
  Aggregator agg("color-sidorenko", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const bool adv = detail::adversarial_trial(rng, cfg);
    const auto shape = detail::sample_shape(rng, cfg);
    const BigraphonTuple ws = sample_tuple(rng, shape, cfg, adv, palette);
    agg.record(color_sidorenko_margin(h, ws), [&] {
      auto j = witness_base("color-sidorenko");
      j["h"] = fractional_to_json(h);
      j["ws"] = tuple_to_json(ws);
      j["trial"] = t;
      return j;
    });
  }
  return agg.finish();
}

std::pair<double, double> inductive_jensen_sides(const std::vector<double>& p, const std::vector<std::vector<double>>& f,
                                                 const std::vector<double>& g, const std::vector<double>& mu) {
  const std::size_t n = p.size();
  const std::size_t s = mu.size();
  if (f.size() != n) throw std::invalid_argument("need one function per exponent");
  if (g.size() != s) throw std::invalid_argument("g has the wrong length");
  for (const auto& fi : f) {
    if (fi.size() != s) throw std::invalid_argument("f has the wrong length");
    for (double x : fi) {
      if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("f must be finite and positive");
    }
  }
  for (double x : g) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("g must be finite and positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(p[i] >= 1.0) || (i > 0 && p[i] > p[i - 1])) {
      throw std::invalid_argument("exponents must be non-increasing and at least 1");
    }
  }
  // tail(i) = int g Prod_{j >= i} f_j (0-based).
  auto tail = [&](std::size_t i) {
    double total = 0.0;
    for (std::size_t x = 0; x < s; ++x) {
      double v = mu[x] * g[x];
      for (std::size_t j = i; j < n; ++j) v *= f[j][x];
      total += v;
    }
    return total;
  };
  double lhs = 0.0;
  for (std::size_t x = 0; x < s; ++x) {
    double v = mu[x] * g[x];
    for (std::size_t i = 0; i < n; ++i) v *= std::pow(f[i][x], p[i]);
    lhs += v;
  }
  const double p1 = n == 0 ? 1.0 : p[0];
  double rhs = std::pow(tail(0), p1);
  for (std::size_t i = 0; i < n; ++i) {
    const double next = i + 1 < n ? p[i + 1] : 1.0;
    rhs /= std::pow(tail(i + 1), p[i] - next);
  }
  return {lhs, rhs};
}

TestReport test_inductive_jensen(int n, const TestConfig& cfg) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Aggregator agg("jensen", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const bool adv = detail::adversarial_trial(rng, cfg);
    const auto shape = detail::sample_shape(rng, cfg);
    const Fn& mu = shape.mu;
    Fn p(static_cast<std::size_t>(n));
    for (double& x : p) x = 1.0 + 3.0 * uniform01(rng);
    std::sort(p.begin(), p.end(), std::greater<>());
    Fns f;
    for (int i = 0; i < n; ++i) f.push_back(detail::sample_function(rng, mu.size(), cfg, adv));
    const Fn g = detail::sample_function(rng, mu.size(), cfg, adv);
    agg.record(jensen_margin(p, f, g, mu), [&] {
      auto j = witness_base("jensen");
      j["p"] = p;
      j["f"] = f;
      j["g"] = g;
      j["mu"] = mu;
      j["trial"] = t;
      return j;
    });
  }
  return agg.finish();
}

namespace {

void check_restriction_preconditions(const ColoredBigraph& h, const std::vector<int>& colors, const BigraphonTuple& ws) {
  std::vector<std::string> reasons;
  if (!h.is_right_uniform()) reasons.push_back("colored graph is not right-uniform");
  const std::set<int> keep(colors.begin(), colors.end());
  for (int c : h.color_set()) {
    if (keep.count(c)) continue;
    auto it = ws.find(c);
    if (it == ws.end()) {
      reasons.push_back("no bigraphon for color " + std::to_string(c));
      continue;
    }
    if (!it->second.is_strictly_positive()) reasons.push_back("bigraphon for color " + std::to_string(c) + " is not positive");
    if (!it->second.is_left_regular()) reasons.push_back("bigraphon for color " + std::to_string(c) + " is not left-regular");
  }
  if (!reasons.empty()) throw PreconditionError(std::move(reasons));
}

nlohmann::json restriction_witness(const ColoredBigraph& h, const std::vector<int>& colors, const BigraphonTuple& ws) {
  auto j = witness_base("color-restriction");
  j["h"] = colored_to_json(h);
  j["colors"] = colors;
  j["ws"] = tuple_to_json(ws);
  return j;
}

}  // namespace

TestReport test_color_restriction(const ColoredBigraph& h, const std::vector<int>& colors, const BigraphonTuple& ws,
                                  double tol) {
  check_restriction_preconditions(h, colors, ws);
  TestConfig cfg;
  cfg.tol = tol;
  Aggregator agg("color-restriction", cfg);
  agg.record(color_restriction_margin(h, colors, ws), [&] { return restriction_witness(h, colors, ws); });
  return agg.finish();
}

TestReport test_color_restriction_random(const ColoredBigraph& h, const std::vector<int>& colors, const TestConfig& cfg) {
  const std::set<int> keep(colors.begin(), colors.end());
  const auto palette = h.color_set();
  Aggregator agg("color-restriction", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const bool adv = detail::adversarial_trial(rng, cfg);
    const auto shape = detail::sample_shape(rng, cfg);
    BigraphonTuple ws = sample_tuple(rng, shape, cfg, adv, palette);
    for (auto& [c, w] : ws) {
      if (keep.count(c)) continue;
      // Rescale row x by t(rho,W)/d_W(x): same edge density, constant rows.
      const double total = w.edge_density();
      const auto marg = w.row_marginal();
      std::vector<double> v = w.values();
      for (int i = 0; i < w.rows(); ++i) {
        for (int k = 0; k < w.cols(); ++k) v[static_cast<std::size_t>(i) * w.cols() + k] *= total / marg[i];
      }
      w = w.with_values(std::move(v));
    }
    check_restriction_preconditions(h, colors, ws);
    agg.record(color_restriction_margin(h, colors, ws), [&] {
      auto j = restriction_witness(h, colors, ws);
      j["trial"] = t;
      return j;
    });
  }
  return agg.finish();
}

TestReport verify_cs_inequality(const Bigraph& g, const std::vector<int>& coloring, const std::vector<Fold>& folds,
                                const BigraphonTuple& ws, double tol) {
  TestConfig cfg;
  cfg.tol = tol;
  Aggregator agg("cs-tree", cfg);
  const ColoredBigraph h(g, coloring);
  agg.record(cs_margin(g, coloring, folds, ws), [&] {
    auto j = witness_base("cs-tree");
    j["g"] = colored_to_json(h);
    j["folds"] = nlohmann::json::array();
    for (const auto& f : folds) j["folds"].push_back(fold_to_json(g, f));
    j["ws"] = tuple_to_json(ws);
    return j;
  });
  return agg.finish();
}

TestReport test_cs_inequality(const Bigraph& g, const std::vector<Fold>& pool, const TestConfig& cfg, int max_colors,
                              int max_folds) {
  if (max_colors < 1 || max_folds < 0) throw std::invalid_argument("need max_colors >= 1 and max_folds >= 0");
  const std::vector<Fold> folds_pool = pool.empty() ? enumerate_folds(g) : pool;
  for (const auto& f : folds_pool) {
    if (auto why = fold_violation(g, f)) throw std::invalid_argument("invalid fold in pool: " + *why);
  }
  Aggregator agg("cs-tree", cfg);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(split_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const bool adv = detail::adversarial_trial(rng, cfg);
    const int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_colors)));
    std::vector<int> coloring(static_cast<std::size_t>(g.e()));
    for (int& c : coloring) c = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
    std::vector<Fold> seq;
    if (!folds_pool.empty() && max_folds > 0) {
      const int m = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_folds)));
      for (int i = 0; i < m; ++i) seq.push_back(folds_pool[uniform_below(rng, folds_pool.size())]);
    }
    std::vector<int> palette(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) palette[i] = i + 1;
    const auto shape = detail::sample_shape(rng, cfg);
    const BigraphonTuple ws = sample_tuple(rng, shape, cfg, adv, palette);
    agg.record(cs_margin(g, coloring, seq, ws), [&] {
      auto j = witness_base("cs-tree");
      j["g"] = colored_to_json(ColoredBigraph(g, coloring));
      j["folds"] = nlohmann::json::array();
      for (const auto& f : seq) j["folds"].push_back(fold_to_json(g, f));
      j["ws"] = tuple_to_json(ws);
      j["trial"] = t;
      return j;
    });
  }
  return agg.finish();
}

}  // namespace sidlab
