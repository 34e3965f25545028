// sidlab command-line tool.
//
// Exit codes: 0 ok, 1 usage or input error, 2 no certificate found,
// 3 property violated or check failed, 4 precondition failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sidlab/bigraph.hpp"
#include "sidlab/checkers.hpp"
#include "sidlab/errors.hpp"
#include "sidlab/families.hpp"
#include "sidlab/fractional.hpp"
#include "sidlab/json_io.hpp"
#include "sidlab/percolation.hpp"
#include "sidlab/reflection.hpp"
#include "sidlab/testers.hpp"

namespace {

using namespace sidlab;

enum Exit : int { kOk = 0, kUsage = 1, kNotFound = 2, kViolated = 3, kPrecondition = 4 };

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::size_t search_budget(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SIDLAB_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("SIDLAB_BUDGET must be a nonnegative integer");
    }
  }
  return kDefaultSearchBudget;
}

std::vector<Fold> pool_for(const Bigraph& g, const std::string& pool) {
  if (pool == "all") return enumerate_folds(g);
  const auto ib = recognize_incidence(g);
  if (!ib) throw std::invalid_argument("--pool reflection needs a complete-hypergraph incidence bigraph");
  return reflection_fold_pool(*ib);
}

struct Options {
  // construct
  std::string kind;
  int n = 0;
  std::vector<int> uniformities;
  int k = 0;
  int d = 0;
  int v1 = 0;
  std::string profile;
  // shared
  std::string graph;
  std::string other;
  std::string output;
  // certify / verify
  std::string mode = "left";
  std::string pool = "all";
  std::optional<std::size_t> budget;
  std::string certificate;
  // test
  std::string property;
  TestConfig cfg;
  TestConfig holder_cfg{.trials = 200};
  int jensen_n = 1;
  std::vector<int> colors;
  // check
  std::string checker;
  std::string decomposition;
};

int cmd_construct(const Options& o) {
  if (o.kind == "incidence") {
    if (o.uniformities.empty()) throw std::invalid_argument("incidence needs --uniformities");
    write_json(colored_to_json(build_incidence(o.n, o.uniformities).graph), o.output);
  } else if (o.kind == "book") {
    write_json(bigraph_to_json(book(o.k)), o.output);
  } else if (o.kind == "star") {
    write_json(bigraph_to_json(star(o.d)), o.output);
  } else if (o.kind == "dual-star") {
    write_json(bigraph_to_json(dual_star(o.d)), o.output);
  } else if (o.kind == "cycle4") {
    write_json(bigraph_to_json(cycle4()), o.output);
  } else if (o.kind == "edge") {
    write_json(bigraph_to_json(edge_bigraph()), o.output);
  } else if (o.kind == "profile") {
    std::map<int, int> counts;
    const Json parsed = Json::parse(o.profile);
    for (const auto& [key, value] : parsed.items()) counts[std::stoi(key)] = value.get<int>();
    write_json(bigraph_to_json(graph_from_profile(o.v1, counts)), o.output);
  } else {
    throw std::invalid_argument("unknown construction " + o.kind);
  }
  return kOk;
}

int cmd_certify(const Options& o) {
  const Bigraph g = bigraph_from_json(read_json(o.graph));
  SearchOptions opt;
  opt.budget = search_budget(o.budget);
  opt.pool = pool_for(g, o.pool);
  SearchResult r;
  if (o.mode == "left") {
    r = find_left_cut_percolating(g, opt);
  } else if (o.mode == "edge") {
    r = find_cut_percolating(g, opt);
  } else {
    throw std::invalid_argument("--mode must be left or edge");
  }
  if (!r.found()) {
    std::cerr << "no certificate found (" << r.states << " states"
              << (r.budget_exhausted ? ", budget exhausted" : ", search space exhausted") << ")\n";
    return kNotFound;
  }
  if (auto v = verify_certificate(g, *r.certificate); !v) {
    throw std::logic_error("search produced a rejected certificate: " + v.diagnostic);
  }
  write_json(certificate_to_json(g, *r.certificate), o.output);
  return kOk;
}

int cmd_verify(const Options& o) {
  const Bigraph g = bigraph_from_json(read_json(o.graph));
  const auto cert = certificate_from_json(g, read_json(o.certificate));
  const auto v = verify_certificate(g, cert);
  Json j = {{"ok", v.ok}, {"length", cert.length()}, {"transitive", folds_act_transitively(g, cert)}};
  if (!v.ok) j["diagnostic"] = v.diagnostic;
  write_json(j, o.output);
  return v.ok ? kOk : kViolated;
}

ColoredFractionalBigraph fractional_input(const Json& j) {
  if (j.contains("weights")) return fractional_from_json(j);
  return ColoredFractionalBigraph::from_colored(colored_from_json(j));
}

int cmd_test(const Options& o) {
  const std::string& p = o.property;
  TestReport report;
  if (p == "jensen") {
    report = test_inductive_jensen(o.jensen_n, o.cfg);
  } else {
    if (o.graph.empty()) throw std::invalid_argument("--graph is required for " + p);
    const Json input = read_json(o.graph);
    if (p == "sidorenko") {
      report = test_sidorenko(bigraph_from_json(input), o.cfg);
    } else if (p == "strong-sidorenko") {
      report = test_strong_sidorenko(bigraph_from_json(input), o.cfg);
    } else if (p == "induced-sidorenko") {
      report = test_induced_sidorenko(bigraph_from_json(input), o.cfg);
    } else if (p == "weak-domination") {
      if (o.other.empty()) throw std::invalid_argument("weak-domination needs --other");
      report = test_weak_domination(bigraph_from_json(input), bigraph_from_json(read_json(o.other)), o.cfg);
    } else if (p == "weak-norming") {
      report = test_weakly_norming(bigraph_from_json(input), o.cfg);
    } else if (p == "left-weak-holder") {
      report = test_left_weak_holder(colored_from_json(input), o.cfg);
    } else if (p == "color-sidorenko") {
      report = test_color_sidorenko(fractional_input(input), o.cfg);
    } else if (p == "cs-tree") {
      const Bigraph g = bigraph_from_json(input);
      report = test_cs_inequality(g, pool_for(g, o.pool), o.cfg);
    } else if (p == "color-restriction") {
      const ColoredBigraph h = colored_from_json(input);
      report = test_color_restriction_random(h, o.colors, o.cfg);
    } else {
      throw CLI::ValidationError("unknown property " + p);
    }
  }
  write_json(report_to_json(report), o.output);
  switch (report.verdict) {
    case Verdict::kHolds: return kOk;
    case Verdict::kViolated: return kViolated;
    case Verdict::kPreconditionFailed: return kPrecondition;
  }
  return kUsage;
}

Json profile_report_json(const ProfileReport& r) {
  Json items = Json::array();
  for (const auto& it : r.items) items.push_back({{"k", it.k}, {"count", it.count}, {"required", it.required}, {"ok", it.ok}});
  return {{"pass", r.pass}, {"items", items}};
}

DegreeProfile profile_input(const Options& o) {
  if (!o.graph.empty()) return degree_profile(bigraph_from_json(read_json(o.graph)));
  if (o.profile.empty()) throw std::invalid_argument("need --graph or --profile");
  DegreeProfile p;
  p.v1 = o.v1;
  const Json parsed = Json::parse(o.profile);
  for (const auto& [key, value] : parsed.items()) p.counts[std::stoi(key)] = value.get<std::int64_t>();
  return p;
}

ReflectiveTreeDecomposition rtd_from_json(const Json& j) {
  ReflectiveTreeDecomposition t;
  t.bags = j.at("bags").get<std::vector<std::vector<std::string>>>();
  for (const auto& e : j.at("tree_edges")) t.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return t;
}

int cmd_check(const Options& o) {
  const std::string& c = o.checker;
  Json out;
  bool pass = false;
  if (c == "largeright" || c == "conlonlee") {
    const DegreeProfile p = profile_input(o);
    const ProfileReport r = c == "largeright" ? check_largeright(p) : check_conlonlee_divisibility(p);
    out = profile_report_json(r);
    pass = r.pass;
  } else if (c == "orbits") {
    if (o.graph.empty() || o.other.empty()) throw std::invalid_argument("orbits needs --graph and --other");
    const OrbitReport r =
        check_orbit_hypotheses(bigraph_from_json(read_json(o.graph)), colored_from_json(read_json(o.other)), o.holder_cfg);
    Json orbits = Json::array();
    for (const auto& it : r.orbits) {
      orbits.push_back({{"representative", it.representative},
                        {"orbit_size", it.orbit_size},
                        {"sum_g", it.sum_g},
                        {"sum_h", it.sum_h},
                        {"zero_iff_zero", it.zero_iff_zero},
                        {"dominates", it.dominates}});
    }
    out = {{"pass", r.pass},
           {"group_order", r.group_order},
           {"orbits", orbits},
           {"holder_evidence", report_to_json(r.holder_evidence)},
           {"verdict", r.verdict}};
    pass = r.pass;
  } else if (c == "rtd") {
    if (o.graph.empty() || o.decomposition.empty()) throw std::invalid_argument("rtd needs --graph and --decomposition");
    const Bigraph g = bigraph_from_json(read_json(o.graph));
    const RtdReport r = verify_rtd(g, rtd_from_json(read_json(o.decomposition)));
    out = {{"pass", r.ok}};
    if (!r.ok) out["diagnostic"] = r.diagnostic;
    if (r.core) out["core"] = bigraph_to_json(*r.core);
    pass = r.ok;
  } else {
    throw CLI::ValidationError("unknown checker " + c);
  }
  write_json(out, o.output);
  return pass ? kOk : kViolated;
}

void add_test_config(CLI::App* cmd, TestConfig& cfg) {
  cmd->add_option("--trials", cfg.trials, "Number of random trials")->check(CLI::PositiveNumber);
  cmd->add_option("--rows", cfg.rows, "Largest grid row count")->check(CLI::PositiveNumber);
  cmd->add_option("--cols", cfg.cols, "Largest grid column count")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Master seed");
  cmd->add_option("--tol", cfg.tol, "Relative tolerance")->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--nonuniform-weights", cfg.nonuniform_weights, "Random step weights");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fold, percolation and Sidorenko-inequality toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Write a bigraph");
  construct->add_option("kind", o.kind, "incidence | book | star | dual-star | cycle4 | edge | profile")->required();
  construct->add_option("--n", o.n, "Ground set size");
  construct->add_option("--uniformities", o.uniformities, "Edge sizes")->delimiter(',');
  construct->add_option("--k", o.k, "Book pages");
  construct->add_option("--d", o.d, "Star degree");
  construct->add_option("--v1", o.v1, "Left side size for profile graphs");
  construct->add_option("--profile", o.profile, "JSON object degree -> count");
  construct->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* certify = app.add_subcommand("certify", "Search for a percolation certificate");
  certify->add_option("--graph", o.graph, "Bigraph JSON")->required();
  certify->add_option("--mode", o.mode, "left | edge")->check(CLI::IsMember({"left", "edge"}));
  certify->add_option("--pool", o.pool, "all | reflection")->check(CLI::IsMember({"all", "reflection"}));
  certify->add_option("--budget", o.budget, "Search state budget");
  certify->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("--graph", o.graph, "Bigraph JSON")->required();
  verify->add_option("--certificate", o.certificate, "Certificate JSON")->required();
  verify->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* test = app.add_subcommand("test", "Randomized inequality test");
  test->add_option("property", o.property,
                   "sidorenko | strong-sidorenko | induced-sidorenko | weak-domination | weak-norming | "
                   "left-weak-holder | color-sidorenko | cs-tree | jensen | color-restriction")
      ->required();
  test->add_option("--graph", o.graph, "Input JSON");
  test->add_option("--other", o.other, "Second bigraph (weak-domination)");
  test->add_option("--n", o.jensen_n, "Number of functions (jensen)")->check(CLI::NonNegativeNumber);
  test->add_option("--colors", o.colors, "Kept colors (color-restriction)")->delimiter(',');
  test->add_option("--pool", o.pool, "Fold pool for cs-tree: all | reflection")->check(CLI::IsMember({"all", "reflection"}));
  test->add_option("-o,--output", o.output, "Output file (default stdout)");
  add_test_config(test, o.cfg);

  auto* check = app.add_subcommand("check", "Exact hypothesis checkers");
  check->add_option("checker", o.checker, "largeright | conlonlee | orbits | rtd")->required();
  check->add_option("--graph", o.graph, "Bigraph JSON");
  check->add_option("--other", o.other, "Colored bigraph h (orbits)");
  check->add_option("--profile", o.profile, "JSON object degree -> count");
  check->add_option("--v1", o.v1, "Left side size for --profile");
  check->add_option("--decomposition", o.decomposition, "Decomposition JSON (rtd)");
  check->add_option("-o,--output", o.output, "Output file (default stdout)");
  add_test_config(check, o.holder_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*certify) return cmd_certify(o);
    if (*verify) return cmd_verify(o);
    if (*test) return cmd_test(o);
    if (*check) return cmd_check(o);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed:\n";
    for (const auto& r : e.reasons()) std::cerr << "  - " << r << '\n';
    return kPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
