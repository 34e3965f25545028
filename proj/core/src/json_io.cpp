#include "sidlab/json_io.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace sidlab {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + e.what());
  }
}

std::vector<std::pair<VertexId, VertexId>> edge_list(const Json& j) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (!j.is_array()) throw std::invalid_argument("\"edges\" must be an array");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("every edge must be a [left, right] pair");
    edges.emplace_back(get_as<std::string>(e[0], "edge endpoint"), get_as<std::string>(e[1], "edge endpoint"));
  }
  return edges;
}

}  // namespace

Json bigraph_to_json(const Bigraph& g) {
  Json edges = Json::array();
  for (int k = 0; k < g.e(); ++k) {
    const auto [l, r] = g.edge_ids(k);
    edges.push_back({l, r});
  }
  return {{"v1", g.left_ids()}, {"v2", g.right_ids()}, {"edges", edges}};
}

Bigraph bigraph_from_json(const Json& j) {
  return Bigraph(get_as<std::vector<std::string>>(field(j, "v1"), "\"v1\""),
                 get_as<std::vector<std::string>>(field(j, "v2"), "\"v2\""), edge_list(field(j, "edges")));
}

Json colored_to_json(const ColoredBigraph& h) {
  Json j = bigraph_to_json(h.graph());
  j["edge_colors"] = h.colors();
  return j;
}

ColoredBigraph colored_from_json(const Json& j) {
  Bigraph g = bigraph_from_json(j);
  if (!j.contains("edge_colors")) return ColoredBigraph(std::move(g), 1);
  const auto input = edge_list(field(j, "edges"));
  const auto colors = get_as<std::vector<int>>(j.at("edge_colors"), "\"edge_colors\"");
  if (colors.size() != input.size()) throw std::invalid_argument("\"edge_colors\" must be parallel to \"edges\"");
  std::map<std::pair<VertexId, VertexId>, int> by_edge;
  for (std::size_t k = 0; k < input.size(); ++k) by_edge[input[k]] = colors[k];
  std::vector<int> ordered;
  for (int k = 0; k < g.e(); ++k) ordered.push_back(by_edge.at(g.edge_ids(k)));
  return ColoredBigraph(std::move(g), std::move(ordered));
}

Json fold_to_json(const Bigraph& g, const Fold& f) {
  Json phi = Json::object();
  for (Vertex v = 0; v < g.v(); ++v) phi[g.id(v)] = g.id(f.phi[v]);
  Json left = Json::array();
  for (Vertex v : f.left) left.push_back(g.id(v));
  return {{"phi", phi}, {"left", left}};
}

Fold fold_from_json(const Bigraph& g, const Json& j) {
  const Json& phi = field(j, "phi");
  if (!phi.is_object()) throw std::invalid_argument("\"phi\" must be an object");
  Fold f{VertexMap(static_cast<std::size_t>(g.v()), -1), {}};
  for (const auto& [from, to] : phi.items()) {
    f.phi[g.index(from)] = g.index(get_as<std::string>(to, "\"phi\" value"));
  }
  for (Vertex v = 0; v < g.v(); ++v) {
    if (f.phi[v] == -1) throw std::invalid_argument("\"phi\" does not map vertex " + g.id(v));
  }
  for (const auto& id : get_as<std::vector<std::string>>(field(j, "left"), "\"left\"")) f.left.push_back(g.index(id));
  std::sort(f.left.begin(), f.left.end());
  return f;
}

Json certificate_to_json(const Bigraph& g, const PercolationCertificate& c) {
  const bool left = c.mode == PercolationMode::kLeft;
  Json folds = Json::array();
  for (const auto& f : c.folds) folds.push_back(fold_to_json(g, f));
  Json traj = Json::array();
  for (const auto& set : c.trajectory) {
    Json s = Json::array();
    for (int x : set) {
      if (left) {
        s.push_back(g.id(x));
      } else {
        const auto [l, r] = g.edge_ids(x);
        s.push_back({l, r});
      }
    }
    traj.push_back(s);
  }
  return {{"mode", left ? "left" : "edge"}, {"folds", folds}, {"trajectory", traj}};
}

PercolationCertificate certificate_from_json(const Bigraph& g, const Json& j) {
  PercolationCertificate c;
  const auto mode = get_as<std::string>(field(j, "mode"), "\"mode\"");
  if (mode == "left") {
    c.mode = PercolationMode::kLeft;
  } else if (mode == "edge") {
    c.mode = PercolationMode::kEdge;
  } else {
    throw std::invalid_argument("\"mode\" must be \"left\" or \"edge\"");
  }
  const Json& folds = field(j, "folds");
  if (!folds.is_array()) throw std::invalid_argument("\"folds\" must be an array");
  for (const auto& f : folds) c.folds.push_back(fold_from_json(g, f));
  const Json& traj = field(j, "trajectory");
  if (!traj.is_array()) throw std::invalid_argument("\"trajectory\" must be an array");
  for (const auto& s : traj) {
    if (!s.is_array()) throw std::invalid_argument("trajectory entries must be arrays");
    std::vector<int> set;
    for (const auto& x : s) {
      if (c.mode == PercolationMode::kLeft) {
        const Vertex v = g.index(get_as<std::string>(x, "trajectory vertex"));
        if (!g.is_left(v)) throw std::invalid_argument("trajectory vertex " + g.id(v) + " is not a left vertex");
        set.push_back(v);
      } else {
        if (!x.is_array() || x.size() != 2) throw std::invalid_argument("edge-mode trajectory entries must be pairs");
        const auto k = g.edge_index(g.index(get_as<std::string>(x[0], "edge endpoint")),
                                    g.index(get_as<std::string>(x[1], "edge endpoint")));
        if (!k) throw std::invalid_argument("trajectory names a non-edge");
        set.push_back(*k);
      }
    }
    std::sort(set.begin(), set.end());
    c.trajectory.push_back(std::move(set));
  }
  return c;
}

Json bigraphon_to_json(const StepBigraphon& w) { return {{"mu", w.mu()}, {"nu", w.nu()}, {"w", w.matrix()}}; }

StepBigraphon bigraphon_from_json(const Json& j) {
  return StepBigraphon(get_as<std::vector<double>>(field(j, "mu"), "\"mu\""),
                       get_as<std::vector<double>>(field(j, "nu"), "\"nu\""),
                       get_as<std::vector<std::vector<double>>>(field(j, "w"), "\"w\""));
}

Json tuple_to_json(const BigraphonTuple& ws) {
  Json j = Json::object();
  for (const auto& [c, w] : ws) j[std::to_string(c)] = bigraphon_to_json(w);
  return j;
}

BigraphonTuple tuple_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("bigraphon tuple must be an object keyed by color");
  BigraphonTuple ws;
  for (const auto& [key, value] : j.items()) {
    int c = 0;
    try {
      std::size_t used = 0;
      c = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("tuple key \"" + key + "\" is not an integer color");
    }
    ws.emplace(c, bigraphon_from_json(value));
  }
  validate_tuple(ws);
  return ws;
}

Json fractional_to_json(const ColoredFractionalBigraph& h) {
  Json weights = Json::array();
  for (const auto& [key, w] : h.weights()) {
    Json subset = Json::array();
    for (int k = 0; k < h.v(); ++k) {
      if ((key.first >> k) & 1U) subset.push_back(h.vertices()[k]);
    }
    weights.push_back({{"subset", subset}, {"color", key.second}, {"weight", w}});
  }
  return {{"vertices", h.vertices()}, {"colors", h.colors()}, {"weights", weights}};
}

ColoredFractionalBigraph fractional_from_json(const Json& j) {
  const auto colors = get_as<std::vector<int>>(field(j, "colors"), "\"colors\"");
  ColoredFractionalBigraph h(get_as<std::vector<std::string>>(field(j, "vertices"), "\"vertices\""),
                             std::set<int>(colors.begin(), colors.end()));
  const Json& weights = field(j, "weights");
  if (!weights.is_array()) throw std::invalid_argument("\"weights\" must be an array");
  for (const auto& entry : weights) {
    const auto subset = get_as<std::vector<std::string>>(field(entry, "subset"), "\"subset\"");
    const SubsetMask u = h.mask_of(subset);
    const int c = get_as<int>(field(entry, "color"), "\"color\"");
    h.set_weight(u, c, h.weight(u, c) + get_as<double>(field(entry, "weight"), "\"weight\""));
  }
  return h;
}

}  // namespace sidlab
