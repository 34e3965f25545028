#include "sidlab/fractional.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sidlab/errors.hpp"

namespace sidlab {

namespace {

constexpr double kMaxAssignments = 2e7;

}  // namespace

ColoredFractionalBigraph::ColoredFractionalBigraph(std::vector<VertexId> vertices, std::set<int> colors)
    : vertices_(std::move(vertices)), colors_(std::move(colors)) {
  if (vertices_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw std::invalid_argument("fractional bigraphs support at most 63 vertices");
  }
  std::sort(vertices_.begin(), vertices_.end(), [](const auto& a, const auto& b) { return id_less(a, b); });
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("repeated vertex id");
  }
}

double ColoredFractionalBigraph::weight(SubsetMask u, int color) const {
  auto it = weights_.find({u, color});
  return it == weights_.end() ? 0.0 : it->second;
}

void ColoredFractionalBigraph::set_weight(SubsetMask u, int color, double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) throw std::invalid_argument("weights must be finite and nonnegative");
  if (!colors_.count(color)) throw std::invalid_argument("unknown color " + std::to_string(color));
  if (v() < 64 && (u >> v()) != 0) throw std::invalid_argument("subset mask outside the vertex set");
  if (value == 0.0) {
    weights_.erase({u, color});
  } else {
    weights_[{u, color}] = value;
  }
}

SubsetMask ColoredFractionalBigraph::mask_of(std::span<const VertexId> ids) const {
  SubsetMask m = 0;
  for (const auto& id : ids) {
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end()) throw std::invalid_argument("unknown vertex " + id);
    m |= SubsetMask{1} << (it - vertices_.begin());
  }
  return m;
}

double ColoredFractionalBigraph::e(int color) const {
  double s = 0.0;
  for (const auto& [key, w] : weights_) {
    if (key.second == color) s += std::popcount(key.first) * w;
  }
  return s;
}

double ColoredFractionalBigraph::e() const {
  double s = 0.0;
  for (int c : colors_) s += e(c);
  return s;
}

double ColoredFractionalBigraph::degree(int vertex, int color) const {
  double s = 0.0;
  for (const auto& [key, w] : weights_) {
    if (key.second == color && ((key.first >> vertex) & 1U)) s += w;
  }
  return s;
}

bool ColoredFractionalBigraph::is_color_regular(double tol) const {
  for (int c : colors_) {
    for (int x = 1; x < v(); ++x) {
      if (std::abs(degree(x, c) - degree(0, c)) > tol) return false;
    }
  }
  return true;
}

ColoredFractionalBigraph ColoredFractionalBigraph::from_colored(const ColoredBigraph& h) {
  const Bigraph& g = h.graph();
  if (!h.is_right_uniform()) throw std::invalid_argument("h_H needs a right-uniform colored bigraph");
  const auto cs = h.color_set();
  ColoredFractionalBigraph out(g.left_ids(), std::set<int>(cs.begin(), cs.end()));
  for (Vertex w = g.v1(); w < g.v(); ++w) {
    if (g.degree(w) == 0) throw std::invalid_argument("h_H needs a graph without isolated right vertices");
    SubsetMask u = 0;
    for (Vertex x : g.neighbors(w)) u |= SubsetMask{1} << x;
    const int c = h.right_color(w);
    out.weights_[{u, c}] += 1.0;
  }
  return out;
}

ColoredFractionalBigraph ColoredFractionalBigraph::color_power(const std::map<int, double>& p) const {
  ColoredFractionalBigraph out(vertices_, colors_);
  for (int c : colors_) {
    auto it = p.find(c);
    if (it == p.end()) throw std::invalid_argument("color power misses color " + std::to_string(c));
    if (!(it->second >= 0.0) || !std::isfinite(it->second)) throw std::invalid_argument("color powers must be nonnegative");
  }
  for (const auto& [key, w] : weights_) out.set_weight(key.first, key.second, w * p.at(key.second));
  return out;
}

ColoredFractionalBigraph ColoredFractionalBigraph::rainbow_star() const {
  const double total = e();
  if (!(total > 0.0)) throw std::domain_error("rainbow star needs e(h) > 0");
  ColoredFractionalBigraph out({"1"}, colors_);
  for (int c : colors_) out.set_weight(1, c, e(c) / total);
  return out;
}

ColoredBigraph rainbow_star_graph(const std::set<int>& colors) {
  std::vector<VertexId> right;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int c : colors) {
    right.push_back("c" + std::to_string(c));
    edges.emplace_back("1", right.back());
  }
  Bigraph g({"1"}, right, edges);
  std::vector<int> col;
  for (const auto& [l, r] : g.edges()) col.push_back(std::stoi(g.id(r).substr(1)));
  return ColoredBigraph(std::move(g), std::move(col));
}

double fractional_density(const ColoredFractionalBigraph& h, const BigraphonTuple& ws) {
  for (const auto& [key, w] : h.weights()) {
    if (!ws.count(key.second)) throw std::invalid_argument("no bigraphon for color " + std::to_string(key.second));
  }
  if (h.weights().empty()) return 1.0;
  validate_tuple(ws);
  const StepBigraphon& shape = ws.begin()->second;
  const int rows = shape.rows();
  const int cols = shape.cols();
  const int n = h.v();
  if (std::pow(static_cast<double>(rows), n) > kMaxAssignments) {
    throw std::length_error("fractional density enumeration exceeds the assignment cap");
  }
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  double total = 0.0;
  while (true) {
    double weight = 1.0;
    for (int k = 0; k < n; ++k) weight *= shape.mu()[x[k]];
    if (weight > 0.0) {
      double prod = 1.0;
      for (const auto& [key, exponent] : h.weights()) {
        const StepBigraphon& w = ws.at(key.second);
        double star = 0.0;
        for (int y = 0; y < cols; ++y) {
          double term = shape.nu()[y];
          for (int k = 0; k < n; ++k) {
            if ((key.first >> k) & 1U) term *= w(x[k], y);
          }
          star += term;
        }
        if (star == 0.0 && exponent < 0.0) throw std::domain_error("zero base with negative exponent");
        prod *= std::pow(star, exponent);
      }
      total += weight * prod;
    }
    int k = n - 1;
    while (k >= 0 && ++x[k] == rows) x[k--] = 0;
    if (k < 0) break;
  }
  return total;
}

BigraphonTuple left_regularize_tuple(const ColoredFractionalBigraph& h, const BigraphonTuple& ws, int pivot) {
  std::vector<std::string> reasons;
  if (!h.is_color_regular(1e-9)) reasons.emplace_back("h is not color-regular");
  if (!h.colors().count(pivot)) {
    reasons.emplace_back("pivot " + std::to_string(pivot) + " is not a color of h");
  } else if (!(h.e(pivot) > 0.0)) {
    reasons.emplace_back("pivot color carries zero edge mass");
  }
  for (int c : h.colors()) {
    auto it = ws.find(c);
    if (it == ws.end()) {
      reasons.emplace_back("no bigraphon for color " + std::to_string(c));
    } else if (!it->second.is_strictly_positive()) {
      reasons.emplace_back("bigraphon for color " + std::to_string(c) + " is not strictly positive");
    }
  }
  if (!reasons.empty()) throw PreconditionError(std::move(reasons));
  validate_tuple(ws);

  BigraphonTuple out = ws;
  const StepBigraphon& wp = ws.at(pivot);
  std::vector<double> pivot_values = wp.values();
  const int rows = wp.rows();
  const int cols = wp.cols();
  for (int c : h.colors()) {
    if (c == pivot) continue;
    const StepBigraphon& w = ws.at(c);
    const double t = w.edge_density();
    const auto marginal = w.row_marginal();
    const double exponent = h.e(c) / h.e(pivot);
    std::vector<double> values = w.values();
    for (int i = 0; i < rows; ++i) {
      const double ratio = marginal[i] / t;
      for (int j = 0; j < cols; ++j) {
        values[static_cast<std::size_t>(i) * cols + j] /= ratio;
        pivot_values[static_cast<std::size_t>(i) * cols + j] *= std::pow(ratio, exponent);
      }
    }
    out[c] = w.with_values(std::move(values));
  }
  out[pivot] = wp.with_values(std::move(pivot_values));
  return out;
}

}  // namespace sidlab
