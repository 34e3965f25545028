#include "sidlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "contraction.hpp"
#include "sidlab/errors.hpp"
#include "sidlab/random.hpp"

namespace sidlab {

namespace {

constexpr double kWeightSumTol = 1e-12;

void check_weights(const std::vector<double>& w, const char* name) {
  if (w.empty()) throw std::invalid_argument(std::string(name) + " must be nonempty");
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument(std::string(name) + " has a negative or non-finite weight");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    throw std::invalid_argument(std::string(name) + " must sum to 1 (got " + std::to_string(sum) + ")");
  }
}

bool same_weights(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kWeightSumTol) return false;
  }
  return true;
}

std::vector<double> flatten(const std::vector<std::vector<double>>& m) {
  std::vector<double> out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<double> uniform_weights(std::size_t n) {
  if (n == 0) throw std::invalid_argument("bigraphon needs at least one row and one column");
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

// Per-edge bigraphon selector for the shared network builder.
template <typename EdgeMatrix>
detail::Network build_network(const Bigraph& g, const StepBigraphon& shape, EdgeMatrix&& matrix_of_edge,
                              bool skip_isolated) {
  detail::Network net;
  std::vector<int> var(static_cast<std::size_t>(g.v()), -1);
  for (Vertex v = 0; v < g.v(); ++v) {
    if (skip_isolated && g.degree(v) == 0) continue;
    var[v] = static_cast<int>(net.domain.size());
    net.domain.push_back(g.is_left(v) ? shape.rows() : shape.cols());
    net.weight.push_back(g.is_left(v) ? shape.mu() : shape.nu());
  }
  for (int k = 0; k < g.e(); ++k) {
    const auto [l, r] = g.edges()[k];
    net.factors.push_back({var[l], var[r], matrix_of_edge(k).values().data()});
  }
  return net;
}

}  // namespace

StepBigraphon::StepBigraphon(std::vector<double> mu, std::vector<double> nu, std::vector<double> values)
    : mu_(std::move(mu)), nu_(std::move(nu)), values_(std::move(values)) {
  check_weights(mu_, "row weights");
  check_weights(nu_, "column weights");
  if (values_.size() != mu_.size() * nu_.size()) throw std::invalid_argument("value matrix has the wrong shape");
  for (double x : values_) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("bigraphon values must be finite and nonnegative");
  }
}

StepBigraphon::StepBigraphon(std::vector<double> mu, std::vector<double> nu,
                             const std::vector<std::vector<double>>& values)
    : StepBigraphon(std::move(mu), std::move(nu), flatten(values)) {
  for (const auto& row : values) {
    if (row.size() != nu_.size()) throw std::invalid_argument("value matrix rows must have one entry per column");
  }
}

StepBigraphon StepBigraphon::uniform(const std::vector<std::vector<double>>& values) {
  if (values.empty()) throw std::invalid_argument("bigraphon needs at least one row");
  return StepBigraphon(uniform_weights(values.size()), uniform_weights(values.front().size()), values);
}

StepBigraphon StepBigraphon::constant(int rows, int cols, double value) {
  return StepBigraphon(uniform_weights(static_cast<std::size_t>(rows)), uniform_weights(static_cast<std::size_t>(cols)),
                       std::vector<double>(static_cast<std::size_t>(rows) * cols, value));
}

std::vector<std::vector<double>> StepBigraphon::matrix() const {
  std::vector<std::vector<double>> out(mu_.size());
  for (int i = 0; i < rows(); ++i) {
    out[i].assign(values_.begin() + static_cast<std::ptrdiff_t>(i) * cols(),
                  values_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols());
  }
  return out;
}

double StepBigraphon::edge_density() const {
  double s = 0.0;
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) s += mu_[i] * nu_[j] * (*this)(i, j);
  }
  return s;
}

std::vector<double> StepBigraphon::row_marginal() const {
  std::vector<double> out(mu_.size(), 0.0);
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) out[i] += nu_[j] * (*this)(i, j);
  }
  return out;
}

std::vector<double> StepBigraphon::col_marginal() const {
  std::vector<double> out(nu_.size(), 0.0);
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) out[j] += mu_[i] * (*this)(i, j);
  }
  return out;
}

bool StepBigraphon::is_left_regular(double tol) const {
  const double t = edge_density();
  const auto m = row_marginal();
  for (int i = 0; i < rows(); ++i) {
    if (mu_[i] > 0.0 && std::abs(m[i] - t) > tol) return false;
  }
  return true;
}

bool StepBigraphon::is_right_regular(double tol) const {
  const double t = edge_density();
  const auto m = col_marginal();
  for (int j = 0; j < cols(); ++j) {
    if (nu_[j] > 0.0 && std::abs(m[j] - t) > tol) return false;
  }
  return true;
}

bool StepBigraphon::is_strictly_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return x > 0.0; });
}

StepBigraphon StepBigraphon::with_values(std::vector<double> values) const {
  return StepBigraphon(mu_, nu_, std::move(values));
}

StepBigraphon StepBigraphon::scaled(double lambda) const {
  if (!(lambda >= 0.0)) throw std::invalid_argument("scale factor must be nonnegative");
  std::vector<double> v = values_;
  for (double& x : v) x *= lambda;
  return with_values(std::move(v));
}

void validate_tuple(const BigraphonTuple& ws) {
  if (ws.empty()) return;
  const StepBigraphon& first = ws.begin()->second;
  for (const auto& [c, w] : ws) {
    if (!same_weights(w.mu(), first.mu()) || !same_weights(w.nu(), first.nu())) {
      throw std::invalid_argument("bigraphon for color " + std::to_string(c) + " lives on different spaces");
    }
  }
}

double density(const Bigraph& g, const StepBigraphon& w) {
  return detail::contract(build_network(g, w, [&w](int) -> const StepBigraphon& { return w; }, true));
}

double flag_density(const Flag& f, const StepBigraphon& w, const std::map<VertexId, int>& assignment) {
  const Bigraph& g = f.graph;
  const std::set<VertexId> labeled(f.labels.begin(), f.labels.end());
  for (const auto& [id, idx] : assignment) {
    if (!labeled.count(id)) throw std::invalid_argument("assignment names unlabeled vertex " + id);
  }
  auto net = build_network(g, w, [&w](int) -> const StepBigraphon& { return w; }, false);
  for (const auto& id : f.labels) {
    auto it = assignment.find(id);
    if (it == assignment.end()) throw std::invalid_argument("assignment misses labeled vertex " + id);
    const Vertex v = g.index(id);
    const int limit = g.is_left(v) ? w.rows() : w.cols();
    if (it->second < 0 || it->second >= limit) {
      throw std::invalid_argument("assignment of " + id + " is out of range for its side");
    }
    std::vector<double> indicator(static_cast<std::size_t>(limit), 0.0);
    indicator[it->second] = 1.0;
    net.weight[v] = std::move(indicator);
  }
  // Unlabeled isolated vertices integrate to exactly 1.
  for (Vertex v = 0; v < g.v(); ++v) {
    if (g.degree(v) == 0 && !labeled.count(g.id(v))) {
      std::fill(net.weight[v].begin(), net.weight[v].end(), 0.0);
      net.weight[v][0] = 1.0;
    }
  }
  return detail::contract(net);
}

double colored_density(const ColoredBigraph& h, const BigraphonTuple& ws) {
  for (int c : h.color_set()) {
    if (!ws.count(c)) throw std::invalid_argument("no bigraphon for color " + std::to_string(c));
  }
  if (ws.empty()) return 1.0;
  validate_tuple(ws);
  const StepBigraphon& shape = ws.begin()->second;
  return detail::contract(build_network(
      h.graph(), shape, [&](int k) -> const StepBigraphon& { return ws.at(h.color(k)); }, true));
}

double weighted_colored_density(const ColoredBigraph& h, const std::vector<std::vector<double>>& f,
                                const std::vector<std::vector<double>>& gw, const BigraphonTuple& ws) {
  const Bigraph& g = h.graph();
  for (int c : h.color_set()) {
    if (!ws.count(c)) throw std::invalid_argument("no bigraphon for color " + std::to_string(c));
  }
  if (ws.empty()) throw std::invalid_argument("weighted density needs at least one bigraphon");
  validate_tuple(ws);
  const StepBigraphon& shape = ws.begin()->second;
  if (static_cast<int>(f.size()) != g.v1() || static_cast<int>(gw.size()) != g.v2()) {
    throw std::invalid_argument("need one weight function per vertex");
  }
  auto net = build_network(g, shape, [&](int k) -> const StepBigraphon& { return ws.at(h.color(k)); }, false);
  for (Vertex v = 0; v < g.v(); ++v) {
    const auto& fn = g.is_left(v) ? f[v] : gw[v - g.v1()];
    if (fn.size() != net.weight[v].size()) throw std::invalid_argument("weight function has the wrong length");
    for (std::size_t x = 0; x < fn.size(); ++x) {
      if (!(fn[x] >= 0.0) || !std::isfinite(fn[x])) throw std::invalid_argument("weight functions must be finite and nonnegative");
      net.weight[v][x] *= fn[x];
    }
  }
  return detail::contract(net);
}

double weighted_density(const Bigraph& g, const std::vector<std::vector<double>>& f,
                        const std::vector<std::vector<double>>& gw, const StepBigraphon& w) {
  return weighted_colored_density(ColoredBigraph(g, 1), f, gw, {{1, w}});
}

StepBigraphon sinkhorn_biregularize(const StepBigraphon& w, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!w.is_strictly_positive()) throw std::invalid_argument("Sinkhorn scaling needs strictly positive values");
  const double target = w.edge_density();
  const int m = w.rows();
  const int n = w.cols();
  std::vector<double> v = w.values();
  const auto& mu = w.mu();
  const auto& nu = w.nu();
  auto residual = [&] {
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += nu[j] * v[static_cast<std::size_t>(i) * n + j];
      worst = std::max(worst, std::abs(s - target));
    }
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = 0; i < m; ++i) s += mu[i] * v[static_cast<std::size_t>(i) * n + j];
      worst = std::max(worst, std::abs(s - target));
    }
    return worst;
  };
  for (int iter = 0; iter < max_iter; ++iter) {
    if (residual() < tol) return w.with_values(std::move(v));
    for (int i = 0; i < m; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += nu[j] * v[static_cast<std::size_t>(i) * n + j];
      for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] *= target / s;
    }
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = 0; i < m; ++i) s += mu[i] * v[static_cast<std::size_t>(i) * n + j];
      for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i) * n + j] *= target / s;
    }
  }
  if (residual() < tol) return w.with_values(std::move(v));
  throw ConvergenceError("Sinkhorn scaling did not converge in " + std::to_string(max_iter) + " sweeps");
}

StepBigraphon random_step_bigraphon(int rows, int cols, std::uint64_t seed, double floor) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("random bigraphon needs rows, cols >= 1");
  if (!(floor >= 0.0 && floor <= 1.0)) throw std::invalid_argument("floor must lie in [0, 1]");
  Rng rng(seed);
  std::vector<double> values(static_cast<std::size_t>(rows) * cols);
  for (double& x : values) x = floor + (1.0 - floor) * uniform01(rng);
  return StepBigraphon(uniform_weights(static_cast<std::size_t>(rows)), uniform_weights(static_cast<std::size_t>(cols)),
                       std::move(values));
}

double exponent_balance(const std::vector<std::pair<Bigraph, double>>& terms) {
  double s = 0.0;
  for (const auto& [g, r] : terms) s += r * g.e();
  return s;
}

}  // namespace sidlab
