#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sidlab/bigraph.hpp"

namespace sidlab {

/// Finite step bigraphon: probability vectors mu (rows) and nu (columns)
/// and a nonnegative value matrix stored row-major.
class StepBigraphon {
 public:
  StepBigraphon() = default;
  /// Throws std::invalid_argument if a weight is negative, a weight vector
  /// does not sum to 1 within 1e-12, or a value is negative or not finite.
  StepBigraphon(std::vector<double> mu, std::vector<double> nu, std::vector<double> values);
  StepBigraphon(std::vector<double> mu, std::vector<double> nu, const std::vector<std::vector<double>>& values);
  /// Uniform weights.
  static StepBigraphon uniform(const std::vector<std::vector<double>>& values);
  static StepBigraphon constant(int rows, int cols, double value);

  int rows() const { return static_cast<int>(mu_.size()); }
  int cols() const { return static_cast<int>(nu_.size()); }
  const std::vector<double>& mu() const { return mu_; }
  const std::vector<double>& nu() const { return nu_; }
  const std::vector<double>& values() const { return values_; }
  double operator()(int i, int j) const { return values_[static_cast<std::size_t>(i) * nu_.size() + j]; }
  std::vector<std::vector<double>> matrix() const;

  /// t(rho, W).
  double edge_density() const;
  /// x -> t(e_1, W)(x) and y -> t(e_2, W)(y).
  std::vector<double> row_marginal() const;
  std::vector<double> col_marginal() const;
  bool is_left_regular(double tol = 1e-10) const;
  bool is_right_regular(double tol = 1e-10) const;
  bool is_biregular(double tol = 1e-10) const { return is_left_regular(tol) && is_right_regular(tol); }
  bool is_strictly_positive() const;

  /// Same weights, new values.
  StepBigraphon with_values(std::vector<double> values) const;
  StepBigraphon scaled(double lambda) const;

  friend bool operator==(const StepBigraphon&, const StepBigraphon&) = default;

 private:
  std::vector<double> mu_;
  std::vector<double> nu_;
  std::vector<double> values_;
};

/// One bigraphon per color over common spaces.
using BigraphonTuple = std::map<int, StepBigraphon>;

/// Throws std::invalid_argument if the members do not share row and
/// column weights.
void validate_tuple(const BigraphonTuple& ws);

/// t(G, W) by variable elimination; isolated vertices contribute exactly 1.
double density(const Bigraph& g, const StepBigraphon& w);

/// t(F, W) at the given labeled-vertex assignment (id -> row or column).
/// Throws std::invalid_argument unless the assignment covers exactly the
/// labeled vertices with in-range indices.
double flag_density(const Flag& f, const StepBigraphon& w, const std::map<VertexId, int>& assignment);

/// t(H, W) with W_{c(e)} on edge e. Throws std::invalid_argument for a
/// color missing from `ws`.
double colored_density(const ColoredBigraph& h, const BigraphonTuple& ws);

/// t(G; f, g; W): f[v] is a function on rows for left vertex v, g[w] a
/// function on columns for right vertex w (indexed by side position).
double weighted_density(const Bigraph& g, const std::vector<std::vector<double>>& f,
                        const std::vector<std::vector<double>>& gw, const StepBigraphon& w);

/// Same, with a colored product.
double weighted_colored_density(const ColoredBigraph& h, const std::vector<std::vector<double>>& f,
                                const std::vector<std::vector<double>>& gw, const BigraphonTuple& ws);

/// Alternating row/column scaling, rows first, toward the current t(rho, W)
/// until both marginals are within `tol` of it in sup norm. Input that is
/// already within tolerance comes back unchanged. Throws
/// std::invalid_argument for a nonpositive entry and ConvergenceError after
/// max_iter sweeps.
StepBigraphon sinkhorn_biregularize(const StepBigraphon& w, double tol = 1e-10, int max_iter = 100000);

/// Uniform weights and values floor + (1 - floor) * u, u uniform in [0, 1)
/// from mt19937_64(seed), filled row by row.
StepBigraphon random_step_bigraphon(int rows, int cols, std::uint64_t seed, double floor = 1e-3);

/// Sum of r_i * e(G_i).
double exponent_balance(const std::vector<std::pair<Bigraph, double>>& terms);

}  // namespace sidlab
