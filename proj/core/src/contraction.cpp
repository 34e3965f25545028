#include "contraction.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace sidlab::detail {

namespace {

constexpr std::size_t kMaxTableEntries = 50'000'000;

struct Factor {
  std::vector<int> vars;  // sorted
  std::vector<double> data;  // last variable fastest
};

std::size_t table_size(const std::vector<int>& vars, const std::vector<int>& domain) {
  std::size_t size = 1;
  for (int v : vars) {
    size *= static_cast<std::size_t>(domain[v]);
    if (size > kMaxTableEntries) throw std::length_error("density contraction exceeds the table size limit");
  }
  return size;
}

}  // namespace

double contract(const Network& net) {
  const int n = static_cast<int>(net.domain.size());
  std::vector<Factor> factors;
  for (const auto& pf : net.factors) {
    Factor f;
    const std::size_t da = net.domain[pf.a];
    const std::size_t db = net.domain[pf.b];
    if (pf.a < pf.b) {
      f.vars = {pf.a, pf.b};
      f.data.assign(pf.values, pf.values + da * db);
    } else {
      f.vars = {pf.b, pf.a};
      f.data.resize(da * db);
      for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) f.data[j * da + i] = pf.values[i * db + j];
      }
    }
    factors.push_back(std::move(f));
  }

  double scalar = 1.0;
  std::vector<char> eliminated(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    // Pick the variable whose elimination creates the smallest scope.
    int best = -1;
    std::size_t best_scope = 0;
    for (int x = 0; x < n; ++x) {
      if (eliminated[x]) continue;
      std::vector<int> scope;
      for (const auto& f : factors) {
        if (std::binary_search(f.vars.begin(), f.vars.end(), x)) scope.insert(scope.end(), f.vars.begin(), f.vars.end());
      }
      std::sort(scope.begin(), scope.end());
      scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
      if (best == -1 || scope.size() < best_scope) {
        best = x;
        best_scope = scope.size();
      }
    }
    const int x = best;
    eliminated[x] = 1;

    std::vector<Factor> touching;
    std::vector<Factor> rest;
    for (auto& f : factors) {
      (std::binary_search(f.vars.begin(), f.vars.end(), x) ? touching : rest).push_back(std::move(f));
    }
    const auto& wx = net.weight[x];
    if (touching.empty()) {
      double s = 0.0;
      for (double w : wx) s += w;
      scalar *= s;
      factors = std::move(rest);
      continue;
    }
    std::vector<int> scope;
    for (const auto& f : touching) scope.insert(scope.end(), f.vars.begin(), f.vars.end());
    std::sort(scope.begin(), scope.end());
    scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
    const std::size_t full = table_size(scope, net.domain);
    const std::size_t xpos = static_cast<std::size_t>(std::find(scope.begin(), scope.end(), x) - scope.begin());

    // Strides of each touching factor with respect to the scope positions.
    std::vector<std::vector<std::size_t>> strides(touching.size(), std::vector<std::size_t>(scope.size(), 0));
    for (std::size_t k = 0; k < touching.size(); ++k) {
      std::size_t stride = 1;
      for (std::size_t p = touching[k].vars.size(); p-- > 0;) {
        const auto pos = static_cast<std::size_t>(
            std::find(scope.begin(), scope.end(), touching[k].vars[p]) - scope.begin());
        strides[k][pos] = stride;
        stride *= static_cast<std::size_t>(net.domain[touching[k].vars[p]]);
      }
    }
    Factor out;
    for (int v : scope) {
      if (v != x) out.vars.push_back(v);
    }
    std::vector<std::size_t> out_stride(scope.size(), 0);
    {
      std::size_t stride = 1;
      for (std::size_t p = scope.size(); p-- > 0;) {
        if (p == xpos) continue;
        out_stride[p] = stride;
        stride *= static_cast<std::size_t>(net.domain[scope[p]]);
      }
      out.data.assign(stride, 0.0);
    }

    std::vector<int> digit(scope.size(), 0);
    std::vector<std::size_t> index(touching.size(), 0);
    std::size_t out_index = 0;
    for (std::size_t it = 0; it < full; ++it) {
      double prod = wx[digit[xpos]];
      for (std::size_t k = 0; k < touching.size() && prod != 0.0; ++k) prod *= touching[k].data[index[k]];
      out.data[out_index] += prod;
      // Odometer increment, last position fastest.
      for (std::size_t p = scope.size(); p-- > 0;) {
        const int d = net.domain[scope[p]];
        if (++digit[p] < d) {
          for (std::size_t k = 0; k < touching.size(); ++k) index[k] += strides[k][p];
          out_index += out_stride[p];
          break;
        }
        digit[p] = 0;
        for (std::size_t k = 0; k < touching.size(); ++k) index[k] -= strides[k][p] * static_cast<std::size_t>(d - 1);
        out_index -= out_stride[p] * static_cast<std::size_t>(d - 1);
      }
    }
    rest.push_back(std::move(out));
    factors = std::move(rest);
  }
  for (const auto& f : factors) scalar *= f.data.empty() ? 1.0 : f.data[0];
  return scalar;
}

}  // namespace sidlab::detail
