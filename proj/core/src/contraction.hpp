#pragma once

#include <vector>

namespace sidlab::detail {

// Sum over all assignments of prod_v weight[v][x_v] * prod_e matrix_e(x_a, x_b).
struct PairFactor {
  int a;                 // row variable
  int b;                 // column variable
  const double* values;  // domain[a] x domain[b], row-major
};

struct Network {
  std::vector<int> domain;
  std::vector<std::vector<double>> weight;
  std::vector<PairFactor> factors;
};

// Variable elimination along a greedy minimum-degree order (ties: smaller
// variable first). Throws std::length_error if an intermediate table would
// exceed the size cap.
double contract(const Network& net);

}  // namespace sidlab::detail
