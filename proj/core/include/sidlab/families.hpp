#pragma once

#include <map>

#include "sidlab/bigraph.hpp"

namespace sidlab {

/// rho: left "1", right "2", one edge.
Bigraph edge_bigraph();

/// K_{1,d}: left "x", right "y1".."yd".
Bigraph star(int d);

/// K_{d,1}: left "x1".."xd", right "y".
Bigraph dual_star(int d);

/// C4: left {a, b}, right {c, d}, all four edges.
Bigraph cycle4();

/// k four-cycles glued along the edge (P, Q). Page i adds right Ai, left Bi
/// and the path P - Ai - Bi - Q.
Bigraph book(int k);

/// Left side "1".."v1"; for each (k, d_k) in `profile`, d_k right vertices
/// of degree k whose neighborhoods run through the k-subsets of [v1] in
/// lexicographic order, wrapping around. Right ids are "w1", "w2", ...
Bigraph graph_from_profile(int v1, const std::map<int, int>& profile);

}  // namespace sidlab
