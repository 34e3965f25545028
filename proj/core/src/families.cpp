#include "sidlab/families.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sidlab {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Next k-subset of {0..n-1} in lexicographic order; false after the last.
bool next_subset(std::vector<int>& s, int n) {
  const int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

}  // namespace

Bigraph edge_bigraph() { return Bigraph({"1"}, {"2"}, {{"1", "2"}}); }

Bigraph star(int d) {
  if (d < 0) throw std::invalid_argument("star: d must be >= 0");
  std::vector<VertexId> right;
  EdgeList edges;
  for (int i = 1; i <= d; ++i) {
    right.push_back("y" + std::to_string(i));
    edges.emplace_back("x", right.back());
  }
  return Bigraph({"x"}, right, edges);
}

Bigraph dual_star(int d) {
  if (d < 0) throw std::invalid_argument("dual_star: d must be >= 0");
  std::vector<VertexId> left;
  EdgeList edges;
  for (int i = 1; i <= d; ++i) {
    left.push_back("x" + std::to_string(i));
    edges.emplace_back(left.back(), "y");
  }
  return Bigraph(left, {"y"}, edges);
}

Bigraph cycle4() {
  return Bigraph({"a", "b"}, {"c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

Bigraph book(int k) {
  if (k < 1) throw std::invalid_argument("book: k must be >= 1");
  std::vector<VertexId> left{"P"};
  std::vector<VertexId> right{"Q"};
  EdgeList edges{{"P", "Q"}};
  for (int i = 1; i <= k; ++i) {
    const std::string a = "A" + std::to_string(i);
    const std::string b = "B" + std::to_string(i);
    right.push_back(a);
    left.push_back(b);
    edges.emplace_back("P", a);
    edges.emplace_back(b, a);
    edges.emplace_back(b, "Q");
  }
  return Bigraph(left, right, edges);
}

Bigraph graph_from_profile(int v1, const std::map<int, int>& profile) {
  if (v1 < 1) throw std::invalid_argument("profile: v1 must be >= 1");
  std::vector<VertexId> left;
  for (int i = 1; i <= v1; ++i) left.push_back(std::to_string(i));
  std::vector<VertexId> right;
  EdgeList edges;
  for (const auto& [k, count] : profile) {
    if (k < 1 || k > v1) throw std::invalid_argument("profile: degree " + std::to_string(k) + " outside [1, v1]");
    if (count < 0) throw std::invalid_argument("profile: negative count");
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[i] = i;
    for (int c = 0; c < count; ++c) {
      right.push_back("w" + std::to_string(right.size() + 1));
      for (int x : subset) edges.emplace_back(left[x], right.back());
      if (!next_subset(subset, v1)) {
        for (int i = 0; i < k; ++i) subset[i] = i;
      }
    }
  }
  return Bigraph(left, right, edges);
}

}  // namespace sidlab
