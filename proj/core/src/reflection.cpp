#include "sidlab/reflection.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace sidlab {

namespace {

constexpr int kMaxCosetN = 7;

std::string subset_id(const std::vector<int>& subset, int index) {
  std::string s = "{";
  for (std::size_t j = 0; j < subset.size(); ++j) s += (j ? "," : "") + std::to_string(subset[j]);
  return s + "}#" + std::to_string(index);
}

// All k-subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

void check_k(int n, int k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("uniformity " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
}

// Parses "{u1,...,uk}#i".
std::optional<std::pair<std::vector<int>, int>> parse_subset_id(const std::string& id) {
  const auto hash = id.rfind('#');
  if (id.size() < 4 || id.front() != '{' || hash == std::string::npos || hash < 2 || id[hash - 1] != '}') {
    return std::nullopt;
  }
  std::vector<int> subset;
  std::size_t pos = 1;
  while (pos < hash - 1) {
    std::size_t end = pos;
    while (end < hash - 1 && std::isdigit(static_cast<unsigned char>(id[end]))) ++end;
    if (end == pos) return std::nullopt;
    subset.push_back(std::stoi(id.substr(pos, end - pos)));
    pos = end;
    if (pos < hash - 1) {
      if (id[pos] != ',') return std::nullopt;
      ++pos;
    }
  }
  const std::string idx = id.substr(hash + 1);
  if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  return std::make_pair(subset, std::stoi(idx));
}

}  // namespace

TypeAReflectionSystem::TypeAReflectionSystem(int n) : n_(n) { check_n(n); }

std::vector<std::pair<int, int>> TypeAReflectionSystem::reflections() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a) {
    for (int b = a + 1; b <= n_; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::pair<int, int>> TypeAReflectionSystem::simple_reflections() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < n_; ++i) out.emplace_back(i, i + 1);
  return out;
}

std::vector<std::pair<int, int>> TypeAReflectionSystem::parabolic_generators(int k) const {
  check_k(n_, k);
  auto gens = simple_reflections();
  std::erase(gens, std::make_pair(k, k + 1));
  return gens;
}

std::vector<std::vector<Permutation>> TypeAReflectionSystem::parabolic_cosets(int k) const {
  if (n_ > kMaxCosetN) throw std::length_error("coset enumeration is limited to n <= 7");
  const auto gens = parabolic_generators(k);
  Permutation sigma(static_cast<std::size_t>(n_));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::set<Permutation> assigned;
  std::vector<std::vector<Permutation>> cosets;
  do {
    if (assigned.count(sigma)) continue;
    // Right multiplication by a generator t: (sigma t)(x) = sigma(t(x)),
    // i.e. swap two positions of the one-line notation.
    std::set<Permutation> coset{sigma};
    std::deque<Permutation> queue{sigma};
    while (!queue.empty()) {
      Permutation p = queue.front();
      queue.pop_front();
      for (const auto& [a, b] : gens) {
        Permutation q = p;
        std::swap(q[a - 1], q[b - 1]);
        if (coset.insert(q).second) queue.push_back(q);
      }
    }
    assigned.insert(coset.begin(), coset.end());
    cosets.emplace_back(coset.begin(), coset.end());
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return cosets;
}

bool TypeAReflectionSystem::coset_subset_correspondence(int k) const {
  std::set<std::vector<int>> images;
  for (const auto& coset : parabolic_cosets(k)) {
    std::set<std::vector<int>> here;
    for (const auto& p : coset) {
      std::vector<int> image(p.begin(), p.begin() + k);
      for (int& x : image) ++x;
      std::sort(image.begin(), image.end());
      here.insert(image);
    }
    if (here.size() != 1 || !images.insert(*here.begin()).second) return false;
  }
  return images.size() == subsets(n_, k).size();
}

IncidenceBigraph build_incidence(int n, const std::vector<int>& ks) {
  check_n(n);
  std::vector<VertexId> left;
  for (int v = 1; v <= n; ++v) left.push_back(std::to_string(v));
  std::vector<VertexId> right;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<VertexId, int> color_of_right;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    check_k(n, ks[i]);
    const int index = static_cast<int>(i) + 1;
    for (const auto& u : subsets(n, ks[i])) {
      right.push_back(subset_id(u, index));
      color_of_right[right.back()] = index;
      for (int v : u) edges.emplace_back(std::to_string(v), right.back());
    }
  }
  Bigraph g(left, right, edges);
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(g.e()));
  for (const auto& [l, r] : g.edges()) colors.push_back(color_of_right.at(g.id(r)));
  return {n, ks, ColoredBigraph(std::move(g), std::move(colors))};
}

Bigraph incidence_component(int n, int k, int index) {
  check_n(n);
  check_k(n, k);
  if (index < 1) throw std::invalid_argument("uniformity index must be >= 1");
  std::vector<VertexId> left;
  for (int v = 1; v <= n; ++v) left.push_back(std::to_string(v));
  std::vector<VertexId> right;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& u : subsets(n, k)) {
    right.push_back(subset_id(u, index));
    for (int v : u) edges.emplace_back(std::to_string(v), right.back());
  }
  return Bigraph(left, right, edges);
}

Bigraph coset_intersection_bigraph(int n, const std::vector<int>& ks) {
  check_n(n);
  const TypeAReflectionSystem sys(n);
  // The stabilizer of 1 is generated by (2,3), ..., (n-1,n): the parabolic
  // subgroup for k = 1.
  const auto points = sys.parabolic_cosets(1);
  std::vector<VertexId> left;
  for (std::size_t p = 0; p < points.size(); ++p) left.push_back("p" + std::to_string(p));
  std::vector<VertexId> right;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    check_k(n, ks[i]);
    const auto blocks = sys.parabolic_cosets(ks[i]);
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      right.push_back("c" + std::to_string(i) + "_" + std::to_string(c));
      for (std::size_t p = 0; p < points.size(); ++p) {
        std::vector<Permutation> common;
        std::set_intersection(points[p].begin(), points[p].end(), blocks[c].begin(), blocks[c].end(),
                              std::back_inserter(common));
        if (!common.empty()) edges.emplace_back(left[p], right.back());
      }
    }
  }
  return Bigraph(left, right, edges);
}

int reflection_side(const std::vector<int>& subset, int a, int b) {
  const bool has_a = std::find(subset.begin(), subset.end(), a) != subset.end();
  const bool has_b = std::find(subset.begin(), subset.end(), b) != subset.end();
  return static_cast<int>(has_a) - static_cast<int>(has_b);
}

Fold reflection_fold(const IncidenceBigraph& ib, int a, int b) {
  if (!(1 <= a && a < b && b <= ib.n)) {
    throw std::invalid_argument("reflection fold needs 1 <= a < b <= n (got a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ")");
  }
  const Bigraph& g = ib.graph.graph();
  auto swap_point = [a, b](int v) { return v == a ? b : v == b ? a : v; };
  Fold fold{VertexMap(static_cast<std::size_t>(g.v())), {}};
  for (Vertex x = 0; x < g.v1(); ++x) {
    const int v = std::stoi(g.id(x));
    fold.phi[x] = g.index(std::to_string(swap_point(v)));
    if (v == a) fold.left.push_back(x);
  }
  for (Vertex x = g.v1(); x < g.v(); ++x) {
    auto parsed = parse_subset_id(g.id(x));
    if (!parsed) throw std::invalid_argument("not an incidence bigraph vertex: " + g.id(x));
    auto& [u, index] = *parsed;
    if (reflection_side(u, a, b) > 0) fold.left.push_back(x);
    for (int& v : u) v = swap_point(v);
    std::sort(u.begin(), u.end());
    fold.phi[x] = g.index(subset_id(u, index));
  }
  std::sort(fold.left.begin(), fold.left.end());
  if (auto why = fold_violation(g, fold)) {
    throw std::logic_error("transposition does not induce a fold: " + *why);
  }
  return fold;
}

std::vector<Fold> reflection_fold_pool(const IncidenceBigraph& ib) {
  std::vector<Fold> pool;
  for (int a = 1; a <= ib.n; ++a) {
    for (int b = a + 1; b <= ib.n; ++b) pool.push_back(reflection_fold(ib, a, b));
  }
  return pool;
}

std::optional<IncidenceBigraph> recognize_incidence(const Bigraph& g) {
  const int n = g.v1();
  if (n < 1) return std::nullopt;
  for (int v = 1; v <= n; ++v) {
    if (g.left_ids()[v - 1] != std::to_string(v)) return std::nullopt;
  }
  std::map<int, int> size_of_index;
  for (const auto& id : g.right_ids()) {
    auto parsed = parse_subset_id(id);
    if (!parsed) return std::nullopt;
    const auto& [u, index] = *parsed;
    if (index < 1) return std::nullopt;
    auto [it, inserted] = size_of_index.emplace(index, static_cast<int>(u.size()));
    if (!inserted && it->second != static_cast<int>(u.size())) return std::nullopt;
  }
  std::vector<int> ks;
  int expected_index = 1;
  for (const auto& [index, k] : size_of_index) {
    if (index != expected_index++) return std::nullopt;
    if (k < 1 || k > n) return std::nullopt;
    ks.push_back(k);
  }
  IncidenceBigraph ib = build_incidence(n, ks);
  if (!(ib.graph.graph() == g)) return std::nullopt;
  return ib;
}

}  // namespace sidlab
