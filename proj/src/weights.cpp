#include "entroscope/weights.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "entroscope/state_space.hpp"

namespace entroscope {

namespace {
constexpr int kHypergraphVertexCap = 16;
constexpr int kGraphVertexCap = 12;

// union-find on vertices
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  bool connected() {
    for (size_t i = 1; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) != find(0)) return false;
    return true;
  }
};
}  // namespace

std::uint64_t subset_mask(std::span<const int> vertices) {
  std::uint64_t m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= 64) throw std::domain_error("subset_mask: vertex out of range");
    m |= (1ull << v);
  }
  return m;
}

std::vector<int> subset_vertices(std::uint64_t mask) {
  std::vector<int> v;
  while (mask) {
    int b = std::countr_zero(mask);
    v.push_back(b);
    mask &= mask - 1;
  }
  return v;
}

WeightedGraph make_graph(int n, const std::vector<std::tuple<int, int, double>>& edges) {
  if (n < 1) throw std::invalid_argument("make_graph: n must be positive");
  if (n > kGraphVertexCap) throw std::length_error("make_graph: exceeds cap n <= 12");
  WeightedGraph g;
  g.n = n;
  g.weights = Eigen::MatrixXd::Zero(n, n);
  for (auto [x, y, w] : edges) {
    if (x < 0 || x >= n || y < 0 || y >= n || x == y)
      throw std::domain_error("make_graph: bad edge endpoints");
    if (w < 0) throw std::domain_error("make_graph: negative weight");
    g.weights(x, y) += w;  // duplicates are summed
    g.weights(y, x) += w;
  }
  validate_graph(g);
  return g;
}

void validate_graph(const WeightedGraph& g) {
  if (g.weights.rows() != g.n || g.weights.cols() != g.n)
    throw std::invalid_argument("graph: weight matrix shape mismatch");
  if (!g.weights.isApprox(g.weights.transpose()))
    throw std::invalid_argument("graph: weights not symmetric");
  if (g.weights.diagonal().cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("graph: nonzero diagonal");
  if (g.weights.minCoeff() < 0.0) throw std::invalid_argument("graph: negative weight");
  if (g.weights.maxCoeff() <= 0.0) throw std::invalid_argument("graph: no positive edge");
}

void validate_hypergraph(const HypergraphWeights& h) {
  if (h.n < 1 || h.n > kHypergraphVertexCap)
    throw std::length_error("hypergraph: exceeds cap n <= 16");
  if (h.blocks.empty()) throw std::invalid_argument("hypergraph: no blocks");
  for (const auto& [mask, w] : h.blocks) {
    if (std::popcount(mask) < 2) throw std::domain_error("hypergraph: block size < 2");
    if (mask >> h.n) throw std::domain_error("hypergraph: vertex out of range");
    if (w <= 0) throw std::domain_error("hypergraph: nonpositive block weight");
  }
  if (!hypergraph_connected(h))
    throw std::invalid_argument("hypergraph: blocks do not connect all vertices");
}

bool graph_connected(const WeightedGraph& g) {
  Dsu d(g.n);
  for (int x = 0; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y)
      if (g.weights(x, y) > 0) d.unite(x, y);
  return d.connected();
}

bool hypergraph_connected(const HypergraphWeights& h) {
  Dsu d(h.n);
  for (const auto& [mask, w] : h.blocks) {
    std::vector<int> vs = subset_vertices(mask);
    for (size_t i = 1; i < vs.size(); ++i) d.unite(vs[0], vs[i]);
  }
  return d.connected();
}

bool is_leaf(const WeightedGraph& g, int x) {
  int deg = 0;
  for (int y = 0; y < g.n; ++y)
    if (g.weights(x, y) > 0) ++deg;
  return deg == 1;
}

HypergraphWeights mean_field_expand(const MeanFieldWeights& mf) {
  if (mf.n < 2 || static_cast<int>(mf.w.size()) != mf.n + 1)
    throw std::invalid_argument("mean_field_expand: w must have size n+1");
  HypergraphWeights h;
  h.n = mf.n;
  // enumerate all subsets of each size l with w_l > 0
  for (std::uint64_t mask = 1; mask < (1ull << mf.n); ++mask) {
    int l = std::popcount(mask);
    if (l >= 2 && mf.w[l] > 0) h.blocks[mask] = mf.w[l];
  }
  validate_hypergraph(h);
  return h;
}

WeightedGraph graph_from_hypergraph(const HypergraphWeights& h) {
  WeightedGraph g;
  g.n = h.n;
  g.weights = Eigen::MatrixXd::Zero(h.n, h.n);
  for (const auto& [mask, w] : h.blocks) {
    std::vector<int> vs = subset_vertices(mask);
    double share = w / static_cast<double>(vs.size());
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) {
        g.weights(vs[i], vs[j]) += share;
        g.weights(vs[j], vs[i]) += share;
      }
  }
  return g;
}

HypergraphWeights hypergraph_from_graph(const WeightedGraph& g) {
  HypergraphWeights h;
  h.n = g.n;
  for (int x = 0; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y)
      if (g.weights(x, y) > 0) {
        int vs[2] = {x, y};
        h.blocks[subset_mask(vs)] = 2.0 * g.weights(x, y);
      }
  return h;
}

WeightedGraph complete_graph(int n, double c) {
  WeightedGraph g;
  g.n = n;
  g.weights = Eigen::MatrixXd::Constant(n, n, c);
  g.weights.diagonal().setZero();
  return g;
}

WeightedGraph star_graph(int n, int center) {
  WeightedGraph g;
  g.n = n;
  g.weights = Eigen::MatrixXd::Zero(n, n);
  for (int y = 0; y < n; ++y)
    if (y != center) {
      g.weights(center, y) = 1.0;
      g.weights(y, center) = 1.0;
    }
  return g;
}

WeightedGraph path_graph(int n) {
  WeightedGraph g;
  g.n = n;
  g.weights = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x + 1 < n; ++x) {
    g.weights(x, x + 1) = 1.0;
    g.weights(x + 1, x) = 1.0;
  }
  return g;
}

WeightedGraph cycle_graph(int n) {
  WeightedGraph g = path_graph(n);
  g.weights(0, n - 1) += 1.0;
  g.weights(n - 1, 0) += 1.0;
  return g;
}

WeightedGraph box_graph(const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) n *= d;
  WeightedGraph g;
  g.n = n;
  g.weights = Eigen::MatrixXd::Zero(n, n);
  // lattice index: mixed radix over dims
  auto coords = [&](int v) {
    std::vector<int> c(dims.size());
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
      c[i] = v % dims[i];
      v /= dims[i];
    }
    return c;
  };
  auto flat = [&](const std::vector<int>& c) {
    int v = 0;
    for (size_t i = 0; i < dims.size(); ++i) v = v * dims[i] + c[i];
    return v;
  };
  for (int v = 0; v < n; ++v) {
    std::vector<int> c = coords(v);
    for (size_t i = 0; i < dims.size(); ++i)
      if (c[i] + 1 < dims[i]) {
        std::vector<int> c2 = c;
        ++c2[i];
        int u = flat(c2);
        g.weights(v, u) = 1.0;
        g.weights(u, v) = 1.0;
      }
  }
  return g;
}

MeanFieldWeights mean_field_single(int n, int ell, double w) {
  if (ell < 2 || ell > n) throw std::domain_error("mean_field_single: need 2 <= ell <= n");
  MeanFieldWeights mf;
  mf.n = n;
  mf.w.assign(n + 1, 0.0);
  mf.w[ell] = w;
  return mf;
}

}  // namespace entroscope
