#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <vector>

namespace entroscope {

/// Symmetric nonnegative edge weights c_xy with zero diagonal.
struct WeightedGraph {
  int n = 0;
  Eigen::MatrixXd weights;  // n x n, symmetric, zero diagonal
};

/// Positive block weights alpha_A indexed by vertex subsets |A| >= 2,
/// keyed by the canonical 64-bit set encoding (bit v set <=> v in A).
struct HypergraphWeights {
  int n = 0;
  std::map<std::uint64_t, double> blocks;
};

/// Mean-field weight profile: alpha_A = w[|A|]. w is indexed by subset size,
/// entries 0 and 1 unused.
struct MeanFieldWeights {
  int n = 0;
  std::vector<double> w;  // size n+1, w[l] for l = 2..n
};

std::uint64_t subset_mask(std::span<const int> vertices);
std::vector<int> subset_vertices(std::uint64_t mask);

WeightedGraph make_graph(int n, const std::vector<std::tuple<int, int, double>>& edges);
void validate_graph(const WeightedGraph& g);
void validate_hypergraph(const HypergraphWeights& h);

bool graph_connected(const WeightedGraph& g);
bool hypergraph_connected(const HypergraphWeights& h);
bool is_leaf(const WeightedGraph& g, int x);

HypergraphWeights mean_field_expand(const MeanFieldWeights& mf);

/// Projection of hypergraph weights to pair rates, c_xy = sum_{A: x,y in A} alpha_A / |A|.
WeightedGraph graph_from_hypergraph(const HypergraphWeights& h);

/// Pair-block hypergraph equivalent to a weighted graph: alpha_{xy} = 2 c_xy.
HypergraphWeights hypergraph_from_graph(const WeightedGraph& g);

// stock graphs used throughout
WeightedGraph complete_graph(int n, double c = 1.0);
WeightedGraph star_graph(int n, int center = 0);  // c_xy = 1 on spokes
WeightedGraph path_graph(int n);
WeightedGraph cycle_graph(int n);
WeightedGraph box_graph(const std::vector<int>& dims);  // rectangular grid, unit weights

MeanFieldWeights mean_field_single(int n, int ell, double w = 1.0);

}  // namespace entroscope
