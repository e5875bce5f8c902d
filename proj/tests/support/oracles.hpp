#pragma once

// Test-only generators and independent checks. Nothing here calls into the
// code paths it is used to verify.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "corrtree/matrix.hpp"
#include "corrtree/metric.hpp"
#include "corrtree/mst.hpp"
#include "corrtree/transform.hpp"

namespace oracle {

std::vector<std::string> labels(std::size_t n, const std::string& prefix = "A");

// Panel of i.i.d. normals mixed through a random loading matrix, so columns
// are correlated to varying degrees.
corrtree::ReturnsMatrix random_returns(std::mt19937_64& rng, std::size_t n, std::size_t T);

// Symmetric matrix with uniform off-diagonal entries in (lo, hi), zero
// diagonal. Not necessarily a metric.
corrtree::DistanceMatrix random_distances(std::mt19937_64& rng, std::size_t n, double lo = 0.1,
                                          double hi = 2.0);

// Pearson from raw moments in long double over jointly present rows.
double raw_moment_pearson(const std::vector<double>& x, const std::vector<double>& y);

// Strong triangle inequality over all triples.
bool is_ultrametric(const corrtree::Matrix& u, double tol = 0.0);

// Heaviest edge on the path between each pair, by explicit DFS path search
// on an edge list.
corrtree::Matrix path_max(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          const std::vector<double>& weights);

// True when the members induce a connected subgraph of the tree.
bool connected_subtree(const corrtree::SpanningTree& t, const std::set<std::string>& members);

// Minimal Newick reader returning, for every internal node, the set of
// leaf labels beneath it plus the leaf-to-leaf path lengths.
struct NewickTree {
  std::vector<std::string> leaves;
  std::vector<std::set<std::string>> clades;  // internal nodes, post-order
  std::vector<std::vector<double>> leaf_distance;
};
NewickTree parse_newick(const std::string& text);

// (source, target, weight) triples from GraphML edge elements.
struct GraphmlEdge {
  std::string source, target;
  double weight;
};
std::vector<GraphmlEdge> parse_graphml_edges(const std::string& text);

}  // namespace oracle
