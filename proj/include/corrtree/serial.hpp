#pragma once

// Single-threaded reference versions of the parallel kernels. They follow the
// textbook formulation directly and are kept for tests and benchmarks.

#include "corrtree/correlation.hpp"
#include "corrtree/dynamics.hpp"
#include "corrtree/metric.hpp"
#include "corrtree/mst.hpp"
#include "corrtree/synthgen.hpp"
#include "corrtree/ultrametric.hpp"

namespace corrtree::serial {

// Per pair: collect jointly present rows, take means, then the centered
// covariance and variances with a single running sum each.
CorrelationMatrix pearson_matrix(const ReturnsMatrix& y,
                                 std::size_t min_overlap = kDefaultMinOverlap);

DistanceMatrix to_distance(const CorrelationMatrix& c);

// Path maximum by explicit walk of the unique tree path for every pair.
UltrametricMatrix subdominant_ultrametric(const SpanningTree& tree);

TreeSequence rolling_trees(const ReturnsMatrix& y, const WindowSpec& w,
                           std::size_t min_overlap = kDefaultMinOverlap);

ReturnsMatrix generate(const FactorModelSpec& spec);

}  // namespace corrtree::serial
