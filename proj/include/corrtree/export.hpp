#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "corrtree/correlation.hpp"
#include "corrtree/dynamics.hpp"
#include "corrtree/matrix.hpp"
#include "corrtree/mst.hpp"
#include "corrtree/ultrametric.hpp"

namespace corrtree {

// Square labelled matrix: header row "" + labels, then one row per label.
// Values at full round-trip precision.
std::string matrix_csv(const std::vector<std::string>& labels, const Matrix& m);

// {"n":..,"strong":..,"weak":..,"negative":..} on one line.
std::string census_json(const CorrelationCensus& c);

// Undirected DOT graph: nodes in label order, then edges in construction
// order labelled with the weight to 4 decimals.
std::string export_dot(const SpanningTree& t);

// GraphML with a double-typed "weight" and an int "construction_order" on
// each edge. Weights are written at full precision.
std::string export_graphml(const SpanningTree& t);

// Newick with branch length (parent height - child height) / 2, so the path
// length between two leaves equals their cophenetic distance. Children are
// written in merge order (a, then b); the root carries ":0.0".
std::string export_newick(const Dendrogram& dg);

// window_index,start,end,survival_vs_previous (empty for the first window).
std::string survival_csv(const TreeSequence& seq);

}  // namespace corrtree
