#pragma once

#include <vector>

#include "spintaut/graph.hpp"

namespace spintaut {

/// All stable graphs of type (g, n) with legs 1..n, one per isomorphism
/// class, in canonical form, ordered by edge count then canonical code.
const std::vector<StableGraph>& stable_graphs(int g, int n);

/// Same, with arbitrary (distinct) leg labels on a single component `comp`.
std::vector<StableGraph> stable_graphs(int g, const std::vector<int>& labels, int comp = 0);

/// One connected piece per entry of `genera`, with the given leg labels.
/// The result is the product of the per-component families.
std::vector<StableGraph> stable_graphs_multi(const std::vector<int>& genera,
                                             const std::vector<std::vector<int>>& labels);

/// Trees whose vertices all have positive genus (trivial graph included).
std::vector<StableGraph> star_trees(int g, int n);

struct Backbone {
  StableGraph graph;
  int center;
};

/// Loop-free star graphs whose central vertex carries leg 1 (trivial included).
std::vector<Backbone> backbones(int g, int n);

/// Places the parts of a multi-component graph side by side.
StableGraph disjoint_union(const std::vector<StableGraph>& parts);

}  // namespace spintaut
