#pragma once

#include <cstdint>
#include <vector>

#include "spintaut/graph.hpp"

namespace spintaut {

/// Extra labels that isomorphisms must preserve. Either vector may be empty,
/// meaning "all zero".
struct Coloring {
  std::vector<std::vector<long>> vertex;  // per vertex
  std::vector<long> half_edge;            // per half-edge
};

struct CanonicalForm {
  StableGraph graph;               // canonical representative
  std::vector<long> code;          // complete invariant, colors included
  std::vector<int> vertex_map;     // input vertex -> canonical vertex
  std::vector<int> half_edge_map;  // input half-edge -> canonical half-edge
  std::uint64_t aut_order = 1;
};

/// Canonical relabelling by cell refinement and exhaustive search within cells.
///
/// In the canonical graph the legs come first (sorted by label), followed by
/// the edges as consecutive half-edge pairs.
CanonicalForm canonicalize(const StableGraph& g, const Coloring& colors = {});

/// All color-preserving automorphisms as half-edge permutations (image of h
/// at index h). The identity is always the first entry.
std::vector<std::vector<int>> automorphisms(const StableGraph& g, const Coloring& colors = {});

}  // namespace spintaut
