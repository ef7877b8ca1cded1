#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spintaut {

/// Raised when a graph, twist or signature violates one of its invariants.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Dual graph of a (possibly disconnected, component-labelled) stable curve.
///
/// Half-edges are indexed 0..H-1. A half-edge is a leg when partner[h] == -1,
/// in which case leg_label[h] carries its marking label; otherwise partner[h]
/// is the other half of the edge and leg_label[h] == 0.
struct StableGraph {
  std::vector<int> genus;      // per vertex
  std::vector<int> component;  // per vertex, 0 for connected ambients
  std::vector<int> vertex_of;  // per half-edge
  std::vector<int> partner;    // per half-edge
  std::vector<int> leg_label;  // per half-edge

  int num_vertices() const { return static_cast<int>(genus.size()); }
  int num_half_edges() const { return static_cast<int>(vertex_of.size()); }
  int num_edges() const;
  int num_legs() const;
  int num_components() const;
  /// First Betti number, summed over connected components of the graph.
  int h1() const;
  int total_genus() const;
  int valence(int v) const;
  bool is_leg(int h) const { return partner[h] < 0; }

  /// Edges as (h, partner(h)) with h < partner(h), ordered by h.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> half_edges_at(int v) const;
  /// Half-edge carrying the given leg label, or -1.
  int leg_half_edge(int label) const;
  std::vector<int> leg_labels() const;  // sorted

  int add_vertex(int g, int comp = 0);
  int add_leg(int v, int label);
  std::pair<int, int> add_edge(int v, int w);

  /// Checks stability, pairing and connectivity per component; throws ValidationError.
  void validate() const;

  static StableGraph trivial(int g, int n);

  auto operator<=>(const StableGraph&) const = default;
  bool operator==(const StableGraph&) const = default;
};

/// Result of contracting a set of edges.
struct Contraction {
  StableGraph graph;
  std::vector<int> half_edge_map;  // old half-edge -> new half-edge, -1 if contracted
  std::vector<int> vertex_map;     // old vertex -> new vertex
};

/// Contracts the edges whose index in g.edges() is set in `mask`.
Contraction contract(const StableGraph& g, std::uint64_t mask);

/// Connected-component count of the vertex graph (ignoring component labels).
int connected_pieces(const StableGraph& g);

}  // namespace spintaut
