#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spintaut/canonical.hpp"
#include "spintaut/taut.hpp"

namespace spintaut {

/// All stable graphs of an ambient with lazily built contraction tables.
class GraphIndex {
 public:
  struct Contracted {
    int target;                      // graph id of Γ/C
    std::vector<int> half_edge_map;  // Γ half-edge -> target half-edge (-1 if contracted)
    std::vector<int> vertex_map;     // Γ vertex -> target vertex
  };

  explicit GraphIndex(const Ambient& a);

  const Ambient& ambient() const { return ambient_; }
  int size() const { return static_cast<int>(graphs_.size()); }
  const StableGraph& graph(int id) const { return graphs_[id]; }
  std::uint64_t aut_order(int id) const { return aut_[id]; }
  /// Per-vertex dimensions 3g(v)-3+n(v).
  const std::vector<int>& dims(int id) const { return dims_[id]; }
  /// Id of a graph already in canonical form; throws if unknown.
  int id_of(const std::vector<long>& code) const;
  int id_of_canonical(const StableGraph& g) const;
  const std::vector<Contracted>& contractions(int id) const;
  const std::vector<std::vector<int>>& automorphisms(int id) const;

 private:
  Ambient ambient_;
  std::vector<StableGraph> graphs_;
  std::vector<std::uint64_t> aut_;
  std::vector<std::vector<int>> dims_;
  std::map<std::vector<long>, int> ids_;
  mutable std::map<int, std::vector<Contracted>> contractions_;
  mutable std::map<int, std::vector<std::vector<int>>> automorphisms_;
};

const GraphIndex& graph_index(const Ambient& a);

/// One generic (A,B)-structure on Γ with chosen identifications.
struct Structure {
  int gamma;
  std::vector<int> a_half;    // A half-edge -> Γ half-edge
  std::vector<int> a_vertex;  // Γ vertex -> A vertex
  std::vector<int> b_half;
  std::vector<int> b_vertex;
  std::vector<std::pair<int, int>> excess;  // Γ edges lying on both sides
};

/// All generic (A,B)-structures (A, B given by graph id). Every entry carries
/// weight 1/|Aut Γ|.
const std::vector<Structure>& generic_structures(const GraphIndex& index, int a, int b);

/// A term rewritten on the bare canonical form of its graph.
struct BareTerm {
  int id;
  Decoration dec;
};
BareTerm to_bare(const GraphIndex& index, const Term& t);

/// Monomials of f_A^*α · f_B^*β · Π_excess(-ψ_h - ψ_h') on Γ, skipping any
/// monomial whose vertex degrees exceed `cap` (per vertex dimension) or, when
/// `exact` is set, differ from it. Calls sink(decoration, sign).
template <class Sink>
void expand_structure(const GraphIndex& index, const Structure& s, const Decoration& alpha,
                      const Decoration& beta, bool exact, Sink&& sink);

}  // namespace spintaut

#include "spintaut/product_impl.hpp"
