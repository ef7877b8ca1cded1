#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spintaut/graph.hpp"
#include "spintaut/rational.hpp"

namespace spintaut {

/// Odd weightings modulo 2r compatible with a (leg i carries a[i-1]).
///
/// Each entry lists, per edge of g.edges(), the product w(h)w(h') of the
/// representatives in [0, 2r). Non-tree edges of a spanning forest are free;
/// tree edges are forced and must come out odd.
std::vector<std::vector<long>> odd_weightings(const StableGraph& g, const std::vector<int>& a, int k,
                                              int r);

/// Σ_w Π_e (w(h_e) w(h'_e))^{d_e} over odd weightings modulo 2r.
Integer weighting_moment_sum(const StableGraph& g, const std::vector<int>& a, int k, int r,
                             const std::vector<int>& edge_exponents);

/// A twisted graph: integer twist per half-edge (legs included).
struct TwistedGraph {
  StableGraph graph;
  std::vector<int> twist;
  int center = 0;
  std::uint64_t aut = 1;

  /// Twists at the half-edges of v, by increasing half-edge index.
  std::vector<int> vertex_twist(int v) const;
};

/// k-simple star graphs with odd twist compatible with a, trivial graph first.
/// Throws ValidationError unless k and all a_i are odd and Σa = k(2g-2+n).
std::vector<TwistedGraph> simple_stars_odd(int g, const std::vector<int>& a, int k);

/// Two-level twisted graph; level[v] is 0 or -1.
struct BiColoredGraph {
  StableGraph graph;
  std::vector<int> twist;
  std::vector<int> level;
  Integer multiplicity = 1;
  std::uint64_t aut = 1;

  bool leg_below(int label) const;
};

/// Bi-colored graphs on the ambient of `genera`/`labels` (one connected piece
/// per entry) whose legs carry the twists in `a` (label -> value). With `odd`
/// only odd twists are produced.
std::vector<BiColoredGraph> bicolored(const std::vector<int>& genera,
                                      const std::vector<std::vector<int>>& labels,
                                      const std::map<int, int>& a, bool odd = true);

/// Bic(i): members whose leg `label` sits at level -1.
std::vector<BiColoredGraph> bicolored_leg_below(const std::vector<BiColoredGraph>& all, int label);

/// Bic*: members whose graph, after forgetting the legs in `forgotten` and
/// stabilising, still has an edge.
std::vector<BiColoredGraph> bicolored_nontrivial_after(const std::vector<BiColoredGraph>& all,
                                                       const std::vector<int>& forgotten);

/// Stabilisation after deleting the given legs (unstable vertices contracted).
StableGraph forget_and_stabilize(const StableGraph& g, const std::vector<int>& labels);

}  // namespace spintaut
