#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spintaut/graph.hpp"
#include "spintaut/rational.hpp"

namespace spintaut {

/// A product of moduli spaces: one connected factor per entry, each with its
/// own genus and (globally distinct) leg labels.
struct Ambient {
  std::vector<int> genus;
  std::vector<std::vector<int>> labels;

  static Ambient connected(int g, int n);
  static Ambient of(const StableGraph& g);  // read off a graph's components
  int dimension() const;
  int num_components() const { return static_cast<int>(genus.size()); }
  int component_of(int label) const;  // -1 if absent
  std::vector<int> all_labels() const;
  void validate() const;

  auto operator<=>(const Ambient&) const = default;
  bool operator==(const Ambient&) const = default;
};

/// ψ exponents per half-edge and κ degrees (sorted, all positive) per vertex.
struct Decoration {
  std::vector<int> psi;
  std::vector<std::vector<int>> kappa;

  static Decoration empty(const StableGraph& g);
  int degree() const;
  int vertex_degree(const StableGraph& g, int v) const;
};

/// A decorated stratum ζ_{Γ*}(decoration); carries no automorphism factor.
struct Term {
  StableGraph graph;
  Decoration dec;

  int degree() const { return graph.num_edges() + dec.degree(); }
  /// True when some vertex carries more than its dimension.
  bool vanishes_by_dimension() const;
};

using TermKey = std::vector<long>;

/// Canonical representative of a term and its key.
std::pair<TermKey, Term> canonical_term(const Term& t);

inline int vertex_dimension(const StableGraph& g, int v) {
  return 3 * g.genus[v] - 3 + g.valence(v);
}

class TautClass {
 public:
  struct Entry {
    Term term;
    Rational coeff;
  };
  using Map = std::map<TermKey, Entry>;

  TautClass() = default;
  explicit TautClass(Ambient ambient) : ambient_(std::move(ambient)) {}

  static TautClass fundamental(const Ambient& a);
  static TautClass psi(const Ambient& a, int label, int exponent = 1);
  /// κ_m on a connected ambient (κ_0 is the scalar 2g-2+n).
  static TautClass kappa(const Ambient& a, int m);
  /// ζ_{Γ*}(1) with coefficient one (no automorphism factor).
  static TautClass stratum(const StableGraph& g);

  const Ambient& ambient() const { return ambient_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds coeff·term after canonicalisation; κ_0 factors become scalars and
  /// terms above a vertex dimension are dropped.
  void add(const Term& t, const Rational& coeff);
  void add_canonical(TermKey key, const Term& t, const Rational& coeff);

  TautClass& operator+=(const TautClass& o);
  TautClass& operator-=(const TautClass& o);
  TautClass& operator*=(const Rational& q);
  friend TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
  friend TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
  friend TautClass operator*(TautClass a, const Rational& q) { return a *= q; }
  friend TautClass operator*(const Rational& q, TautClass a) { return a *= q; }
  TautClass operator-() const { return *this * Rational(-1); }

  TautClass degree_part(int d) const;
  /// Degree if homogeneous and nonzero.
  std::optional<int> degree() const;
  int max_degree() const;  // -1 for zero

  bool operator==(const TautClass& o) const;

 private:
  Ambient ambient_;
  Map terms_;
};

/// Polynomial in t with TautClass coefficients, truncated at `coeffs.size()`.
struct SeriesClass {
  std::vector<TautClass> coeffs;

  SeriesClass() = default;
  SeriesClass(const Ambient& a, int max_degree);
  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Ambient& ambient() const { return coeffs.front().ambient(); }
  SeriesClass& operator+=(const SeriesClass& o);
  SeriesClass& operator*=(const Rational& q);
  /// Multiplies by t^s (dropping overflow).
  SeriesClass shifted(int s) const;
};

SeriesClass multiply(const SeriesClass& a, const SeriesClass& b);

/// Intersection product via generic common degenerations.
TautClass multiply(const TautClass& a, const TautClass& b);

/// ζ_{Γ*}(⊗_v X_v). The class X_v lives on M̄_{g(v), n(v)} whose leg i is
/// the i-th half-edge at v (by increasing index). No automorphism factor.
TautClass push_glue(const StableGraph& gamma, const std::vector<TautClass>& per_vertex);

/// Exterior product of classes on disjoint ambients.
TautClass tensor(const std::vector<TautClass>& factors);

/// Forgetful pushforward removing the leg `label`.
TautClass push_forget(const TautClass& x, int label);

/// Forgetful pullback adding a new leg `label` to component `comp`.
TautClass pull_forget(const TautClass& x, int label, int comp = 0);

/// Relabels legs (old label -> new label); labels not in the map are kept.
TautClass relabel(const TautClass& x, const std::map<int, int>& labels, const Ambient& target);

}  // namespace spintaut
