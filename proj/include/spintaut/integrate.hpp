#pragma once

#include <string>
#include <vector>

#include "spintaut/taut.hpp"

namespace spintaut {

/// ⟨τ_{a_1} ⋯ τ_{a_n}⟩_g by string, dilaton and DVV. Zero when unstable or
/// when the degree does not match.
Rational psi_integral(int g, std::vector<int> exponents);

/// The same number from one DVV step on the largest exponent, skipping the
/// string and dilaton shortcuts at the top level.
Rational psi_integral_dvv(int g, std::vector<int> exponents);

/// ∫ Π ψ_i^{a_i} Π κ_{b_j} over M̄_{g,n}, n = psi.size().
Rational vertex_integral(int g, std::vector<int> psi, std::vector<int> kappa);

/// Top-degree evaluation; lower-degree terms contribute zero.
Rational evaluate(const TautClass& x);

/// ∫ a·b without materialising the product; requires deg a + deg b = dim.
Rational pairing(const TautClass& a, const TautClass& b);

/// Every decorated stratum of the given degree, in canonical order.
const std::vector<Term>& generators(const Ambient& a, int degree);

/// Pairings of a homogeneous class against the complementary generators.
std::vector<Rational> pairing_signature(const TautClass& x);
std::vector<Rational> pairing_signature(const TautClass& x, int degree);

/// Equality against the tautological pairing (see README).
bool classes_equal(const TautClass& a, const TautClass& b);

/// Rank of the pairing matrix between degree d and its complement.
int pairing_rank(const Ambient& a, int degree);

/// Counts evaluations that silently returned zero (degree mismatch, unstable).
long degenerate_evaluations();

/// Persistent memo of vertex integrals.
namespace integral_cache {
inline constexpr const char* kVersion = "spintaut-integrals v1";
/// Loads entries; returns false (and leaves the memo untouched) on a version
/// mismatch or when a spot-check disagrees with recomputation.
bool load(const std::string& path);
void save(const std::string& path);
std::size_t size();
void clear();
}  // namespace integral_cache

}  // namespace spintaut
