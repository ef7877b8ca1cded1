#pragma once

#include <string>
#include <vector>

#include "spintaut/taut.hpp"

namespace spintaut {

/// d(g,m) = (-1)^{m+1} 2^{2g-1} + 2^{g-1}.
Rational d_constant(int g, int m);

/// The same constants from d(0,0)=0, d(0,1)=1, d(g,m+2)=d(g,m) and
/// d(g+1,m) = 3d(g,m) - d(g,m+1).
Rational d_constant_recursive(int g, int m);

/// s_g^±(t) = Σ_{Tree*} (-t)^{|E|}/|Aut| ζ_*(⊗ L_{g(v)}(t)) on M̄_{g,n}.
SeriesClass segre_spin(int g, int n, int max_deg);

/// Feeds segre_spin back into the tree sum and compares with L_g(t) degree
/// by degree. On failure `diagnostic` names the first failing degree.
bool segre_roundtrip_check(int g, int n, std::string* diagnostic = nullptr);

/// s_g^{1,±}(t) on M̄_{g,n} (double pole at leg 1), solved from
/// (1-tψ1)s¹ = (1+tψ1)s + Σ_BB (-t)^{|E|} 2^{2g(v0)}/|Aut| ζ_*([M̄] ⊗ s).
SeriesClass segre_spin_mero(int g, int n, int max_deg);

/// Σ_q t^q p_*(ξ^q [P SQ_g(3,1^{n-1})]^±) on M̄_{g,n}, obtained from the
/// series of (a1,1^{n-1}) with a1 = 1 (holomorphic) or a1 = -1 (pole).
SeriesClass unmarked_step(int g, int n, int a1, int max_deg);

/// [M̄_g(a)]^± for holomorphic odd a with Σa = 2g-2+n. Supported for g ≤ 2;
/// zero in genus 0.
TautClass strata_class_spin(int g, const std::vector<int>& a);

/// [M̄_g(a)]^± for any odd signature with k = 1: genus 0 gives the
/// fundamental class, genus 1 with two special points uses the torsion
/// formula, other meromorphic cases invert the star-graph identity.
TautClass stratum_class_spin(int g, const std::vector<int>& a, int k = 1);

/// H^±_g(a,k), summed over the odd k-simple star graphs. For a in (kN)^n the
/// holomorphic expression -a1ψ1[M̄(a)]^± + Σ_{leg 1 central, nontrivial} is used.
TautClass stargraph_spin(int g, const std::vector<int>& a, int k = 1);

/// The star sum restricted to nontrivial graphs (and, when `leg1_central`,
/// to those with leg 1 on the central vertex).
TautClass star_sum(int g, const std::vector<int>& a, int k, bool include_trivial, bool leg1_central);

}  // namespace spintaut
