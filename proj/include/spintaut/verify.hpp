#pragma once

#include <string>
#include <vector>

namespace spintaut {

/// Outcome of one verification suite; `detail` is a one-line summary.
struct CheckResult {
  bool ok = true;
  std::string detail;
};

/// d(0,3) = d(0,1) = 1, periodicity for g,m ≤ 8, differences for g,m ≤ 6,
/// and agreement with the recurrence.
CheckResult check_dconst();

/// L_g(0) = d(g,0) = 2^{g-1} - 2^{2g-1} for g ≤ 6.
CheckResult check_L_constant();

/// ⟨τ0³⟩ = 1, ⟨τ1⟩₁ = 1/24 and the string and dilaton equations on random
/// monomials (g ≤ 4, n ≤ 6), the left side evaluated by a DVV step.
CheckResult check_dvv(unsigned seed, int samples = 50);

/// Every coefficient of Λ(t)Λ(-t) - 1 has zero pairing signature.
CheckResult check_mumford(int g, int n);

CheckResult check_roundtrip(int g, int n);

/// For c ≤ g: fitted degree ≤ 2c, zero residual on the surplus points, and
/// two disjoint r-windows give the same constant term.
CheckResult check_polynomiality(int g, const std::vector<int>& a, int k);

/// classes_equal(dr_spin(a,k), stargraph_spin(a,k)).
CheckResult check_star_identity(int g, const std::vector<int>& a, int k = 1);

/// strata_class_spin(1, 1^n) is -1 times the fundamental class and equals
/// the constant term of segre_spin(1, n).
CheckResult check_genus1_strata(int n);

}  // namespace spintaut
