#pragma once

#include "spintaut/taut.hpp"

namespace spintaut {

/// Degree-d Chern character of the Hodge bundle on M̄_{g,n} via
/// Grothendieck-Riemann-Roch (κ, ψ and one-edge boundary terms).
TautClass hodge_char(int g, int n, int d);

/// λ_j = c_j of the Hodge bundle, from ch_1..ch_j by Newton's identities.
/// Memoized per (g, n, j); zero for j > g.
const TautClass& lambda_class(int g, int n, int j);

/// Λ(t) = Σ λ_j t^j truncated at degree max_deg.
SeriesClass lambda_series(int g, int n, int max_deg);

/// L_g(t) = 2^{g-1} Λ(2t) Λ(-t) - 2^{2g-1} on M̄_{g,n}, truncated at max_deg.
SeriesClass L_series(int g, int n, int max_deg);

/// Coefficients of Λ(t)Λ(-t) - 1 up to the dimension.
SeriesClass mumford_defect(int g, int n);

}  // namespace spintaut
