#include "spintaut/hodge.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "spintaut/canonical.hpp"
#include "spintaut/enumerate.hpp"

namespace spintaut {

TautClass hodge_char(int g, int n, int d) {
  const Ambient amb = Ambient::connected(g, n);
  TautClass out(amb);
  if (d < 1 || d > amb.dimension() || g == 0) return out;
  const Rational coeff = bernoulli(d + 1) / Rational(factorial(d + 1));
  if (coeff == 0) return out;

  TautClass body = TautClass::kappa(amb, d);
  for (int i = 1; i <= n; ++i) body -= TautClass::psi(amb, i, d);
  for (const auto& gamma : stable_graphs(g, n)) {
    if (gamma.num_edges() != 1) continue;
    const Rational weight = Rational(1) / Rational(canonicalize(gamma).aut_order);
    auto [h, hp] = gamma.edges().front();
    for (int j = 0; j <= d - 1; ++j) {
      Term t{gamma, Decoration::empty(gamma)};
      t.dec.psi[h] = j;
      t.dec.psi[hp] = d - 1 - j;
      body.add(t, j % 2 == 0 ? weight : -weight);
    }
  }
  return body * coeff;
}

namespace {

std::mutex& hodge_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const TautClass& lambda_class(int g, int n, int j) {
  static std::map<std::tuple<int, int, int>, TautClass> memo;
  {
    std::lock_guard<std::mutex> lock(hodge_mutex());
    auto it = memo.find({g, n, j});
    if (it != memo.end()) return it->second;
  }
  const Ambient amb = Ambient::connected(g, n);
  TautClass value(amb);
  if (j == 0) {
    value = TautClass::fundamental(amb);
  } else if (j <= g && j <= amb.dimension()) {
    // j c_j = Σ_{i=1}^{j} (-1)^{i-1} c_{j-i} p_i,  p_i = i! ch_i
    for (int i = 1; i <= j; ++i) {
      TautClass p = hodge_char(g, n, i) * Rational(factorial(i));
      if (p.is_zero()) continue;
      TautClass term = multiply(lambda_class(g, n, j - i), p);
      if (i % 2 == 0) term *= Rational(-1);
      value += term;
    }
    value *= Rational(1, j);
  }
  std::lock_guard<std::mutex> lock(hodge_mutex());
  return memo.emplace(std::make_tuple(g, n, j), std::move(value)).first->second;
}

SeriesClass lambda_series(int g, int n, int max_deg) {
  const Ambient amb = Ambient::connected(g, n);
  SeriesClass s(amb, max_deg);
  for (int j = 0; j <= max_deg; ++j) s.coeffs[j] = lambda_class(g, n, j);
  return s;
}

namespace {

// Σ_{i+j=d} x^i y^j λ_i λ_j
TautClass quadratic_part(int g, int n, int d, const Rational& x, const Rational& y) {
  TautClass out(Ambient::connected(g, n));
  for (int i = 0; i <= d; ++i) {
    const int j = d - i;
    if (i > g || j > g) continue;
    out += multiply(lambda_class(g, n, i), lambda_class(g, n, j)) * (power(x, i) * power(y, j));
  }
  return out;
}

}  // namespace

SeriesClass L_series(int g, int n, int max_deg) {
  static std::map<std::tuple<int, int, int>, SeriesClass> memo;
  {
    std::lock_guard<std::mutex> lock(hodge_mutex());
    auto it = memo.find({g, n, max_deg});
    if (it != memo.end()) return it->second;
  }
  const Ambient amb = Ambient::connected(g, n);
  const int top = std::min(max_deg, amb.dimension());
  SeriesClass s(amb, max_deg);
  const Rational outer = g >= 1 ? Rational(Integer(1) << (g - 1)) : Rational(1, 2);
  for (int d = 0; d <= top; ++d) s.coeffs[d] = quadratic_part(g, n, d, Rational(2), Rational(-1)) * outer;
  s.coeffs[0] -= TautClass::fundamental(amb) * Rational(Integer(1) << (2 * g)) * Rational(1, 2);
  std::lock_guard<std::mutex> lock(hodge_mutex());
  return memo.emplace(std::make_tuple(g, n, max_deg), s).first->second;
}

SeriesClass mumford_defect(int g, int n) {
  const Ambient amb = Ambient::connected(g, n);
  SeriesClass s(amb, amb.dimension());
  for (int d = 0; d <= amb.dimension(); ++d) s.coeffs[d] = quadratic_part(g, n, d, Rational(1), Rational(-1));
  s.coeffs[0] -= TautClass::fundamental(amb);
  return s;
}

}  // namespace spintaut
