#include <doctest.h>

#include "spintaut/hodge.hpp"
#include "spintaut/integrate.hpp"

using namespace spintaut;

namespace {

bool zero_signature(const TautClass& x) {
  for (int d = 0; d <= x.ambient().dimension(); ++d)
    for (const auto& v : pairing_signature(x, d))
      if (v != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("hodge characters") {
  Ambient a = Ambient::connected(1, 1);
  CHECK(evaluate(hodge_char(1, 1, 1)) == Rational(1, 24));
  CHECK(hodge_char(1, 1, 2).is_zero());
  CHECK(hodge_char(2, 0, 2).is_zero());
  CHECK(hodge_char(0, 5, 1).is_zero());
  CHECK(zero_signature(hodge_char(1, 1, 2)));
  (void)a;
}

TEST_CASE("lambda integrals") {
  CHECK(lambda_class(1, 1, 0) == TautClass::fundamental(Ambient::connected(1, 1)));
  CHECK(evaluate(lambda_class(1, 1, 1)) == Rational(1, 24));
  CHECK(lambda_class(1, 1, 2).is_zero());
  const auto& l1 = lambda_class(2, 0, 1);
  const auto& l2 = lambda_class(2, 0, 2);
  CHECK(evaluate(multiply(multiply(l1, l1), l1)) == Rational(1, 2880));
  CHECK(evaluate(multiply(l1, l2)) == Rational(1, 5760));
  // ∫_{M̄_{2,1}} ψ_1^2 λ_2 = 7/5760 and ∫ ψ_1^3 λ_1 = 1/480
  Ambient a21 = Ambient::connected(2, 1);
  CHECK(evaluate(multiply(TautClass::psi(a21, 1, 2), lambda_class(2, 1, 2))) == Rational(7, 5760));
  CHECK(evaluate(multiply(TautClass::psi(a21, 1, 3), lambda_class(2, 1, 1))) == Rational(1, 480));
  // λ_1 on M̄_{1,2} is the pullback from M̄_{1,1}
  CHECK(classes_equal(lambda_class(1, 2, 1), pull_forget(lambda_class(1, 1, 1), 2)));
}

TEST_CASE("Mumford relation in low genus") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 0}, {2, 1}}) {
    auto s = mumford_defect(g, n);
    for (const auto& c : s.coeffs) CHECK(zero_signature(c));
  }
}

TEST_CASE("L series") {
  auto z = L_series(0, 4, 1);
  for (const auto& c : z.coeffs) CHECK(c.is_zero());
  auto l = L_series(1, 1, 1);
  Ambient a = Ambient::connected(1, 1);
  CHECK(l.coeffs[0] == TautClass::fundamental(a) * Rational(-1));
  CHECK(l.coeffs[1] == lambda_class(1, 1, 1));
  for (int g = 1; g <= 6; ++g) {
    auto s = L_series(g, g == 1 ? 1 : 0, 0);
    Rational expect = Rational(Integer(1) << (g - 1)) - Rational(Integer(1) << (2 * g - 1));
    CHECK(s.coeffs[0] == TautClass::fundamental(s.ambient()) * expect);
  }
}
