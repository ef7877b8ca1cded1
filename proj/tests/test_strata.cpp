#include <doctest.h>

#include "spintaut/hodge.hpp"
#include "spintaut/integrate.hpp"
#include "spintaut/spin.hpp"
#include "spintaut/strata.hpp"

using namespace spintaut;

namespace {

// Two genus-1 vertices joined by an edge, leg 1 on the first.
StableGraph delta1() {
  StableGraph g;
  g.add_vertex(1);
  g.add_vertex(1);
  g.add_leg(0, 1);
  g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST_CASE("d constants") {
  CHECK(d_constant(0, 3) == 1);
  CHECK(d_constant(0, 1) == 1);
  CHECK(d_constant(0, 0) == 0);
  CHECK(d_constant(1, 1) == 3);
  CHECK(d_constant(1, 0) == -1);
  for (int g = 0; g <= 6; ++g)
    for (int m = 0; m <= 6; ++m) {
      CHECK(d_constant(g, m) == d_constant_recursive(g, m));
      CHECK(d_constant(g, m + 2) == d_constant(g, m));
    }
}

TEST_CASE("spin segre series") {
  CHECK(segre_spin(0, 3, 0).coeffs[0].is_zero());
  auto s11 = segre_spin(1, 1, 1);
  const Ambient a11 = Ambient::connected(1, 1);
  CHECK(classes_equal(s11.coeffs[0], TautClass::fundamental(a11) * Rational(-1)));
  CHECK(classes_equal(s11.coeffs[1], lambda_class(1, 1, 1)));
  CHECK(evaluate(segre_spin(2, 0, 0).coeffs[0]) == 0);
  CHECK(segre_spin(2, 1, 0).coeffs[0] == TautClass::fundamental(Ambient::connected(2, 1)) * Rational(-6));
  std::string why;
  CHECK(segre_roundtrip_check(1, 1, &why));
  CHECK(segre_roundtrip_check(2, 0, &why));
}

TEST_CASE("meromorphic series starts at d(g,1)") {
  for (int g = 1; g <= 2; ++g) {
    auto s = segre_spin_mero(g, 1, 0);
    CHECK(s.coeffs[0] == TautClass::fundamental(Ambient::connected(g, 1)) * d_constant(g, 1));
  }
}

TEST_CASE("genus-2 stratum (3) is minus the Weierstrass divisor") {
  const Ambient a21 = Ambient::connected(2, 1);
  TautClass w = lambda_class(2, 1, 1) - TautClass::psi(a21, 1) * Rational(3) + TautClass::stratum(delta1());
  CHECK(classes_equal(strata_class_spin(2, {3}), w));
}

TEST_CASE("unmarked step agrees for a1 = 1 and a1 = -1") {
  auto plus = unmarked_step(2, 1, 1, 2);
  auto minus = unmarked_step(2, 1, -1, 2);
  for (int q = 0; q <= 2; ++q) CHECK(classes_equal(plus.coeffs[q], minus.coeffs[q]));
}

TEST_CASE("genus-1 holomorphic strata") {
  CHECK(strata_class_spin(1, {1}) == TautClass::fundamental(Ambient::connected(1, 1)) * Rational(-1));
  CHECK_THROWS_AS(strata_class_spin(3, {5}), ValidationError);
}

TEST_CASE("holomorphic star identity at g=2, a=(3)") {
  CHECK(classes_equal(dr_spin(2, {3}, 1), stargraph_spin(2, {3}, 1)));
}

TEST_CASE("star identity with pulled-back central classes") {
  CHECK(classes_equal(dr_spin(2, {5, -1, 1}, 1), stargraph_spin(2, {5, -1, 1}, 1)));
  // the nontrivial stars matter: dropping them breaks the identity
  CHECK_FALSE(classes_equal(dr_spin(2, {5, -1, 1}, 1), stratum_class_spin(2, {5, -1, 1}, 1)));
  CHECK_FALSE(classes_equal(dr_spin(2, {3, 1}, 1), stargraph_spin(2, {3, 1}, 1) * Rational(2)));
}
