#include <doctest.h>

#include <filesystem>
#include <random>

#include "spintaut/enumerate.hpp"
#include "spintaut/integrate.hpp"
#include "spintaut/taut.hpp"

using namespace spintaut;

namespace {

StableGraph irreducible(int n) {
  StableGraph g;
  g.add_vertex(0);
  for (int i = 1; i <= n; ++i) g.add_leg(0, i);
  g.add_edge(0, 0);
  return g;
}

// Genus-0 divisor separating `left` from the remaining legs.
StableGraph separating(int n, const std::vector<int>& left) {
  StableGraph g;
  g.add_vertex(0);
  g.add_vertex(0);
  for (int i = 1; i <= n; ++i)
    g.add_leg(std::find(left.begin(), left.end(), i) != left.end() ? 0 : 1, i);
  g.add_edge(0, 1);
  return g;
}

TautClass random_class(const Ambient& a, int degree, std::mt19937& rng) {
  const auto& gens = generators(a, degree);
  TautClass x(a);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int i = 0; i < 3; ++i) x.add(gens[pick(rng)], Rational(coef(rng)));
  return x;
}

}  // namespace

TEST_CASE("psi integrals") {
  CHECK(psi_integral(0, {0, 0, 0}) == 1);
  CHECK(psi_integral(1, {1}) == Rational(1, 24));
  CHECK(psi_integral(0, {1, 0, 0, 0}) == 1);
  CHECK(psi_integral(2, {4}) == Rational(1, 1152));
  CHECK(psi_integral(3, {7}) == Rational(1, 82944));
  CHECK(psi_integral(2, {2, 3}) == Rational(29, 5760));
  CHECK(psi_integral(1, {2, 1}) == 0);  // degree mismatch
  for (int g = 1; g <= 5; ++g) {
    Rational expect(1);
    expect /= power(Rational(24), g) * Rational(factorial(g));
    CHECK(psi_integral(g, {3 * g - 2}) == expect);
  }
}

TEST_CASE("kappa integrals") {
  // κ₁ on M̄_{1,1} and M̄_{0,4}
  CHECK(vertex_integral(1, {0}, {1}) == Rational(1, 24));
  CHECK(vertex_integral(0, {0, 0, 0, 0}, {1}) == 1);
  // κ₁ = π_*ψ²; on M̄_{0,5}: ∫κ₂ = ∫ψ₆³ over M̄_{0,6}
  CHECK(vertex_integral(0, {0, 0, 0, 0, 0}, {2}) == psi_integral(0, {0, 0, 0, 0, 0, 3}));
  CHECK(evaluate(TautClass::kappa(Ambient::connected(1, 1), 1)) == Rational(1, 24));
}

TEST_CASE("evaluation of boundary strata") {
  // δ_irr = ½ ζ_*1 on M̄_{1,1}
  TautClass d = TautClass::stratum(irreducible(1)) * Rational(1, 2);
  CHECK(evaluate(d) == Rational(1, 2));
  CHECK(evaluate(TautClass::fundamental(Ambient::connected(0, 3))) == 1);
  // ψ₁ = δ_irr/12 on M̄_{1,1} under the pairing
  CHECK(classes_equal(TautClass::psi(Ambient::connected(1, 1), 1), d * Rational(1, 12)));
  CHECK_FALSE(classes_equal(TautClass::psi(Ambient::connected(1, 1), 1), d));
}

TEST_CASE("products of boundary divisors on M̄_{0,4} and M̄_{0,5}") {
  Ambient a4 = Ambient::connected(0, 4);
  auto x = TautClass::stratum(separating(4, {1, 2}));
  auto y = TautClass::stratum(separating(4, {1, 3}));
  CHECK(multiply(x, y).is_zero());
  CHECK(multiply(x, x).is_zero());
  Ambient a5 = Ambient::connected(0, 5);
  auto d12 = TautClass::stratum(separating(5, {1, 2}));
  auto d34 = TautClass::stratum(separating(5, {3, 4}));
  auto d13 = TautClass::stratum(separating(5, {1, 3}));
  CHECK(evaluate(multiply(d12, d34)) == 1);
  CHECK(evaluate(multiply(d12, d12)) == -1);
  CHECK(evaluate(multiply(d12, d13)) == 0);
  CHECK(pairing(d12, d12) == -1);
  CHECK(pairing(d12, d34) == 1);
  (void)a4;
}

TEST_CASE("fundamental class is the unit") {
  Ambient a = Ambient::connected(1, 2);
  auto one = TautClass::fundamental(a);
  std::mt19937 rng(3);
  for (int i = 0; i < 5; ++i) {
    auto x = random_class(a, 1, rng);
    CHECK(multiply(one, x) == x);
    CHECK(multiply(x, one) == x);
  }
}

TEST_CASE("add and scale") {
  Ambient a = Ambient::connected(1, 2);
  auto p = TautClass::psi(a, 1);
  CHECK((p + TautClass(a)) == p);
  CHECK((p - p).is_zero());
  CHECK((p + p) == p * Rational(2));
  CHECK((p + p).terms().begin()->second.coeff == 2);
  // ψ₁² on (1,1) exceeds the dimension
  CHECK(multiply(TautClass::psi(Ambient::connected(1, 1), 1), TautClass::psi(Ambient::connected(1, 1), 1)).is_zero());
}

TEST_CASE("commutativity and associativity") {
  std::mt19937 rng(11);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {0, 5}, {1, 1}, {1, 2}}) {
    Ambient a = Ambient::connected(g, n);
    const int dim = a.dimension();
    for (int trial = 0; trial < 4; ++trial) {
      int d1 = std::min(1, dim), d2 = std::min(2, dim - d1);
      auto x = random_class(a, d1, rng);
      auto y = random_class(a, std::max(0, d2), rng);
      CHECK(multiply(x, y) == multiply(y, x));
      if (dim >= 2) {
        auto z = random_class(a, 1, rng);
        auto x1 = random_class(a, 1, rng);
        CHECK(multiply(multiply(x1, z), x) == multiply(x1, multiply(z, x)));
      }
    }
  }
}

TEST_CASE("pairing agrees with evaluating the product") {
  std::mt19937 rng(5);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 2}, {2, 0}, {1, 3}}) {
    Ambient a = Ambient::connected(g, n);
    const int dim = a.dimension();
    for (int d = 0; d <= dim; ++d) {
      auto x = random_class(a, d, rng);
      auto y = random_class(a, dim - d, rng);
      CHECK(pairing(x, y) == evaluate(multiply(x, y)));
    }
  }
}

TEST_CASE("push_glue") {
  // trivial graph: identity
  Ambient a = Ambient::connected(1, 2);
  auto p = TautClass::psi(a, 2);
  CHECK(push_glue(StableGraph::trivial(1, 2), {p}) == p);
  // two genus-1 vertices joined by an edge
  StableGraph g;
  g.add_vertex(1);
  g.add_vertex(1);
  g.add_edge(0, 1);
  auto x = push_glue(g, {TautClass::fundamental(Ambient::connected(1, 1)),
                         TautClass::fundamental(Ambient::connected(1, 1))});
  CHECK(x == TautClass::stratum(g));
  // grafting a boundary term reproduces the composite graph
  StableGraph inner = irreducible(1);
  auto y = push_glue(g, {TautClass::stratum(inner), TautClass::fundamental(Ambient::connected(1, 1))});
  StableGraph composite;
  composite.add_vertex(0);
  composite.add_vertex(1);
  composite.add_edge(0, 1);
  composite.add_edge(0, 0);
  CHECK(y == TautClass::stratum(composite));
}

TEST_CASE("projection formula") {
  // ∫ ζ_Γ*(α) · ψ_1 = ∫_Γ α · ψ_{leg 1}
  StableGraph g = separating(5, {1, 2});
  auto x = TautClass::stratum(g);
  auto p = TautClass::psi(Ambient::connected(0, 5), 3);
  Term t{g, Decoration::empty(g)};
  t.dec.psi[g.leg_half_edge(3)] = 1;
  TautClass direct(Ambient::connected(0, 5));
  direct.add(t, Rational(1));
  CHECK(evaluate(multiply(x, p)) == evaluate(direct));
  CHECK(evaluate(direct) == 1);
}

TEST_CASE("forgetful maps") {
  Ambient a = Ambient::connected(1, 2);
  // π_*(ψ_2^{m+1}) = κ_m
  CHECK(push_forget(TautClass::psi(a, 2, 2), 2) == TautClass::kappa(Ambient::connected(1, 1), 1));
  CHECK(push_forget(TautClass::fundamental(a), 2).is_zero());
  // ∫ π^*(x) ψ_{n+1} = (2g-2+n) ∫ x
  std::mt19937 rng(9);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {0, 4}, {2, 0}}) {
    Ambient b = Ambient::connected(g, n);
    for (int trial = 0; trial < 3; ++trial) {
      auto x = random_class(b, b.dimension(), rng);
      auto up = pull_forget(x, n + 1);
      auto prod = multiply(up, TautClass::psi(up.ambient(), n + 1));
      CHECK(evaluate(prod) == Rational(2 * g - 2 + n) * evaluate(x));
      // π_* π^* x = 0 in degree
      CHECK(push_forget(up, n + 1).is_zero());
    }
  }
}

TEST_CASE("integral cache round trip") {
  Ambient a = Ambient::connected(1, 2);
  auto sig = pairing_signature(TautClass::kappa(a, 1));
  const std::string path = (std::filesystem::temp_directory_path() / "spintaut_cache_roundtrip.txt").string();
  integral_cache::save(path);
  const auto n = integral_cache::size();
  integral_cache::clear();
  CHECK(integral_cache::load(path));
  CHECK(integral_cache::size() == n);
  CHECK(pairing_signature(TautClass::kappa(a, 1)) == sig);
  std::filesystem::remove(path);
}
