#include <doctest.h>

#include <functional>

#include "spintaut/canonical.hpp"
#include "spintaut/enumerate.hpp"
#include "spintaut/integrate.hpp"
#include "spintaut/spin.hpp"
#include "spintaut/twist.hpp"

using namespace spintaut;

namespace {

// Every assignment of residues mod 2r, filtered by the defining conditions.
Integer brute_moment(const StableGraph& g, const std::vector<int>& a, int k, int r,
                     const std::vector<int>& d) {
  const int m = 2 * r;
  const int nh = g.num_half_edges();
  const auto edges = g.edges();
  std::vector<int> w(nh, 0);
  Integer total = 0;
  std::function<void(int)> rec = [&](int h) {
    if (h == nh) {
      for (int x = 0; x < nh; ++x) {
        if (w[x] % 2 == 0) return;
        if (g.is_leg(x) && ((a[g.leg_label[x] - 1] - w[x]) % m + m) % m != 0) return;
        if (!g.is_leg(x) && (w[x] + w[g.partner[x]]) % m != 0) return;
      }
      for (int v = 0; v < g.num_vertices(); ++v) {
        long s = 0;
        for (int x : g.half_edges_at(v)) s += w[x];
        if (((s - k * (2 * g.genus[v] - 2 + g.valence(v))) % m + m) % m != 0) return;
      }
      Integer term = 1;
      for (std::size_t e = 0; e < edges.size(); ++e)
        for (int j = 0; j < d[e]; ++j) term *= w[edges[e].first] * w[edges[e].second];
      total += term;
      return;
    }
    for (int x = 0; x < m; ++x) {
      w[h] = x;
      rec(h + 1);
    }
  };
  rec(0);
  return total;
}

StableGraph loop_graph() {
  StableGraph g;
  g.add_vertex(0);
  g.add_leg(0, 1);
  g.add_edge(0, 0);
  return g;
}

StableGraph separating(int g1_legs_on_rational) {
  StableGraph g;
  g.add_vertex(0);
  g.add_vertex(1);
  for (int i = 1; i <= g1_legs_on_rational; ++i) g.add_leg(0, i);
  g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST_CASE("weighting moment sums") {
  StableGraph trivial = StableGraph::trivial(1, 1);
  CHECK(weighting_moment_sum(trivial, {1}, 1, 5, {}) == 1);
  StableGraph loop = loop_graph();
  CHECK(weighting_moment_sum(loop, {1}, 1, 3, {0}) == 3);
  CHECK(weighting_moment_sum(loop, {1}, 1, 5, {0}) == 5);
  CHECK(weighting_moment_sum(loop, {1}, 1, 3, {1}) == brute_moment(loop, {1}, 1, 3, {1}));
}

TEST_CASE("weighting sums agree with brute force on small graphs") {
  int checked = 0;
  for (auto [g, a] : std::vector<std::pair<int, std::vector<int>>>{{1, {1}}, {1, {3, -1}}, {2, {3}}, {0, {1, 1, -1, 1}}}) {
    for (const auto& gamma : stable_graphs(g, static_cast<int>(a.size()))) {
      if (gamma.num_edges() > 3) continue;
      for (int r = 1; r <= 4; ++r) {
        std::vector<int> zero(gamma.num_edges(), 0), one(gamma.num_edges(), 1);
        CHECK(weighting_moment_sum(gamma, a, 1, r, zero) == brute_moment(gamma, a, 1, r, zero));
        if (gamma.num_edges() <= 2)
          CHECK(weighting_moment_sum(gamma, a, 1, r, one) == brute_moment(gamma, a, 1, r, one));
        ++checked;
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("simple stars") {
  auto s1 = simple_stars_odd(1, {1}, 1);
  CHECK(s1.size() == 1);
  CHECK(s1[0].graph.num_edges() == 0);

  bool found = false;
  for (const auto& s : simple_stars_odd(2, {3}, 1)) {
    if (s.graph.num_vertices() != 2 || s.graph.num_edges() != 1) continue;
    const int c = s.center;
    const int o = 1 - c;
    if (s.graph.genus[c] == 1 && s.graph.genus[o] == 1 && s.graph.vertex_of[s.graph.leg_half_edge(1)] == c &&
        s.vertex_twist(o) == std::vector<int>{1})
      found = true;
  }
  CHECK(found);
  CHECK_THROWS_AS(simple_stars_odd(1, {2, 0}, 1), ValidationError);
  CHECK_THROWS_AS(simple_stars_odd(1, {3, 1}, 1), ValidationError);

  // every product of edge twists over k^{#outliers} is a positive rational
  for (const auto& s : simple_stars_odd(2, {5, -1}, 1)) {
    long prod = 1;
    for (auto [h, hp] : s.graph.edges()) prod *= std::abs(s.twist[h]);
    CHECK(prod > 0);
    for (int h = 0; h < s.graph.num_half_edges(); ++h) CHECK(s.twist[h] % 2 != 0);
  }
  CHECK(simple_stars_odd(2, {3}, 1).size() == 4);
}

TEST_CASE("bicolored graphs") {
  auto none = bicolored({0}, {{1, 2, 3}}, {{1, 1}, {2, 1}, {3, 1}});
  CHECK(bicolored_leg_below(none, 1).empty());

  auto all = bicolored({1}, {{1, 2}}, {{1, 3}, {2, -1}});
  auto below = bicolored_leg_below(all, 2);
  REQUIRE(below.size() == 1);
  const auto& b = below[0];
  CHECK(b.multiplicity == 1);
  CHECK(b.graph.num_edges() == 1);
  for (int v = 0; v < 2; ++v) {
    if (b.level[v] == 0) CHECK(b.graph.genus[v] == 1);
    if (b.level[v] == -1) CHECK(b.graph.genus[v] == 0);
  }
  CHECK(b.leg_below(1));

  // full holomorphic signature: no genus-0 vertex on the top level
  for (const auto& x : bicolored({2}, {{1, 2}}, {{1, 1}, {2, 3}}))
    for (int v = 0; v < x.graph.num_vertices(); ++v)
      if (x.level[v] == 0) CHECK(x.graph.genus[v] > 0);

  auto star = bicolored_nontrivial_after(bicolored_leg_below(bicolored({2}, {{1, 2}}, {{1, 1}, {2, 3}}), 1), {2});
  CHECK(star.size() == 3);
}

TEST_CASE("forget and stabilize") {
  StableGraph g = separating(2);
  CHECK(forget_and_stabilize(g, {2}).num_edges() == 0);
  CHECK(forget_and_stabilize(g, {}).num_edges() == 1);
}

TEST_CASE("rational polynomial fit") {
  std::vector<Rational> xs, ys;
  for (int i = 0; i < 6; ++i) {
    Rational x(i + 3);
    xs.push_back(x);
    ys.push_back(x * x / 3 - x + Rational(7, 2));
  }
  auto p = RationalPolynomial::fit(xs, ys, 2);
  CHECK(p.coeffs[0] == Rational(7, 2));
  CHECK(p.coeffs[1] == -1);
  CHECK(p.coeffs[2] == Rational(1, 3));
  CHECK(p.degree() == 2);
  for (int i = 3; i < 6; ++i) CHECK(p(xs[i]) == ys[i]);
}

TEST_CASE("spin pixton in low degree") {
  CHECK(pixton_spin(1, {3, -1}, 1, 0) == TautClass::fundamental(Ambient::connected(1, 2)));
  CHECK(pixton_spin(2, {5, -1}, 1, 0) == TautClass::fundamental(Ambient::connected(2, 2)));

  Ambient a11 = Ambient::connected(1, 1);
  CHECK(classes_equal(dr_spin(1, {1}, 1), TautClass::psi(a11, 1)));

  // g=1, a=(1+2b, 1-2b): DR = (2b²+1)ψ1 - [rational tail carrying both legs]
  Ambient a12 = Ambient::connected(1, 2);
  for (int b = 1; b <= 3; ++b) {
    TautClass expected = TautClass::psi(a12, 1) * Rational(2 * b * b + 1) - TautClass::stratum(separating(2));
    CHECK(classes_equal(dr_spin(1, {1 + 2 * b, 1 - 2 * b}, 1), expected));
  }

  // fixed-r class at r=5 for a=(1) carries the loop sum Σ w(10-w)/4 over odd w
  TautClass p5 = pixton_spin_r(1, {1}, 1, 1, 5);
  Rational loop_coeff = 0;
  for (const auto& [key, e] : p5.terms())
    if (e.term.graph.num_edges() == 1) loop_coeff = e.coeff;
  Rational sum = 0;
  for (int w = 1; w < 10; w += 2) sum += Rational(w * (10 - w), 4);
  CHECK(loop_coeff == sum / 5 / 2);
}

TEST_CASE("pixton windows agree") {
  const int start = pixton_r_start(1, {3, -1}, 1, 1);
  auto w1 = pixton_fit(1, {3, -1}, 1, 1, start);
  auto w2 = pixton_fit(1, {3, -1}, 1, 1, start + w1.samples);
  CHECK(w1.residual_zero);
  CHECK(w2.residual_zero);
  CHECK(w1.max_degree <= 2);
  CHECK(w1.constant == w2.constant);
}
