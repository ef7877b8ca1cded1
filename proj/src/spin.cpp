#include "spintaut/spin.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

#include "spintaut/canonical.hpp"
#include "spintaut/enumerate.hpp"
#include "spintaut/twist.hpp"

namespace spintaut {

RationalPolynomial RationalPolynomial::fit(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                                           int degree) {
  const int m = degree + 1;
  if (static_cast<int>(xs.size()) < m || xs.size() != ys.size())
    throw ValidationError("fit", "not enough sample points");
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rational> dd(ys.begin(), ys.begin() + m);
  for (int j = 1; j < m; ++j)
    for (int i = m - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  RationalPolynomial p;
  p.coeffs.assign(m, Rational(0));
  for (int i = m - 1; i >= 0; --i) {
    // p = p·(x - xs[i]) + dd[i]
    std::vector<Rational> next(m, Rational(0));
    for (int e = 0; e < m; ++e) {
      if (p.coeffs[e] == 0) continue;
      if (e + 1 < m) next[e + 1] += p.coeffs[e];
      next[e] -= p.coeffs[e] * xs[i];
    }
    next[0] += dd[i];
    p.coeffs = std::move(next);
  }
  return p;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational out = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * x + *it;
  return out;
}

int RationalPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0) return i;
  return -1;
}

namespace {

std::atomic<int> g_threads{0};

Rational rational_power(const Rational& q, int e) { return power(q, static_cast<unsigned>(e)); }

Rational inverse_factorial(int n) { return Rational(1) / Rational(factorial(static_cast<unsigned>(n))); }

// One graph's contribution at a fixed r.
void add_graph(const StableGraph& gamma, const std::vector<int>& a, int k, int c, int r, TautClass& out) {
  const int ne = gamma.num_edges();
  const int free = c - ne;
  if (free < 0) return;
  const auto weightings = odd_weightings(gamma, a, k, r);
  if (weightings.empty()) return;
  const auto edges = gamma.edges();
  const int nv = gamma.num_vertices();
  std::vector<int> legs;
  for (int h = 0; h < gamma.num_half_edges(); ++h)
    if (gamma.is_leg(h)) legs.push_back(h);

  Rational base = Rational(1) / Rational(static_cast<long>(canonicalize(gamma).aut_order));
  for (int i = 0; i < gamma.h1(); ++i) base /= r;

  std::map<std::vector<int>, Integer> moments;
  auto moment = [&](const std::vector<int>& d) -> const Integer& {
    auto it = moments.find(d);
    if (it != moments.end()) return it->second;
    Integer total = 0;
    for (const auto& p : weightings) {
      Integer term = 1;
      for (int e = 0; e < ne; ++e)
        for (int j = 0; j < d[e]; ++j) term *= p[e];
      total += term;
    }
    return moments.emplace(d, total).first->second;
  };

  const Rational vk = Rational(-k * k, 4);
  Term t{gamma, Decoration::empty(gamma)};
  std::vector<int> d(ne, 1);
  // slots: vertices (κ1 powers), legs (ψ powers), edges (extra ψ degree)
  std::function<void(int, int, Rational)> rec = [&](int slot, int left, Rational coeff) {
    if (slot < nv) {
      for (int m = 0; m <= left; ++m) {
        t.dec.kappa[slot].assign(m, 1);
        rec(slot + 1, left - m, coeff * rational_power(vk, m) * inverse_factorial(m));
      }
      t.dec.kappa[slot].clear();
      return;
    }
    const int li = slot - nv;
    if (li < static_cast<int>(legs.size())) {
      const int h = legs[li];
      const int ai = a[gamma.leg_label[h] - 1];
      const Rational lk = Rational(ai * ai, 4);
      for (int e = 0; e <= left; ++e) {
        t.dec.psi[h] = e;
        rec(slot + 1, left - e, coeff * rational_power(lk, e) * inverse_factorial(e));
      }
      t.dec.psi[h] = 0;
      return;
    }
    const int ei = li - static_cast<int>(legs.size());
    if (ei < ne) {
      auto [h, hp] = edges[ei];
      for (int extra = 0; extra <= left; ++extra) {
        d[ei] = extra + 1;
        // (-1)^{d+1} x^d (ψ+ψ')^{d-1} / d!, x = w w'/4
        Rational f = inverse_factorial(extra + 1) / rational_power(Rational(4), extra + 1);
        if (extra % 2 == 1) f = -f;
        for (int j = 0; j <= extra; ++j) {
          t.dec.psi[h] = j;
          t.dec.psi[hp] = extra - j;
          rec(slot + 1, left - extra, coeff * f * Rational(binomial(extra, j)));
        }
      }
      t.dec.psi[h] = t.dec.psi[hp] = 0;
      d[ei] = 1;
      return;
    }
    if (left != 0) return;
    const Integer& mu = moment(d);
    if (mu == 0) return;
    out.add(t, coeff * Rational(mu));
  };
  rec(0, free, base);
}

template <class F>
void parallel_for(int count, F&& f) {
  int workers = thread_limit();
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

void set_thread_limit(int n) { g_threads = std::max(0, n); }

int thread_limit() {
  int n = g_threads;
  if (n > 0) return n;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

TautClass pixton_spin_r(int g, const std::vector<int>& a, int k, int c, int r) {
  const int n = static_cast<int>(a.size());
  if (k <= 0 || k % 2 == 0) throw ValidationError("parity", "k must be odd and positive");
  long sum = 0;
  for (int x : a) {
    if (x % 2 == 0) throw ValidationError("parity", "every entry of a must be odd");
    sum += x;
  }
  if (sum != static_cast<long>(k) * (2 * g - 2 + n))
    throw ValidationError("degree", "sum of a must equal k(2g-2+n)");
  if (r < 1) throw ValidationError("modulus", "r must be positive");
  const Ambient amb = Ambient::connected(g, n);
  TautClass out(amb);
  if (c < 0 || c > amb.dimension()) return out;
  for (const auto& gamma : stable_graphs(g, n)) add_graph(gamma, a, k, c, r, out);
  return out;
}

int pixton_r_start(int g, const std::vector<int>& a, int k, int c) {
  long abs_sum = 0;
  for (int x : a) abs_sum += std::abs(x);
  const long chi = static_cast<long>(k) * (2 * g - 2 + static_cast<long>(a.size()));
  const long bound = std::max(abs_sum, chi) * (c + 2);
  return static_cast<int>(bound / 2 + 1);
}

PixtonFit pixton_fit(int g, const std::vector<int>& a, int k, int c, int r_start) {
  const int samples = 2 * c + 4;
  std::vector<TautClass> values(samples);
  parallel_for(samples, [&](int i) { values[i] = pixton_spin_r(g, a, k, c, r_start + i); });

  PixtonFit out;
  out.constant = TautClass(Ambient::connected(g, static_cast<int>(a.size())));
  out.r_start = r_start;
  out.samples = samples;
  std::map<TermKey, Term> keys;
  for (const auto& v : values)
    for (const auto& [key, e] : v.terms()) keys.emplace(key, e.term);
  std::vector<Rational> xs;
  for (int i = 0; i < samples; ++i) xs.emplace_back(r_start + i);
  for (const auto& [key, term] : keys) {
    std::vector<Rational> ys;
    for (const auto& v : values) {
      auto it = v.terms().find(key);
      ys.push_back(it == v.terms().end() ? Rational(0) : it->second.coeff);
    }
    auto p = RationalPolynomial::fit(xs, ys, 2 * c);
    out.max_degree = std::max(out.max_degree, p.degree());
    for (int i = 2 * c + 1; i < samples; ++i)
      if (p(xs[i]) != ys[i]) {
        if (out.residual_zero) out.offending = term;
        out.residual_zero = false;
      }
    out.constant.add_canonical(key, term, p.coeffs[0]);
  }
  return out;
}

TautClass pixton_spin(int g, const std::vector<int>& a, int k, int c, std::optional<int> r_start) {
  const int admissible = pixton_r_start(g, a, k, c);
  int start = r_start.value_or(admissible);
  if (start < 1) throw ValidationError("r-window", "window start must be positive");
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto fit = pixton_fit(g, a, k, c, start);
    if (fit.residual_zero) return fit.constant;
    if (attempt == 3) {
      throw PolynomialityError("polynomiality bound violated at r-window starting " + std::to_string(start),
                               fit.offending.value_or(Term{}));
    }
    start += fit.samples;
  }
  return {};
}

TautClass dr_spin(int g, const std::vector<int>& a, int k) { return pixton_spin(g, a, k, g); }

}  // namespace spintaut
