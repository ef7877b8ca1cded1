#include "spintaut/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "spintaut/canonical.hpp"
#include "spintaut/enumerate.hpp"
#include "spintaut/hodge.hpp"
#include "spintaut/integrate.hpp"
#include "spintaut/spin.hpp"
#include "spintaut/twist.hpp"

namespace spintaut {

Rational d_constant(int g, int m) {
  if (g < 0 || m < 0) throw ValidationError("range", "d(g,m) needs g, m >= 0");
  Rational a = Rational(power(Rational(2), static_cast<unsigned>(2 * g))) / 2;
  Rational b = Rational(power(Rational(2), static_cast<unsigned>(g))) / 2;
  return (m % 2 == 1 ? a : -a) + b;
}

Rational d_constant_recursive(int g, int m) {
  if (g < 0 || m < 0) throw ValidationError("range", "d(g,m) needs g, m >= 0");
  if (g == 0) return Rational(m % 2);
  return 3 * d_constant_recursive(g - 1, m) - d_constant_recursive(g - 1, m + 1);
}

namespace {

std::uint64_t aut_of(const StableGraph& g) { return canonicalize(g).aut_order; }

// out += coeff · t^shift · ζ_Γ*(⊗_v parts[v](t)), truncated at out's degree.
void add_glued(SeriesClass& out, const StableGraph& gamma, const std::vector<SeriesClass>& parts, int shift,
               const Rational& coeff) {
  const int top = out.max_degree();
  const int nv = gamma.num_vertices();
  std::vector<int> deg(nv, 0);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (v == nv) {
      std::vector<TautClass> pieces;
      for (int w = 0; w < nv; ++w) pieces.push_back(parts[w].coeffs[deg[w]]);
      out.coeffs[shift + used] += push_glue(gamma, pieces) * coeff;
      return;
    }
    for (int d = 0; d <= parts[v].max_degree() && shift + used + d <= top; ++d) {
      deg[v] = d;
      rec(v + 1, used + d);
    }
  };
  if (shift <= top) rec(0, 0);
}

SeriesClass constant_series(const TautClass& x) {
  SeriesClass s(x.ambient(), 0);
  s.coeffs[0] = x;
  return s;
}

SeriesClass truncate(const SeriesClass& s, int max_deg) {
  SeriesClass out = s;
  if (max_deg < out.max_degree()) out.coeffs.resize(std::max(0, max_deg) + 1);
  return out;
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

template <class Key, class Value, class F>
Value memoized(std::map<Key, Value>& memo, const Key& key, F&& compute) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Value v = compute();
  std::lock_guard<std::mutex> lock(memo_mutex());
  return memo.emplace(key, std::move(v)).first->second;
}

SeriesClass segre_full(int g, int n) {
  static std::map<std::pair<int, int>, SeriesClass> memo;
  return memoized(memo, std::make_pair(g, n), [&] {
    const Ambient amb = Ambient::connected(g, n);
    const int dim = amb.dimension();
    SeriesClass out(amb, dim);
    for (const auto& tree : star_trees(g, n)) {
      std::vector<SeriesClass> parts;
      for (int v = 0; v < tree.num_vertices(); ++v) {
        const int gv = tree.genus[v], nv = tree.valence(v);
        parts.push_back(L_series(gv, nv, 3 * gv - 3 + nv));
      }
      const int e = tree.num_edges();
      Rational c = Rational(e % 2 ? -1 : 1) / Rational(static_cast<long>(aut_of(tree)));
      add_glued(out, tree, parts, e, c);
    }
    return out;
  });
}

SeriesClass mero_full(int g, int n) {
  static std::map<std::pair<int, int>, SeriesClass> memo;
  return memoized(memo, std::make_pair(g, n), [&] {
    const Ambient amb = Ambient::connected(g, n);
    const int dim = amb.dimension();
    const TautClass psi1 = TautClass::psi(amb, 1);
    const SeriesClass s = segre_full(g, n);
    SeriesClass rhs = s;
    for (int c = 1; c <= dim; ++c) rhs.coeffs[c] += multiply(psi1, s.coeffs[c - 1]);
    for (const auto& bb : backbones(g, n)) {
      const StableGraph& gamma = bb.graph;
      std::vector<SeriesClass> parts;
      for (int v = 0; v < gamma.num_vertices(); ++v) {
        const int gv = gamma.genus[v], nv = gamma.valence(v);
        const Ambient local = Ambient::connected(gv, nv);
        parts.push_back(v == bb.center ? constant_series(TautClass::fundamental(local)) : segre_full(gv, nv));
      }
      const int e = gamma.num_edges();
      Rational c = Rational(power(Rational(2), static_cast<unsigned>(2 * gamma.genus[bb.center])));
      if (e % 2) c = -c;
      c /= Rational(static_cast<long>(aut_of(gamma)));
      add_glued(rhs, gamma, parts, e, c);
    }
    SeriesClass out(amb, dim);
    out.coeffs[0] = rhs.coeffs[0];
    for (int c = 1; c <= dim; ++c) out.coeffs[c] = rhs.coeffs[c] + multiply(psi1, out.coeffs[c - 1]);
    return out;
  });
}

// Relabels a class on M̄_{g,m} (legs 1..m) to the labels `positions` and
// pulls it back to M̄_{g,n}.
TautClass spread(const TautClass& x, const std::vector<int>& positions, int n) {
  std::map<int, int> labels;
  for (std::size_t i = 0; i < positions.size(); ++i) labels[static_cast<int>(i) + 1] = positions[i];
  Ambient target;
  target.genus = x.ambient().genus;
  std::vector<int> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  target.labels = {sorted};
  TautClass out = relabel(x, labels, target);
  for (int l = 1; l <= n; ++l)
    if (std::find(positions.begin(), positions.end(), l) == positions.end()) out = pull_forget(out, l);
  return out;
}

void check_odd_signature(int g, const std::vector<int>& a, int k) {
  if (k <= 0 || k % 2 == 0) throw ValidationError("parity", "k must be odd and positive");
  long sum = 0;
  for (int x : a) {
    if (x % 2 == 0) throw ValidationError("parity", "every entry of a must be odd");
    sum += x;
  }
  if (g < 0 || 2 * g - 2 + static_cast<long>(a.size()) <= 0)
    throw ValidationError("stability", "unstable signature");
  if (sum != static_cast<long>(k) * (2 * g - 2 + static_cast<long>(a.size())))
    throw ValidationError("degree", "sum of a must equal k(2g-2+n)");
}

TautClass star_term(const TwistedGraph& s, int k) {
  std::vector<TautClass> parts;
  Rational coeff = Rational(1) / Rational(static_cast<long>(s.aut));
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    auto tw = s.vertex_twist(v);
    if (v == s.center) {
      parts.push_back(stratum_class_spin(s.graph.genus[v], tw, k));
    } else {
      for (auto& x : tw) x /= k;
      parts.push_back(strata_class_spin(s.graph.genus[v], tw));
      coeff /= k;
    }
  }
  for (auto [h, hp] : s.graph.edges()) coeff *= std::abs(s.twist[h]);
  return push_glue(s.graph, parts) * coeff;
}

}  // namespace

SeriesClass segre_spin(int g, int n, int max_deg) { return truncate(segre_full(g, n), max_deg); }

bool segre_roundtrip_check(int g, int n, std::string* diagnostic) {
  const Ambient amb = Ambient::connected(g, n);
  const int dim = amb.dimension();
  SeriesClass rhs(amb, dim);
  for (const auto& tree : star_trees(g, n)) {
    std::vector<SeriesClass> parts;
    for (int v = 0; v < tree.num_vertices(); ++v) parts.push_back(segre_full(tree.genus[v], tree.valence(v)));
    const int e = tree.num_edges();
    add_glued(rhs, tree, parts, e, Rational(1) / Rational(static_cast<long>(aut_of(tree))));
  }
  const SeriesClass lhs = L_series(g, n, dim);
  for (int c = 0; c <= dim; ++c) {
    if (!classes_equal(lhs.coeffs[c], rhs.coeffs[c])) {
      if (diagnostic) *diagnostic = "round trip differs in t-degree " + std::to_string(c);
      return false;
    }
  }
  return true;
}

SeriesClass segre_spin_mero(int g, int n, int max_deg) {
  if (n < 1) throw ValidationError("legs", "the meromorphic series needs a first marking");
  return truncate(mero_full(g, n), max_deg);
}

SeriesClass unmarked_step(int g, int n, int a1, int max_deg) {
  if (a1 != 1 && a1 != -1) throw ValidationError("signature", "a1 must be 1 or -1");
  if (n < 1) throw ValidationError("legs", "the unmarked step needs a first marking");
  const Ambient amb = Ambient::connected(g, n);
  const int dim = amb.dimension();
  const SeriesClass s = a1 == 1 ? segre_full(g, n) : mero_full(g, n);
  const TautClass psi1 = TautClass::psi(amb, 1);
  const int top = std::min(max_deg, dim);
  SeriesClass boundary(amb, top);
  for (const auto& bb : backbones(g, n)) {
    const StableGraph& gamma = bb.graph;
    const int e = gamma.num_edges();
    if (e == 0) continue;
    std::vector<SeriesClass> parts;
    for (int v = 0; v < gamma.num_vertices(); ++v) {
      const int gv = gamma.genus[v], nv = gamma.valence(v);
      const Ambient local = Ambient::connected(gv, nv);
      if (v == bb.center)
        parts.push_back(constant_series(TautClass::fundamental(local) * d_constant(gv, e + (a1 == -1 ? 1 : 0))));
      else
        parts.push_back(segre_full(gv, nv));
    }
    add_glued(boundary, gamma, parts, e - 1, Rational(1) / Rational(static_cast<long>(aut_of(gamma))));
  }
  SeriesClass out(amb, top);
  for (int q = 0; q <= top; ++q) {
    TautClass y(amb);
    if (q + 1 <= dim) y += s.coeffs[q + 1];
    y += multiply(psi1, s.coeffs[q]) * Rational(a1);
    y -= boundary.coeffs[q];
    out.coeffs[q] = y * Rational(1, 2);
  }
  return out;
}

TautClass strata_class_spin(int g, const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  for (int x : a)
    if (x <= 0 || x % 2 == 0) throw ValidationError("signature", "holomorphic strata need odd positive entries");
  if (g == 0) return TautClass(Ambient::connected(0, n));
  check_odd_signature(g, a, 1);
  std::vector<int> core;
  for (int i = 0; i < n; ++i)
    if (a[i] != 1) core.push_back(i + 1);
  if (g == 1) return TautClass::fundamental(Ambient::connected(1, n)) * Rational(-1);
  if (g == 2) {
    static std::mutex m;
    static std::optional<TautClass> base;
    {
      std::lock_guard<std::mutex> lock(m);
      if (!base) base = unmarked_step(2, 1, 1, 0).coeffs[0];
    }
    return spread(*base, core, n);
  }
  throw ValidationError("unsupported", "holomorphic strata classes are implemented for g <= 2");
}

TautClass stratum_class_spin(int g, const std::vector<int>& a, int k) {
  check_odd_signature(g, a, k);
  const int n = static_cast<int>(a.size());
  if (g == 0) return TautClass::fundamental(Ambient::connected(0, n));
  if (k != 1) throw ValidationError("unsupported", "strata of k-differentials need k = 1 in positive genus");
  if (std::all_of(a.begin(), a.end(), [](int x) { return x > 0; })) return strata_class_spin(g, a);
  static std::map<std::vector<int>, TautClass> memo;
  std::vector<int> key{g};
  key.insert(key.end(), a.begin(), a.end());
  return memoized(memo, key, [&] {
    std::vector<int> core, values;
    for (int i = 0; i < n; ++i)
      if (a[i] != 1) {
        core.push_back(i + 1);
        values.push_back(a[i]);
      }
    if (static_cast<int>(core.size()) < n) return spread(stratum_class_spin(g, values, 1), core, n);
    if (g == 1 && n == 2) {
      // (1+2b, 1-2b): (2b²+1) ψ at the zero
      const int zero = a[0] > 0 ? 1 : 2;
      const long b = (std::max(a[0], a[1]) - 1) / 2;
      return TautClass::psi(Ambient::connected(1, 2), zero) * Rational(2 * b * b + 1);
    }
    return dr_spin(g, a, 1) - star_sum(g, a, 1, false, false);
  });
}

TautClass star_sum(int g, const std::vector<int>& a, int k, bool include_trivial, bool leg1_central) {
  TautClass out(Ambient::connected(g, static_cast<int>(a.size())));
  for (const auto& s : simple_stars_odd(g, a, k)) {
    if (!include_trivial && s.graph.num_edges() == 0) continue;
    if (leg1_central && s.graph.vertex_of[s.graph.leg_half_edge(1)] != s.center) continue;
    out += star_term(s, k);
  }
  return out;
}

TautClass stargraph_spin(int g, const std::vector<int>& a, int k) {
  check_odd_signature(g, a, k);
  const bool divisible = std::all_of(a.begin(), a.end(), [k](int x) { return x > 0 && x % k == 0; });
  if (!divisible) return star_sum(g, a, k, true, false);
  if (k != 1) throw ValidationError("unsupported", "a in (kN)^n needs k = 1");
  const Ambient amb = Ambient::connected(g, static_cast<int>(a.size()));
  TautClass out = multiply(TautClass::psi(amb, 1), strata_class_spin(g, a)) * Rational(-a[0]);
  out += star_sum(g, a, k, false, true);
  return out;
}

}  // namespace spintaut
