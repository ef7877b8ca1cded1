#include "spintaut/integrate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "spintaut/product.hpp"

namespace spintaut {

namespace {

std::atomic<long> g_degenerate{0};

using MonoKey = std::tuple<int, std::vector<int>, std::vector<int>>;

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<int, std::vector<int>>, Rational>& psi_memo() {
  static std::map<std::pair<int, std::vector<int>>, Rational> m;
  return m;
}

std::map<MonoKey, Rational>& vertex_memo() {
  static std::map<MonoKey, Rational> m;
  return m;
}

bool lookup_psi(int g, const std::vector<int>& a, Rational& out) {
  std::lock_guard<std::mutex> lock(memo_mutex());
  auto it = psi_memo().find({g, a});
  if (it == psi_memo().end()) return false;
  out = it->second;
  return true;
}

Rational dvv_step(int g, const std::vector<int>& a);

Rational compute_psi(int g, const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  if (g == 0 && n == 3) return Rational(1);
  if (g == 1 && n == 1) return Rational(1, 24);
  // string
  auto zero = std::find(a.begin(), a.end(), 0);
  if (zero != a.end()) {
    std::vector<int> rest(a.begin(), a.end());
    rest.erase(rest.begin() + (zero - a.begin()));
    Rational sum = 0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      std::vector<int> b = rest;
      --b[j];
      sum += psi_integral(g, b);
    }
    return sum;
  }
  // dilaton
  auto one = std::find(a.begin(), a.end(), 1);
  if (one != a.end()) {
    std::vector<int> rest(a.begin(), a.end());
    rest.erase(rest.begin() + (one - a.begin()));
    return Rational(2 * g - 2 + n - 1) * psi_integral(g, rest);
  }
  return dvv_step(g, a);
}

// One DVV step on the largest exponent (a sorted, a.back() >= 1).
Rational dvv_step(int g, const std::vector<int>& a) {
  const int k = a.back() - 1;
  std::vector<int> s(a.begin(), a.end() - 1);
  Rational sum = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::vector<int> b = s;
    b[j] += k;
    Rational c(double_factorial(2 * k + 2 * s[j] + 1), double_factorial(2 * s[j] - 1));
    c.canonicalize();
    sum += c * psi_integral(g, b);
  }
  for (int r = 0; r <= k - 1; ++r) {
    const int t = k - 1 - r;
    Rational c(double_factorial(2 * r + 1) * double_factorial(2 * t + 1), 2);
    c.canonicalize();
    if (g >= 1) {
      std::vector<int> b = s;
      b.push_back(r);
      b.push_back(t);
      sum += c * psi_integral(g - 1, b);
    }
    const int m = static_cast<int>(s.size());
    for (int g1 = 0; g1 <= g; ++g1) {
      for (unsigned mask = 0; mask < (1U << m); ++mask) {
        std::vector<int> left{r}, right{t};
        for (int i = 0; i < m; ++i) (mask >> i & 1U ? left : right).push_back(s[i]);
        Rational x = psi_integral(g1, left);
        if (x == 0) continue;
        sum += c * x * psi_integral(g - g1, right);
      }
    }
  }
  Rational out = sum / Rational(double_factorial(2 * k + 3));
  out.canonicalize();
  return out;
}

int chi_count(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

Rational psi_integral(int g, std::vector<int> a) {
  const int n = static_cast<int>(a.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return 0;
  for (int x : a)
    if (x < 0) return 0;
  if (chi_count(a) != 3 * g - 3 + n) return 0;
  std::sort(a.begin(), a.end());
  Rational out;
  if (lookup_psi(g, a, out)) return out;
  out = compute_psi(g, a);
  std::lock_guard<std::mutex> lock(memo_mutex());
  psi_memo().emplace(std::make_pair(g, a), out);
  return out;
}

Rational psi_integral_dvv(int g, std::vector<int> a) {
  const int n = static_cast<int>(a.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return 0;
  for (int x : a)
    if (x < 0) return 0;
  if (chi_count(a) != 3 * g - 3 + n) return 0;
  std::sort(a.begin(), a.end());
  if (g == 0 && n == 3) return Rational(1);
  if (g == 1 && n == 1) return Rational(1, 24);
  return dvv_step(g, a);
}

Rational vertex_integral(int g, std::vector<int> psi, std::vector<int> kappa) {
  const int n = static_cast<int>(psi.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return 0;
  if (chi_count(psi) + chi_count(kappa) != 3 * g - 3 + n) return 0;
  if (kappa.empty()) return psi_integral(g, std::move(psi));
  std::sort(psi.begin(), psi.end());
  std::sort(kappa.begin(), kappa.end());
  MonoKey key{g, psi, kappa};
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = vertex_memo().find(key);
    if (it != vertex_memo().end()) return it->second;
  }
  // κ_{b1} = π_*(ψ^{b1+1}) against the pullback of the rest
  const int b1 = kappa.front();
  std::vector<int> rest(kappa.begin() + 1, kappa.end());
  const int m = static_cast<int>(rest.size());
  Rational sum = 0;
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    int e = b1 + 1;
    std::vector<int> left;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1U)
        e += rest[i];
      else
        left.push_back(rest[i]);
    }
    std::vector<int> p = psi;
    p.push_back(e);
    Rational v = vertex_integral(g, p, left);
    if (__builtin_popcount(mask) % 2) v = -v;
    sum += v;
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  vertex_memo().emplace(key, sum);
  return sum;
}

namespace {

Rational term_integral(const StableGraph& g, const Decoration& d) {
  Rational out(1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> psi;
    for (int h = 0; h < g.num_half_edges(); ++h)
      if (g.vertex_of[h] == v) psi.push_back(d.psi[h]);
    out *= vertex_integral(g.genus[v], psi, d.kappa[v]);
    if (out == 0) return out;
  }
  return out;
}

Rational pair_bare(const GraphIndex& index, const BareTerm& a, const BareTerm& b) {
  Rational sum = 0;
  for (const auto& s : generic_structures(index, a.id, b.id)) {
    const StableGraph& gamma = index.graph(s.gamma);
    Rational part = 0;
    expand_structure(index, s, a.dec, b.dec, true, [&](const Decoration& d, int sign) {
      Rational v = term_integral(gamma, d);
      if (sign < 0) v = -v;
      part += v;
    });
    if (part != 0) sum += part / Rational(static_cast<unsigned long>(index.aut_order(s.gamma)));
  }
  return sum;
}

}  // namespace

Rational evaluate(const TautClass& x) {
  const int dim = x.ambient().dimension();
  Rational sum = 0;
  for (const auto& [key, e] : x.terms()) {
    if (e.term.degree() != dim) {
      ++g_degenerate;
      continue;
    }
    sum += e.coeff * term_integral(e.term.graph, e.term.dec);
  }
  return sum;
}

Rational pairing(const TautClass& a, const TautClass& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.ambient() != b.ambient()) throw ValidationError("ambient", "ambient mismatch in pairing");
  const GraphIndex& index = graph_index(a.ambient());
  const int dim = a.ambient().dimension();
  std::vector<std::pair<BareTerm, Rational>> bb;
  for (const auto& [k, e] : b.terms()) bb.emplace_back(to_bare(index, e.term), e.coeff);
  Rational sum = 0;
  for (const auto& [k, ea] : a.terms()) {
    BareTerm ta = to_bare(index, ea.term);
    const int da = ea.term.degree();
    for (const auto& [tb, cb] : bb) {
      if (da + index.graph(tb.id).num_edges() + tb.dec.degree() != dim) continue;
      sum += ea.coeff * cb * pair_bare(index, ta, tb);
    }
  }
  return sum;
}

namespace {

// Distributes `left` degree over the slots of a vertex: ψ on its half-edges
// and a nonincreasing κ partition.
void decorate_vertex(const std::vector<int>& halves, int left, Decoration& d, int v,
                     const std::function<void()>& done) {
  std::function<void(std::size_t, int)> psi_step = [&](std::size_t i, int rem) {
    if (i == halves.size()) {
      // κ partitions of rem
      std::function<void(int, int)> part = [&](int r, int maxpart) {
        if (r == 0) {
          done();
          return;
        }
        for (int p = std::min(r, maxpart); p >= 1; --p) {
          d.kappa[v].push_back(p);
          part(r - p, p);
          d.kappa[v].pop_back();
        }
      };
      part(rem, rem);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      d.psi[halves[i]] = e;
      psi_step(i + 1, rem - e);
    }
    d.psi[halves[i]] = 0;
  };
  psi_step(0, left);
}

}  // namespace

const std::vector<Term>& generators(const Ambient& amb, int degree) {
  static std::map<std::pair<Ambient, int>, std::vector<Term>> memo;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find({amb, degree});
    if (it != memo.end()) return it->second;
  }
  const GraphIndex& index = graph_index(amb);
  std::map<TermKey, Term> found;
  for (int id = 0; id < index.size(); ++id) {
    const StableGraph& g = index.graph(id);
    const int free = degree - g.num_edges();
    if (free < 0) continue;
    const auto& dims = index.dims(id);
    const int nv = g.num_vertices();
    std::vector<std::vector<int>> halves(nv);
    for (int v = 0; v < nv; ++v) halves[v] = g.half_edges_at(v);
    Decoration d = Decoration::empty(g);
    std::function<void(int, int)> vertex_step = [&](int v, int rem) {
      if (v == nv) {
        if (rem != 0) return;
        auto [key, term] = canonical_term(Term{g, d});
        found.emplace(std::move(key), std::move(term));
        return;
      }
      for (int dv = 0; dv <= std::min(rem, dims[v]); ++dv)
        decorate_vertex(halves[v], dv, d, v, [&] { vertex_step(v + 1, rem - dv); });
    };
    vertex_step(0, free);
  }
  std::vector<Term> out;
  out.reserve(found.size());
  for (auto& [k, t] : found) out.push_back(std::move(t));
  std::lock_guard<std::mutex> lock(mutex);
  return memo.emplace(std::make_pair(amb, degree), std::move(out)).first->second;
}

std::vector<Rational> pairing_signature(const TautClass& x, int degree) {
  const Ambient& amb = x.ambient();
  const int dim = amb.dimension();
  const auto& gens = generators(amb, dim - degree);
  std::vector<Rational> sig(gens.size());
  if (x.is_zero()) return sig;
  const GraphIndex& index = graph_index(amb);
  std::vector<std::pair<BareTerm, Rational>> terms;
  for (const auto& [k, e] : x.terms())
    if (e.term.degree() == degree) terms.emplace_back(to_bare(index, e.term), e.coeff);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    BareTerm gb = to_bare(index, gens[i]);
    Rational s = 0;
    for (const auto& [t, c] : terms) s += c * pair_bare(index, t, gb);
    sig[i] = s;
  }
  return sig;
}

std::vector<Rational> pairing_signature(const TautClass& x) {
  auto d = x.degree();
  if (!d) {
    if (x.is_zero()) return pairing_signature(x, 0);
    throw ValidationError("degree", "pairing signature needs a homogeneous class");
  }
  return pairing_signature(x, *d);
}

bool classes_equal(const TautClass& a, const TautClass& b) {
  if (!a.is_zero() && !b.is_zero() && a.ambient() != b.ambient())
    throw ValidationError("ambient", "ambient mismatch in comparison");
  auto da = a.degree(), db = b.degree();
  if (da && db && *da != *db) return false;
  TautClass diff = a - b;
  if (diff.is_zero()) return true;
  const int top = diff.max_degree();
  for (int d = 0; d <= top; ++d) {
    TautClass part = diff.degree_part(d);
    if (part.is_zero()) continue;
    for (const auto& v : pairing_signature(part, d))
      if (v != 0) return false;
  }
  return true;
}

int pairing_rank(const Ambient& amb, int degree) {
  const int dim = amb.dimension();
  const auto& rows = generators(amb, degree);
  const auto& cols = generators(amb, dim - degree);
  const GraphIndex& index = graph_index(amb);
  std::vector<BareTerm> cb;
  for (const auto& c : cols) cb.push_back(to_bare(index, c));
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    BareTerm rb = to_bare(index, r);
    std::vector<Rational> row;
    for (const auto& c : cb) row.push_back(pair_bare(index, rb, c));
    m.push_back(std::move(row));
  }
  int rank = 0;
  const std::size_t nc = cols.size();
  for (std::size_t c = 0; c < nc && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < nc; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

long degenerate_evaluations() { return g_degenerate.load(); }

namespace integral_cache {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s.empty() ? "-" : s;
}

std::vector<int> split(const std::string& s) {
  std::vector<int> out;
  if (s == "-") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

bool load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string header;
  std::getline(in, header);
  if (header != std::string("# ") + kVersion) return false;
  std::vector<std::pair<MonoKey, Rational>> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int g, n;
    std::string mono, value;
    if (!(ls >> g >> n >> mono >> value)) return false;
    auto bar = mono.find('|');
    if (bar == std::string::npos) return false;
    auto psi = split(mono.substr(4, bar - 4));
    auto kappa = split(mono.substr(bar + 7));
    if (static_cast<int>(psi.size()) != n) return false;
    entries.emplace_back(MonoKey{g, psi, kappa}, parse_rational(value));
  }
  // spot-check a sample against recomputation
  std::map<std::pair<int, std::vector<int>>, Rational> saved_psi;
  std::map<MonoKey, Rational> saved_vertex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    saved_psi.swap(psi_memo());
    saved_vertex.swap(vertex_memo());
  }
  bool ok = true;
  const std::size_t stride = std::max<std::size_t>(1, entries.size() / 8);
  for (std::size_t i = 0; i < entries.size() && ok; i += stride) {
    const auto& [key, value] = entries[i];
    auto [g, psi, kappa] = key;
    ok = vertex_integral(g, psi, kappa) == value;
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  psi_memo().swap(saved_psi);
  vertex_memo().swap(saved_vertex);
  if (!ok) return false;
  for (auto& [key, value] : entries) {
    const auto& [g, psi, kappa] = key;
    if (kappa.empty())
      psi_memo().emplace(std::make_pair(g, psi), value);
    else
      vertex_memo().emplace(key, value);
  }
  return true;
}

void save(const std::string& path) {
  std::ofstream out(path);
  out << "# " << kVersion << "\n";
  std::lock_guard<std::mutex> lock(memo_mutex());
  for (const auto& [key, value] : psi_memo())
    out << key.first << ' ' << key.second.size() << " psi:" << join(key.second) << "|kappa:-"
        << ' ' << to_string(value) << "\n";
  for (const auto& [key, value] : vertex_memo()) {
    const auto& [g, psi, kappa] = key;
    out << g << ' ' << psi.size() << " psi:" << join(psi) << "|kappa:" << join(kappa) << ' '
        << to_string(value) << "\n";
  }
}

std::size_t size() {
  std::lock_guard<std::mutex> lock(memo_mutex());
  return psi_memo().size() + vertex_memo().size();
}

void clear() {
  std::lock_guard<std::mutex> lock(memo_mutex());
  psi_memo().clear();
  vertex_memo().clear();
}

}  // namespace integral_cache

}  // namespace spintaut
