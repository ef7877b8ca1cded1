#include "spintaut/taut.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spintaut/canonical.hpp"
#include "spintaut/product.hpp"

namespace spintaut {

// ---------------------------------------------------------------- Ambient

Ambient Ambient::connected(int g, int n) {
  Ambient a;
  a.genus = {g};
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  a.labels = {labels};
  a.validate();
  return a;
}

Ambient Ambient::of(const StableGraph& g) {
  int nc = 0;
  for (int c : g.component) nc = std::max(nc, c + 1);
  Ambient a;
  a.genus.assign(nc, 0);
  a.labels.assign(nc, {});
  std::vector<int> verts(nc, 0), edges(nc, 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    a.genus[g.component[v]] += g.genus[v];
    ++verts[g.component[v]];
  }
  for (auto [h, hp] : g.edges()) ++edges[g.component[g.vertex_of[h]]];
  for (int c = 0; c < nc; ++c) a.genus[c] += edges[c] - verts[c] + 1;
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (g.is_leg(h)) a.labels[g.component[g.vertex_of[h]]].push_back(g.leg_label[h]);
  for (auto& l : a.labels) std::sort(l.begin(), l.end());
  return a;
}

int Ambient::dimension() const {
  int d = 0;
  for (std::size_t j = 0; j < genus.size(); ++j) d += 3 * genus[j] - 3 + static_cast<int>(labels[j].size());
  return d;
}

int Ambient::component_of(int label) const {
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (std::find(labels[j].begin(), labels[j].end(), label) != labels[j].end()) return static_cast<int>(j);
  return -1;
}

std::vector<int> Ambient::all_labels() const {
  std::vector<int> out;
  for (const auto& l : labels) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  return out;
}

void Ambient::validate() const {
  if (genus.size() != labels.size() || genus.empty())
    throw ValidationError("ambient", "genus and label lists differ in length");
  for (std::size_t j = 0; j < genus.size(); ++j)
    if (genus[j] < 0 || 2 * genus[j] - 2 + static_cast<int>(labels[j].size()) <= 0)
      throw ValidationError("stability", "unstable ambient component (" + std::to_string(genus[j]) +
                                             "," + std::to_string(labels[j].size()) + ")");
  auto all = all_labels();
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw ValidationError("legs", "duplicate leg label in ambient");
}

// ---------------------------------------------------------------- Decoration / Term

Decoration Decoration::empty(const StableGraph& g) {
  Decoration d;
  d.psi.assign(g.num_half_edges(), 0);
  d.kappa.assign(g.num_vertices(), {});
  return d;
}

int Decoration::degree() const {
  int d = std::accumulate(psi.begin(), psi.end(), 0);
  for (const auto& k : kappa) d += std::accumulate(k.begin(), k.end(), 0);
  return d;
}

int Decoration::vertex_degree(const StableGraph& g, int v) const {
  int d = std::accumulate(kappa[v].begin(), kappa[v].end(), 0);
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (g.vertex_of[h] == v) d += psi[h];
  return d;
}

bool Term::vanishes_by_dimension() const {
  std::vector<int> deg(graph.num_vertices(), 0);
  for (int v = 0; v < graph.num_vertices(); ++v)
    deg[v] = std::accumulate(dec.kappa[v].begin(), dec.kappa[v].end(), 0);
  for (int h = 0; h < graph.num_half_edges(); ++h) deg[graph.vertex_of[h]] += dec.psi[h];
  for (int v = 0; v < graph.num_vertices(); ++v)
    if (deg[v] > vertex_dimension(graph, v)) return true;
  return false;
}

std::pair<TermKey, Term> canonical_term(const Term& t0) {
  Term t = t0;
  for (auto& k : t.dec.kappa) std::sort(k.begin(), k.end());
  Coloring col;
  col.half_edge.assign(t.dec.psi.begin(), t.dec.psi.end());
  col.vertex.resize(t.graph.num_vertices());
  for (int v = 0; v < t.graph.num_vertices(); ++v)
    col.vertex[v].assign(t.dec.kappa[v].begin(), t.dec.kappa[v].end());
  auto cf = canonicalize(t.graph, col);
  Term out{cf.graph, Decoration::empty(cf.graph)};
  for (int h = 0; h < t.graph.num_half_edges(); ++h) out.dec.psi[cf.half_edge_map[h]] = t.dec.psi[h];
  for (int v = 0; v < t.graph.num_vertices(); ++v) out.dec.kappa[cf.vertex_map[v]] = t.dec.kappa[v];
  return {std::move(cf.code), std::move(out)};
}

// ---------------------------------------------------------------- TautClass

TautClass TautClass::fundamental(const Ambient& a) {
  TautClass x(a);
  StableGraph g;
  for (std::size_t j = 0; j < a.genus.size(); ++j) {
    const int v = g.add_vertex(a.genus[j], static_cast<int>(j));
    for (int l : a.labels[j]) g.add_leg(v, l);
  }
  x.add(Term{g, Decoration::empty(g)}, Rational(1));
  return x;
}

TautClass TautClass::psi(const Ambient& a, int label, int exponent) {
  TautClass base = fundamental(a);
  TautClass x(a);
  for (const auto& [key, e] : base.terms()) {
    Term t = e.term;
    int h = t.graph.leg_half_edge(label);
    if (h < 0) throw ValidationError("legs", "no leg " + std::to_string(label));
    t.dec.psi[h] = exponent;
    x.add(t, Rational(1));
  }
  return x;
}

TautClass TautClass::kappa(const Ambient& a, int m) {
  if (a.num_components() != 1) throw ValidationError("ambient", "kappa needs a connected ambient");
  TautClass base = fundamental(a);
  TautClass x(a);
  for (const auto& [key, e] : base.terms()) {
    Term t = e.term;
    t.dec.kappa[0] = {m};
    x.add(t, Rational(1));
  }
  return x;
}

TautClass TautClass::stratum(const StableGraph& g) {
  TautClass x(Ambient::of(g));
  x.add(Term{g, Decoration::empty(g)}, Rational(1));
  return x;
}

void TautClass::add(const Term& t0, const Rational& coeff) {
  if (coeff == 0) return;
  Term t = t0;
  Rational c = coeff;
  for (int v = 0; v < t.graph.num_vertices(); ++v) {
    auto& k = t.dec.kappa[v];
    auto zeros = std::count(k.begin(), k.end(), 0);
    if (zeros) {
      int chi = 2 * t.graph.genus[v] - 2 + t.graph.valence(v);
      for (long i = 0; i < zeros; ++i) c *= chi;
      k.erase(std::remove(k.begin(), k.end(), 0), k.end());
    }
    std::sort(k.begin(), k.end());
  }
  if (c == 0 || t.vanishes_by_dimension()) return;
  auto [key, term] = canonical_term(t);
  add_canonical(std::move(key), term, c);
}

void TautClass::add_canonical(TermKey key, const Term& t, const Rational& coeff) {
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Entry{t, coeff});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

TautClass& TautClass::operator+=(const TautClass& o) {
  if (o.is_zero()) return *this;
  if (terms_.empty() && ambient_.genus.empty()) ambient_ = o.ambient_;
  if (ambient_ != o.ambient_) throw ValidationError("ambient", "ambient mismatch in addition");
  for (const auto& [key, e] : o.terms_) add_canonical(key, e.term, e.coeff);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& o) {
  if (o.is_zero()) return *this;
  if (terms_.empty() && ambient_.genus.empty()) ambient_ = o.ambient_;
  if (ambient_ != o.ambient_) throw ValidationError("ambient", "ambient mismatch in subtraction");
  for (const auto& [key, e] : o.terms_) add_canonical(key, e.term, -e.coeff);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, e] : terms_) e.coeff *= q;
  return *this;
}

TautClass TautClass::degree_part(int d) const {
  TautClass out(ambient_);
  for (const auto& [key, e] : terms_)
    if (e.term.degree() == d) out.terms_.emplace(key, e);
  return out;
}

std::optional<int> TautClass::degree() const {
  std::optional<int> d;
  for (const auto& [key, e] : terms_) {
    int td = e.term.degree();
    if (d && *d != td) return std::nullopt;
    d = td;
  }
  return d;
}

int TautClass::max_degree() const {
  int d = -1;
  for (const auto& [key, e] : terms_) d = std::max(d, e.term.degree());
  return d;
}

bool TautClass::operator==(const TautClass& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && ambient_ != o.ambient_) return false;
  auto it = o.terms_.begin();
  for (const auto& [key, e] : terms_) {
    if (key != it->first || e.coeff != it->second.coeff) return false;
    ++it;
  }
  return true;
}

// ---------------------------------------------------------------- SeriesClass

SeriesClass::SeriesClass(const Ambient& a, int max_degree) : coeffs(max_degree + 1, TautClass(a)) {}

SeriesClass& SeriesClass::operator+=(const SeriesClass& o) {
  for (std::size_t d = 0; d < coeffs.size() && d < o.coeffs.size(); ++d) coeffs[d] += o.coeffs[d];
  return *this;
}

SeriesClass& SeriesClass::operator*=(const Rational& q) {
  for (auto& c : coeffs) c *= q;
  return *this;
}

SeriesClass SeriesClass::shifted(int s) const {
  SeriesClass out(ambient(), max_degree());
  for (int d = 0; d <= max_degree(); ++d)
    if (d + s >= 0 && d + s <= max_degree()) out.coeffs[d + s] = coeffs[d];
  return out;
}

SeriesClass multiply(const SeriesClass& a, const SeriesClass& b) {
  const int n = std::min(a.max_degree(), b.max_degree());
  SeriesClass out(a.ambient(), n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      out.coeffs[i + j] += multiply(a.coeffs[i], b.coeffs[j]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- products

namespace {

bool is_fundamental(const Term& t) {
  return t.graph.num_edges() == 0 && t.dec.degree() == 0;
}

}  // namespace

TautClass multiply(const TautClass& a, const TautClass& b) {
  if (a.ambient() != b.ambient()) throw ValidationError("ambient", "ambient mismatch in product");
  TautClass out(a.ambient());
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<const TautClass::Entry*> rest_a, rest_b;
  for (const auto& [ka, ea] : a.terms()) {
    if (is_fundamental(ea.term)) {
      for (const auto& [kb, eb] : b.terms()) out.add_canonical(kb, eb.term, ea.coeff * eb.coeff);
    } else {
      rest_a.push_back(&ea);
    }
  }
  for (const auto& [kb, eb] : b.terms()) {
    if (is_fundamental(eb.term)) {
      for (const auto* ea : rest_a) out.add(ea->term, ea->coeff * eb.coeff);
    } else {
      rest_b.push_back(&eb);
    }
  }
  if (rest_a.empty() || rest_b.empty()) return out;
  const int dim = a.ambient().dimension();
  if (a.degree() && b.degree() && *a.degree() + *b.degree() > dim) return out;
  const GraphIndex& index = graph_index(a.ambient());
  std::vector<std::pair<BareTerm, Rational>> bb;
  for (const auto* eb : rest_b) bb.emplace_back(to_bare(index, eb->term), eb->coeff);
  for (const auto* ea : rest_a) {
    BareTerm ta = to_bare(index, ea->term);
    for (const auto& [tb, cb] : bb) {
      if (ea->term.degree() + index.graph(tb.id).num_edges() + tb.dec.degree() > dim)
        continue;
      const Rational coeff = ea->coeff * cb;
      for (const auto& s : generic_structures(index, ta.id, tb.id)) {
        const StableGraph& gamma = index.graph(s.gamma);
        const Rational w = coeff / Rational(static_cast<unsigned long>(index.aut_order(s.gamma)));
        expand_structure(index, s, ta.dec, tb.dec, false, [&](const Decoration& d, int sign) {
          out.add(Term{gamma, d}, sign > 0 ? w : Rational(-w));
        });
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- gluing

TautClass push_glue(const StableGraph& gamma, const std::vector<TautClass>& per_vertex) {
  const int nv = gamma.num_vertices();
  if (static_cast<int>(per_vertex.size()) != nv)
    throw ValidationError("shape", "push_glue needs one class per vertex");
  std::vector<std::vector<int>> local(nv);
  for (int v = 0; v < nv; ++v) {
    local[v] = gamma.half_edges_at(v);
    const Ambient& a = per_vertex[v].ambient();
    if (per_vertex[v].is_zero()) return TautClass(Ambient::of(gamma));
    if (a.num_components() != 1 || a.genus[0] != gamma.genus[v] ||
        a.labels[0].size() != local[v].size())
      throw ValidationError("shape", "vertex class ambient does not match the vertex");
  }
  TautClass out(Ambient::of(gamma));
  std::vector<const TautClass::Entry*> choice(nv);
  std::function<void(int, Rational)> rec = [&](int v, Rational coeff) {
    if (v == nv) {
      Term t{gamma, Decoration::empty(gamma)};
      StableGraph& g = t.graph;
      for (int w = 0; w < nv; ++w) {
        const Term& part = choice[w]->term;
        const auto& labels = per_vertex[w].ambient().labels[0];
        std::vector<int> vmap(part.graph.num_vertices());
        for (int u = 0; u < part.graph.num_vertices(); ++u) {
          vmap[u] = (u == 0) ? w : g.add_vertex(part.graph.genus[u], gamma.component[w]);
          if (u == 0) g.genus[w] = part.graph.genus[0];
          t.dec.kappa.resize(g.num_vertices());
          auto& k = t.dec.kappa[vmap[u]];
          k.insert(k.end(), part.dec.kappa[u].begin(), part.dec.kappa[u].end());
        }
        std::vector<int> hmap(part.graph.num_half_edges(), -1);
        for (int h = 0; h < part.graph.num_half_edges(); ++h) {
          if (!part.graph.is_leg(h)) continue;
          auto pos = std::find(labels.begin(), labels.end(), part.graph.leg_label[h]) - labels.begin();
          const int gh = local[w][pos];
          hmap[h] = gh;
          g.vertex_of[gh] = vmap[part.graph.vertex_of[h]];
          t.dec.psi[gh] += part.dec.psi[h];
        }
        for (auto [h, hp] : part.graph.edges()) {
          auto [x, y] = g.add_edge(vmap[part.graph.vertex_of[h]], vmap[part.graph.vertex_of[hp]]);
          t.dec.psi.push_back(part.dec.psi[h]);
          t.dec.psi.push_back(part.dec.psi[hp]);
          (void)x;
          (void)y;
        }
      }
      for (auto& k : t.dec.kappa) std::sort(k.begin(), k.end());
      out.add(t, coeff);
      return;
    }
    for (const auto& [key, e] : per_vertex[v].terms()) {
      choice[v] = &e;
      rec(v + 1, coeff * e.coeff);
    }
  };
  rec(0, Rational(1));
  return out;
}

TautClass tensor(const std::vector<TautClass>& factors) {
  Ambient amb;
  for (const auto& f : factors) {
    amb.genus.insert(amb.genus.end(), f.ambient().genus.begin(), f.ambient().genus.end());
    amb.labels.insert(amb.labels.end(), f.ambient().labels.begin(), f.ambient().labels.end());
  }
  TautClass out(amb);
  for (const auto& f : factors)
    if (f.is_zero()) return out;
  std::vector<const TautClass::Entry*> choice(factors.size());
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational coeff) {
    if (i == factors.size()) {
      Term t;
      int comp_offset = 0;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        const Term& p = choice[j]->term;
        const int voff = t.graph.num_vertices();
        const int hoff = t.graph.num_half_edges();
        for (int v = 0; v < p.graph.num_vertices(); ++v) {
          t.graph.add_vertex(p.graph.genus[v], p.graph.component[v] + comp_offset);
          t.dec.kappa.push_back(p.dec.kappa[v]);
        }
        for (int h = 0; h < p.graph.num_half_edges(); ++h) {
          t.graph.vertex_of.push_back(p.graph.vertex_of[h] + voff);
          t.graph.partner.push_back(p.graph.partner[h] < 0 ? -1 : p.graph.partner[h] + hoff);
          t.graph.leg_label.push_back(p.graph.leg_label[h]);
          t.dec.psi.push_back(p.dec.psi[h]);
        }
        comp_offset += factors[j].ambient().num_components();
      }
      out.add(t, coeff);
      return;
    }
    for (const auto& [key, e] : factors[i].terms()) {
      choice[i] = &e;
      rec(i + 1, coeff * e.coeff);
    }
  };
  rec(0, Rational(1));
  return out;
}

// ---------------------------------------------------------------- forgetful maps

namespace {

Ambient drop_label(const Ambient& a, int label) {
  Ambient out = a;
  for (auto& l : out.labels) l.erase(std::remove(l.begin(), l.end(), label), l.end());
  return out;
}

// Removes half-edge h (a leg) from the term, renumbering the rest.
Term erase_half_edge(const Term& t, int h) {
  Term out;
  out.graph.genus = t.graph.genus;
  out.graph.component = t.graph.component;
  out.dec.kappa = t.dec.kappa;
  std::vector<int> remap(t.graph.num_half_edges(), -1);
  int next = 0;
  for (int x = 0; x < t.graph.num_half_edges(); ++x)
    if (x != h) remap[x] = next++;
  for (int x = 0; x < t.graph.num_half_edges(); ++x) {
    if (x == h) continue;
    out.graph.vertex_of.push_back(t.graph.vertex_of[x]);
    out.graph.partner.push_back(t.graph.partner[x] < 0 ? -1 : remap[t.graph.partner[x]]);
    out.graph.leg_label.push_back(t.graph.leg_label[x]);
    out.dec.psi.push_back(t.dec.psi[x]);
  }
  return out;
}

// Removes vertex v and the listed half-edges; `fix` adjusts the rest first.
Term erase_vertex(const Term& t, int v, const std::vector<int>& dead) {
  Term out;
  std::vector<int> vremap(t.graph.num_vertices(), -1);
  for (int u = 0; u < t.graph.num_vertices(); ++u) {
    if (u == v) continue;
    vremap[u] = out.graph.add_vertex(t.graph.genus[u], t.graph.component[u]);
    out.dec.kappa.push_back(t.dec.kappa[u]);
  }
  std::vector<int> remap(t.graph.num_half_edges(), -1);
  int next = 0;
  for (int x = 0; x < t.graph.num_half_edges(); ++x)
    if (std::find(dead.begin(), dead.end(), x) == dead.end()) remap[x] = next++;
  for (int x = 0; x < t.graph.num_half_edges(); ++x) {
    if (remap[x] < 0) continue;
    out.graph.vertex_of.push_back(vremap[t.graph.vertex_of[x]]);
    out.graph.partner.push_back(t.graph.partner[x] < 0 ? -1 : remap[t.graph.partner[x]]);
    out.graph.leg_label.push_back(t.graph.leg_label[x]);
    out.dec.psi.push_back(t.dec.psi[x]);
  }
  return out;
}

}  // namespace

TautClass push_forget(const TautClass& x, int label) {
  const Ambient target = drop_label(x.ambient(), label);
  target.validate();
  TautClass out(target);
  for (const auto& [key, e] : x.terms()) {
    const Term& t = e.term;
    const int hl = t.graph.leg_half_edge(label);
    if (hl < 0) throw ValidationError("legs", "no leg " + std::to_string(label));
    const int v = t.graph.vertex_of[hl];
    std::vector<int> others;
    for (int h : t.graph.half_edges_at(v))
      if (h != hl) others.push_back(h);
    const int gv = t.graph.genus[v];
    const int nv_after = static_cast<int>(others.size());
    if (2 * gv - 2 + nv_after <= 0) {
      // contracted bubble: only the degree-zero part survives
      if (t.dec.vertex_degree(t.graph, v) != 0) continue;
      const int h1 = others[0], h2 = others[1];
      Term u = t;
      const bool e1 = !t.graph.is_leg(h1), e2 = !t.graph.is_leg(h2);
      if (e1 && e2) {
        const int p1 = t.graph.partner[h1], p2 = t.graph.partner[h2];
        if (p1 == h2) throw ValidationError("stability", "forgetting leaves an unstable component");
        u.graph.partner[p1] = p2;
        u.graph.partner[p2] = p1;
      } else if (e1 || e2) {
        const int he = e1 ? h1 : h2, hleg = e1 ? h2 : h1;
        const int p = t.graph.partner[he];
        u.graph.partner[p] = -1;
        u.graph.leg_label[p] = t.graph.leg_label[hleg];
      } else {
        throw ValidationError("stability", "forgetting leaves an unstable component");
      }
      out.add(erase_vertex(u, v, {hl, h1, h2}), e.coeff);
      continue;
    }
    const int m = t.dec.psi[hl];
    const auto& ks = t.dec.kappa[v];
    const int nk = static_cast<int>(ks.size());
    for (unsigned mask = 0; mask < (1U << nk); ++mask) {
      int ex = m;
      std::vector<int> rest;
      for (int i = 0; i < nk; ++i) {
        if (mask >> i & 1U)
          ex += ks[i];
        else
          rest.push_back(ks[i]);
      }
      if (ex >= 1) {
        Term u = t;
        u.dec.psi[hl] = 0;
        u.dec.kappa[v] = rest;
        u.dec.kappa[v].push_back(ex - 1);
        out.add(erase_half_edge(u, hl), e.coeff);
      } else {
        for (int j : others) {
          if (t.dec.psi[j] == 0) continue;
          Term u = t;
          u.dec.psi[j] -= 1;
          out.add(erase_half_edge(u, hl), e.coeff);
        }
      }
    }
  }
  return out;
}

TautClass pull_forget(const TautClass& x, int label, int comp) {
  if (x.ambient().component_of(label) >= 0) throw ValidationError("legs", "label already present");
  Ambient target = x.ambient();
  target.labels.at(comp).push_back(label);
  std::sort(target.labels[comp].begin(), target.labels[comp].end());
  TautClass out(target);
  for (const auto& [key, e] : x.terms()) {
    const Term& t = e.term;
    for (int v = 0; v < t.graph.num_vertices(); ++v) {
      if (t.graph.component[v] != comp) continue;
      const auto& ks = t.dec.kappa[v];
      const int nk = static_cast<int>(ks.size());
      // Π(κ_b - ψ_new^b) · Πψ^a
      for (unsigned mask = 0; mask < (1U << nk); ++mask) {
        Term u = t;
        int ex = 0;
        std::vector<int> rest;
        for (int i = 0; i < nk; ++i) {
          if (mask >> i & 1U)
            ex += ks[i];
          else
            rest.push_back(ks[i]);
        }
        u.dec.kappa[v] = rest;
        u.graph.add_leg(v, label);
        u.dec.psi.push_back(ex);
        out.add(u, (__builtin_popcount(mask) % 2 ? Rational(-e.coeff) : e.coeff));
      }
      // bubbles carrying a decorated half-edge and the new leg
      for (int h : t.graph.half_edges_at(v)) {
        if (t.dec.psi[h] == 0) continue;
        Term u = t;
        const int b = u.graph.add_vertex(0, comp);
        u.dec.kappa.push_back({});
        u.graph.vertex_of[h] = b;
        const int a_h = u.dec.psi[h];
        u.dec.psi[h] = 0;
        u.graph.add_leg(b, label);
        u.dec.psi.push_back(0);
        auto [node, node_b] = u.graph.add_edge(v, b);
        u.dec.psi.push_back(a_h - 1);
        u.dec.psi.push_back(0);
        (void)node;
        (void)node_b;
        out.add(u, -e.coeff);
      }
    }
  }
  return out;
}

TautClass relabel(const TautClass& x, const std::map<int, int>& labels, const Ambient& target) {
  TautClass out(target);
  for (const auto& [key, e] : x.terms()) {
    Term t = e.term;
    for (int h = 0; h < t.graph.num_half_edges(); ++h) {
      if (!t.graph.is_leg(h)) continue;
      auto it = labels.find(t.graph.leg_label[h]);
      if (it != labels.end()) t.graph.leg_label[h] = it->second;
    }
    out.add(t, e.coeff);
  }
  return out;
}

}  // namespace spintaut
