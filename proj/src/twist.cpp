#include "spintaut/twist.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spintaut/canonical.hpp"
#include "spintaut/enumerate.hpp"

namespace spintaut {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

int vertex_target(const StableGraph& g, int v, int k) { return k * (2 * g.genus[v] - 2 + g.valence(v)); }

// Spanning forest: parent half-edge per vertex (-1 at roots) and a vertex order
// in which every vertex comes after its parent.
struct Forest {
  std::vector<int> parent_half;  // half-edge at v pointing to its parent
  std::vector<int> order;
  std::vector<bool> tree_edge;  // per edge index
};

Forest spanning_forest(const StableGraph& g) {
  const int nv = g.num_vertices();
  const auto edges = g.edges();
  Forest f;
  f.parent_half.assign(nv, -1);
  f.tree_edge.assign(edges.size(), false);
  std::vector<int> edge_of(g.num_half_edges(), -1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edge_of[edges[e].first] = static_cast<int>(e);
    edge_of[edges[e].second] = static_cast<int>(e);
  }
  std::vector<bool> seen(nv, false);
  for (int root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<int> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      f.order.push_back(v);
      for (int h : g.half_edges_at(v)) {
        if (g.is_leg(h)) continue;
        const int w = g.vertex_of[g.partner[h]];
        if (seen[w]) continue;
        seen[w] = true;
        f.parent_half[w] = g.partner[h];
        f.tree_edge[edge_of[h]] = true;
        queue.push_back(w);
      }
    }
  }
  return f;
}

void check_signature(int g, const std::vector<int>& a, int k) {
  if (k <= 0 || k % 2 == 0) throw ValidationError("parity", "k must be odd and positive");
  long sum = 0;
  for (int x : a) {
    if (x % 2 == 0) throw ValidationError("parity", "every entry of a must be odd");
    sum += x;
  }
  const long n = static_cast<long>(a.size());
  if (sum != static_cast<long>(k) * (2 * g - 2 + n))
    throw ValidationError("degree", "sum of a must equal k(2g-2+n)");
}

}  // namespace

std::vector<std::vector<long>> odd_weightings(const StableGraph& g, const std::vector<int>& a, int k,
                                              int r) {
  const long m = 2L * r;
  const auto edges = g.edges();
  const Forest f = spanning_forest(g);
  std::vector<int> free_edges;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!f.tree_edge[e]) free_edges.push_back(static_cast<int>(e));

  std::vector<long> w(g.num_half_edges(), 0);
  for (int h = 0; h < g.num_half_edges(); ++h) {
    if (!g.is_leg(h)) continue;
    const long ai = a.at(g.leg_label[h] - 1);
    w[h] = mod(ai, m);
    if (w[h] % 2 == 0) return {};
  }
  std::vector<std::vector<long>> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i < free_edges.size()) {
      auto [h, hp] = edges[free_edges[i]];
      for (long x = 1; x < m; x += 2) {
        w[h] = x;
        w[hp] = mod(-x, m);
        rec(i + 1);
      }
      return;
    }
    // children before parents
    for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
      const int v = *it;
      const int up = f.parent_half[v];
      long sum = 0;
      for (int h : g.half_edges_at(v))
        if (h != up) sum += w[h];
      const long need = mod(vertex_target(g, v, k) - sum, m);
      if (up < 0) {
        if (need != 0) return;
        continue;
      }
      if (need % 2 == 0) return;
      w[up] = need;
      w[g.partner[up]] = mod(-need, m);
    }
    std::vector<long> products;
    products.reserve(edges.size());
    for (auto [h, hp] : edges) products.push_back(w[h] * w[hp]);
    out.push_back(std::move(products));
  };
  rec(0);
  return out;
}

Integer weighting_moment_sum(const StableGraph& g, const std::vector<int>& a, int k, int r,
                             const std::vector<int>& edge_exponents) {
  Integer total = 0;
  for (const auto& products : odd_weightings(g, a, k, r)) {
    Integer term = 1;
    for (std::size_t e = 0; e < products.size(); ++e) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), Integer(products[e]).get_mpz_t(), edge_exponents.at(e));
      term *= p;
    }
    total += term;
  }
  return total;
}

std::vector<int> TwistedGraph::vertex_twist(int v) const {
  std::vector<int> out;
  for (int h : graph.half_edges_at(v)) out.push_back(twist[h]);
  return out;
}

namespace {

// All ways to write `target` as an ordered sum of `parts` odd multiples of k.
void compositions(int target, int parts, int k, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (target == 0) out.push_back(cur);
    return;
  }
  for (int x = k; x <= target - (parts - 1) * k; x += 2 * k) {
    cur.push_back(x);
    compositions(target - x, parts - 1, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TwistedGraph> simple_stars_odd(int g, const std::vector<int>& a, int k) {
  check_signature(g, a, k);
  const int n = static_cast<int>(a.size());
  std::map<std::vector<long>, TwistedGraph> found;
  std::vector<std::vector<long>> order;
  for (const auto& gamma : stable_graphs(g, n)) {
    for (int c = 0; c < gamma.num_vertices(); ++c) {
      bool star = true;
      for (auto [h, hp] : gamma.edges()) {
        const int x = gamma.vertex_of[h], y = gamma.vertex_of[hp];
        if ((x == c) == (y == c)) star = false;
      }
      if (!star) continue;
      // outlying legs must be positive multiples of k
      bool ok = true;
      std::vector<int> target(gamma.num_vertices(), 0);
      for (int v = 0; v < gamma.num_vertices(); ++v) target[v] = vertex_target(gamma, v, k);
      for (int h = 0; h < gamma.num_half_edges(); ++h) {
        if (!gamma.is_leg(h)) continue;
        const int v = gamma.vertex_of[h];
        const int ai = a[gamma.leg_label[h] - 1];
        if (v != c && (ai <= 0 || ai % k != 0)) ok = false;
        target[v] -= ai;
      }
      if (!ok) continue;
      std::vector<int> outliers;
      std::vector<std::vector<std::vector<int>>> options;
      for (int v = 0; v < gamma.num_vertices(); ++v) {
        if (v == c) continue;
        std::vector<int> cur;
        std::vector<std::vector<int>> opts;
        int edges_here = 0;
        for (int h : gamma.half_edges_at(v)) edges_here += gamma.is_leg(h) ? 0 : 1;
        compositions(target[v], edges_here, k, cur, opts);
        outliers.push_back(v);
        options.push_back(std::move(opts));
      }
      std::vector<int> twist(gamma.num_half_edges(), 0);
      for (int h = 0; h < gamma.num_half_edges(); ++h)
        if (gamma.is_leg(h)) twist[h] = a[gamma.leg_label[h] - 1];
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == outliers.size()) {
          Coloring col;
          col.vertex.assign(gamma.num_vertices(), {0});
          col.vertex[c] = {1};
          col.half_edge.assign(twist.begin(), twist.end());
          auto cf = canonicalize(gamma, col);
          if (found.count(cf.code)) return;
          TwistedGraph t;
          t.graph = cf.graph;
          t.twist.assign(gamma.num_half_edges(), 0);
          for (int h = 0; h < gamma.num_half_edges(); ++h) t.twist[cf.half_edge_map[h]] = twist[h];
          t.center = cf.vertex_map[c];
          t.aut = cf.aut_order;
          order.push_back(cf.code);
          found.emplace(cf.code, std::move(t));
          return;
        }
        const int v = outliers[i];
        std::vector<int> hs;
        for (int h : gamma.half_edges_at(v))
          if (!gamma.is_leg(h)) hs.push_back(h);
        for (const auto& values : options[i]) {
          for (std::size_t j = 0; j < hs.size(); ++j) {
            twist[hs[j]] = values[j];
            twist[gamma.partner[hs[j]]] = -values[j];
          }
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
  std::vector<TwistedGraph> out;
  for (const auto& code : order) out.push_back(found.at(code));
  return out;
}

bool BiColoredGraph::leg_below(int label) const {
  const int h = graph.leg_half_edge(label);
  return h >= 0 && level[graph.vertex_of[h]] == -1;
}

std::vector<BiColoredGraph> bicolored(const std::vector<int>& genera,
                                      const std::vector<std::vector<int>>& labels,
                                      const std::map<int, int>& a, bool odd) {
  const std::vector<StableGraph> graphs =
      genera.size() == 1 ? stable_graphs(genera[0], labels[0], 0) : stable_graphs_multi(genera, labels);
  std::map<std::vector<long>, BiColoredGraph> found;
  std::vector<std::vector<long>> order;
  for (const auto& gamma : graphs) {
    const int nv = gamma.num_vertices();
    if (nv < 2 || nv > 20) continue;
    const auto edges = gamma.edges();
    for (unsigned mask = 1; mask + 1 < (1U << nv); ++mask) {
      std::vector<int> level(nv);
      for (int v = 0; v < nv; ++v) level[v] = (mask >> v & 1U) ? -1 : 0;
      bool ok = true;
      for (auto [h, hp] : edges)
        if (level[gamma.vertex_of[h]] == level[gamma.vertex_of[hp]]) ok = false;
      if (!ok) continue;
      std::vector<int> bound(nv), twist(gamma.num_half_edges(), 0);
      for (int v = 0; v < nv; ++v) bound[v] = 2 * gamma.genus[v] - 2 + gamma.valence(v);
      for (int h = 0; h < gamma.num_half_edges(); ++h)
        if (gamma.is_leg(h)) twist[h] = a.at(gamma.leg_label[h]);
      std::vector<int> sum(nv, 0);
      for (int h = 0; h < gamma.num_half_edges(); ++h)
        if (gamma.is_leg(h)) sum[gamma.vertex_of[h]] += twist[h];
      const int step = odd ? 2 : 1;
      std::function<void(std::size_t)> rec = [&](std::size_t e) {
        if (e == edges.size()) {
          for (int v = 0; v < nv; ++v)
            if (sum[v] > bound[v]) return;
          Coloring col;
          col.vertex.resize(nv);
          for (int v = 0; v < nv; ++v) col.vertex[v] = {level[v]};
          col.half_edge.assign(twist.begin(), twist.end());
          auto cf = canonicalize(gamma, col);
          if (found.count(cf.code)) return;
          BiColoredGraph b;
          b.graph = cf.graph;
          b.twist.assign(gamma.num_half_edges(), 0);
          for (int h = 0; h < gamma.num_half_edges(); ++h) b.twist[cf.half_edge_map[h]] = twist[h];
          b.level.assign(nv, 0);
          for (int v = 0; v < nv; ++v) b.level[cf.vertex_map[v]] = level[v];
          for (auto [h, hp] : edges) b.multiplicity *= std::abs(twist[h]);
          b.aut = cf.aut_order;
          order.push_back(cf.code);
          found.emplace(cf.code, std::move(b));
          return;
        }
        auto [h, hp] = edges[e];
        const int top = level[gamma.vertex_of[h]] == 0 ? h : hp;
        const int low = top == h ? hp : h;
        const int vt = gamma.vertex_of[top], vl = gamma.vertex_of[low];
        for (int x = 1; sum[vt] + x <= bound[vt]; x += step) {
          twist[top] = x;
          twist[low] = -x;
          sum[vt] += x;
          sum[vl] -= x;
          rec(e + 1);
          sum[vt] -= x;
          sum[vl] += x;
        }
      };
      rec(0);
    }
  }
  std::vector<BiColoredGraph> out;
  for (const auto& code : order) out.push_back(found.at(code));
  return out;
}

std::vector<BiColoredGraph> bicolored_leg_below(const std::vector<BiColoredGraph>& all, int label) {
  std::vector<BiColoredGraph> out;
  for (const auto& b : all)
    if (b.leg_below(label)) out.push_back(b);
  return out;
}

StableGraph forget_and_stabilize(const StableGraph& g0, const std::vector<int>& labels) {
  const int nh0 = g0.num_half_edges();
  std::vector<bool> vertex_alive(g0.num_vertices(), true), half_alive(nh0, true);
  StableGraph g = g0;
  for (int h = 0; h < nh0; ++h)
    if (g.is_leg(h) && std::find(labels.begin(), labels.end(), g.leg_label[h]) != labels.end())
      half_alive[h] = false;
  auto around = [&](int v) {
    std::vector<int> hs;
    for (int h = 0; h < g.num_half_edges(); ++h)
      if (half_alive[h] && g.vertex_of[h] == v) hs.push_back(h);
    return hs;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (!vertex_alive[v]) continue;
      auto hs = around(v);
      const int val = static_cast<int>(hs.size());
      if (2 * g.genus[v] - 2 + val > 0) continue;
      const int live_vertices = static_cast<int>(std::count(vertex_alive.begin(), vertex_alive.end(), true));
      if (live_vertices == 1) continue;
      if (val == 1) {
        const int h = hs[0];
        if (!g.is_leg(h)) half_alive[g.partner[h]] = false;
        half_alive[h] = false;
      } else if (val == 2) {
        const int h1 = hs[0], h2 = hs[1];
        if (!g.is_leg(h1) && !g.is_leg(h2)) {
          if (g.partner[h1] == h2) continue;
          const int p1 = g.partner[h1], p2 = g.partner[h2];
          g.partner[p1] = p2;
          g.partner[p2] = p1;
        } else {
          const int leg = g.is_leg(h1) ? h1 : h2;
          const int edge = leg == h1 ? h2 : h1;
          if (g.is_leg(edge)) continue;
          const int p = g.partner[edge];
          g.partner[p] = -1;
          g.leg_label[p] = g.leg_label[leg];
        }
        half_alive[h1] = half_alive[h2] = false;
      } else if (val == 0) {
        // isolated genus-0 vertex cannot occur in a connected graph
      }
      vertex_alive[v] = false;
      changed = true;
    }
  }
  StableGraph out;
  std::vector<int> vmap(g.num_vertices(), -1), hmap(g.num_half_edges(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (vertex_alive[v]) vmap[v] = out.add_vertex(g.genus[v], g.component[v]);
  for (int h = 0; h < g.num_half_edges(); ++h) {
    if (!half_alive[h]) continue;
    hmap[h] = out.num_half_edges();
    out.vertex_of.push_back(vmap[g.vertex_of[h]]);
    out.partner.push_back(-1);
    out.leg_label.push_back(g.is_leg(h) ? g.leg_label[h] : 0);
  }
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (half_alive[h] && !g.is_leg(h)) out.partner[hmap[h]] = hmap[g.partner[h]];
  return out;
}

std::vector<BiColoredGraph> bicolored_nontrivial_after(const std::vector<BiColoredGraph>& all,
                                                       const std::vector<int>& forgotten) {
  std::vector<BiColoredGraph> out;
  for (const auto& b : all)
    if (forget_and_stabilize(b.graph, forgotten).num_edges() > 0) out.push_back(b);
  return out;
}

}  // namespace spintaut
