#pragma once
// Brute-force stable-graph generation used as an independent oracle.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "spintaut/graph.hpp"

namespace oracle {

struct Multigraph {
  std::vector<int> genus;
  std::vector<int> leg_at;                 // leg i+1 sits at leg_at[i]
  std::vector<std::pair<int, int>> edges;  // i <= j
};

inline std::vector<int> iso_key(const Multigraph& m) {
  const int nv = static_cast<int>(m.genus.size());
  std::vector<int> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> key;
    std::vector<int> g(nv);
    for (int v = 0; v < nv; ++v) g[perm[v]] = m.genus[v];
    key.insert(key.end(), g.begin(), g.end());
    for (int l : m.leg_at) key.push_back(perm[l]);
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : m.edges) es.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
    std::sort(es.begin(), es.end());
    for (auto [a, b] : es) key.insert(key.end(), {a, b});
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool connected(int nv, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      int w = a == v ? b : (b == v ? a : -1);
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

/// Every stable graph of type (g, n), up to isomorphism, by exhaustive search.
inline std::vector<Multigraph> brute_force_graphs(int g, int n) {
  std::vector<Multigraph> out;
  std::vector<std::vector<int>> seen;
  const int max_v = std::max(1, 2 * g - 2 + n);
  for (int nv = 1; nv <= max_v; ++nv) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < nv; ++i)
      for (int j = i; j < nv; ++j) slots.emplace_back(i, j);
    std::vector<int> genus(nv, 0);
    // genus vectors
    std::vector<std::vector<int>> genera;
    std::function<void(int, int)> gen = [&](int v, int left) {
      if (v == nv) {
        genera.push_back(genus);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        genus[v] = x;
        gen(v + 1, left - x);
      }
    };
    gen(0, g);
    for (const auto& gv : genera) {
      const int sum = std::accumulate(gv.begin(), gv.end(), 0);
      const int ne = g - sum + nv - 1;
      if (ne < nv - 1) continue;
      // multisets of ne slots
      std::vector<int> pick(ne, 0);
      std::function<void(int, int)> choose = [&](int i, int from) {
        if (i == ne) {
          std::vector<std::pair<int, int>> edges;
          for (int p : pick) edges.push_back(slots[p]);
          if (!connected(nv, edges)) return;
          std::vector<int> legs(n, 0);
          std::function<void(int)> place = [&](int l) {
            if (l == n) {
              std::vector<int> val(nv, 0);
              for (auto [a, b] : edges) {
                ++val[a];
                ++val[b];
              }
              for (int x : legs) ++val[x];
              for (int v = 0; v < nv; ++v)
                if (2 * gv[v] - 2 + val[v] <= 0) return;
              Multigraph m{gv, legs, edges};
              auto key = iso_key(m);
              if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                seen.push_back(key);
                out.push_back(m);
              }
              return;
            }
            for (int v = 0; v < nv; ++v) {
              legs[l] = v;
              place(l + 1);
            }
          };
          place(0);
          return;
        }
        for (int p = from; p < static_cast<int>(slots.size()); ++p) {
          pick[i] = p;
          choose(i + 1, p);
        }
      };
      choose(0, 0);
    }
  }
  return out;
}

inline spintaut::StableGraph to_stable_graph(const Multigraph& m) {
  spintaut::StableGraph s;
  for (int gv : m.genus) s.add_vertex(gv);
  for (std::size_t i = 0; i < m.leg_at.size(); ++i) s.add_leg(m.leg_at[i], static_cast<int>(i) + 1);
  for (auto [a, b] : m.edges) s.add_edge(a, b);
  return s;
}

/// |Aut| by trying every half-edge permutation.
inline long brute_force_aut(const spintaut::StableGraph& s) {
  const int nh = s.num_half_edges();
  std::vector<int> perm(nh);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    std::vector<int> vmap(s.num_vertices(), -1);
    for (int h = 0; h < nh && ok; ++h) {
      int x = perm[h];
      if (s.is_leg(h) != s.is_leg(x)) ok = false;
      else if (s.is_leg(h) && s.leg_label[h] != s.leg_label[x]) ok = false;
      else if (!s.is_leg(h) && perm[s.partner[h]] != s.partner[x]) ok = false;
      int& tv = vmap[s.vertex_of[h]];
      if (tv < 0) tv = s.vertex_of[x];
      else if (tv != s.vertex_of[x]) ok = false;
    }
    for (int v = 0; v < s.num_vertices() && ok; ++v)
      if (vmap[v] >= 0 && s.genus[vmap[v]] != s.genus[v]) ok = false;
    if (ok) {
      std::vector<int> img = vmap;
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) ok = false;
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle
