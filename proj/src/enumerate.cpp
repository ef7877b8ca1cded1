#include "spintaut/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "spintaut/canonical.hpp"

namespace spintaut {

namespace {

using Code = std::vector<long>;

void add_degenerations(const StableGraph& g, std::map<Code, StableGraph>& out) {
  auto insert = [&](const StableGraph& x) {
    auto cf = canonicalize(x);
    out.emplace(std::move(cf.code), std::move(cf.graph));
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.genus[v] >= 1) {
      StableGraph x = g;
      x.genus[v] -= 1;
      x.add_edge(v, v);
      insert(x);
    }
    const auto hs = g.half_edges_at(v);
    const int m = static_cast<int>(hs.size());
    for (int g1 = 0; g1 <= g.genus[v]; ++g1) {
      const int g2 = g.genus[v] - g1;
      for (unsigned mask = 0; mask < (1U << m); ++mask) {
        const int k = __builtin_popcount(mask);
        if (2 * g1 - 1 + k <= 0 || 2 * g2 - 1 + (m - k) <= 0) continue;
        StableGraph x = g;
        x.genus[v] = g1;
        int w = x.add_vertex(g2, g.component[v]);
        for (int i = 0; i < m; ++i)
          if (!(mask >> i & 1U)) x.vertex_of[hs[i]] = w;
        x.add_edge(v, w);
        insert(x);
      }
    }
  }
}

std::vector<StableGraph> generate(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    throw ValidationError("stability", "unstable type (" + std::to_string(g) + "," +
                                           std::to_string(n) + ")");
  std::vector<StableGraph> result;
  std::map<Code, StableGraph> level;
  {
    auto cf = canonicalize(StableGraph::trivial(g, n));
    level.emplace(std::move(cf.code), std::move(cf.graph));
  }
  const int max_edges = 3 * g - 3 + n;
  for (int e = 0; e <= max_edges && !level.empty(); ++e) {
    std::map<Code, StableGraph> next;
    for (auto& [code, graph] : level) {
      if (e < max_edges) add_degenerations(graph, next);
      result.push_back(std::move(graph));
    }
    level = std::move(next);
  }
  return result;
}

StableGraph relabel(const StableGraph& g, const std::vector<int>& labels, int comp) {
  StableGraph x = g;
  for (int h = 0; h < x.num_half_edges(); ++h)
    if (x.is_leg(h)) x.leg_label[h] = labels[x.leg_label[h] - 1];
  std::fill(x.component.begin(), x.component.end(), comp);
  return x;
}

}  // namespace

const std::vector<StableGraph>& stable_graphs(int g, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<StableGraph>> memo;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find({g, n});
  if (it == memo.end()) it = memo.emplace(std::make_pair(g, n), generate(g, n)).first;
  return it->second;
}

std::vector<StableGraph> stable_graphs(int g, const std::vector<int>& labels, int comp) {
  const int n = static_cast<int>(labels.size());
  std::vector<StableGraph> out;
  for (const auto& base : stable_graphs(g, n)) out.push_back(canonicalize(relabel(base, labels, comp)).graph);
  return out;
}

std::vector<StableGraph> stable_graphs_multi(const std::vector<int>& genera,
                                             const std::vector<std::vector<int>>& labels) {
  std::vector<std::vector<StableGraph>> families;
  for (std::size_t j = 0; j < genera.size(); ++j)
    families.push_back(stable_graphs(genera[j], labels[j], static_cast<int>(j)));
  std::vector<StableGraph> out;
  std::vector<std::size_t> idx(families.size(), 0);
  if (std::any_of(families.begin(), families.end(), [](const auto& f) { return f.empty(); }))
    return out;
  while (true) {
    std::vector<StableGraph> parts;
    for (std::size_t j = 0; j < families.size(); ++j) parts.push_back(families[j][idx[j]]);
    out.push_back(canonicalize(disjoint_union(parts)).graph);
    std::size_t j = families.size();
    while (j > 0) {
      --j;
      if (++idx[j] < families[j].size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
    if (families.empty()) return out;
  }
}

std::vector<StableGraph> star_trees(int g, int n) {
  std::vector<StableGraph> out;
  for (const auto& x : stable_graphs(g, n)) {
    if (x.h1() != 0) continue;
    if (std::all_of(x.genus.begin(), x.genus.end(), [](int gv) { return gv > 0; })) out.push_back(x);
  }
  return out;
}

std::vector<Backbone> backbones(int g, int n) {
  std::vector<Backbone> out;
  for (const auto& x : stable_graphs(g, n)) {
    if (x.h1() != 0) continue;
    const int center = x.vertex_of[x.leg_half_edge(1)];
    bool star = true;
    for (auto [a, b] : x.edges())
      if (x.vertex_of[a] != center && x.vertex_of[b] != center) star = false;
    if (star) out.push_back({x, center});
  }
  return out;
}

StableGraph disjoint_union(const std::vector<StableGraph>& parts) {
  StableGraph out;
  for (const auto& p : parts) {
    const int voff = out.num_vertices();
    const int hoff = out.num_half_edges();
    for (int v = 0; v < p.num_vertices(); ++v) out.add_vertex(p.genus[v], p.component[v]);
    for (int h = 0; h < p.num_half_edges(); ++h) {
      out.vertex_of.push_back(p.vertex_of[h] + voff);
      out.partner.push_back(p.partner[h] < 0 ? -1 : p.partner[h] + hoff);
      out.leg_label.push_back(p.leg_label[h]);
    }
  }
  return out;
}

}  // namespace spintaut
