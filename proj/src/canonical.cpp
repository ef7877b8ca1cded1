#include "spintaut/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace spintaut {

namespace {

using Code = std::vector<long>;

struct EdgeEnd {
  int pos;
  long color;
  auto operator<=>(const EdgeEnd&) const = default;
};

class Searcher {
 public:
  Searcher(const StableGraph& g, const Coloring& colors) : g_(g), colors_(colors) {
    for (int h = 0; h < g.num_half_edges(); ++h)
      if (g.is_leg(h)) legs_.push_back(h);
    std::sort(legs_.begin(), legs_.end(),
              [&](int a, int b) { return g.leg_label[a] < g.leg_label[b]; });
    edges_ = g.edges();
    refine();
  }

  long hcolor(int h) const { return colors_.half_edge.empty() ? 0 : colors_.half_edge[h]; }

  const std::vector<long>& vcolor(int v) const {
    static const std::vector<long> kEmpty;
    return colors_.vertex.empty() ? kEmpty : colors_.vertex[v];
  }

  // Runs the search; keeps every optimal ordering when `keep_all`.
  void run(bool keep_all) {
    std::vector<int> pos(g_.num_vertices());
    std::vector<std::vector<int>> members = cells_;
    std::function<void(std::size_t, int)> rec = [&](std::size_t cell, int offset) {
      if (cell == members.size()) {
        Code c = code(pos);
        if (best_.empty() || c < best_) {
          best_ = std::move(c);
          optimal_.clear();
          optimal_.push_back(pos);
          count_ = 1;
        } else if (c == best_) {
          ++count_;
          if (keep_all) optimal_.push_back(pos);
        }
        return;
      }
      auto& m = members[cell];
      std::sort(m.begin(), m.end());
      do {
        for (std::size_t i = 0; i < m.size(); ++i) pos[m[i]] = offset + static_cast<int>(i);
        rec(cell + 1, offset + static_cast<int>(m.size()));
      } while (std::next_permutation(m.begin(), m.end()));
    };
    rec(0, 0);
  }

  std::pair<EdgeEnd, EdgeEnd> ends(const std::vector<int>& pos, int a, int b) const {
    EdgeEnd x{pos[g_.vertex_of[a]], hcolor(a)};
    EdgeEnd y{pos[g_.vertex_of[b]], hcolor(b)};
    return y < x ? std::make_pair(y, x) : std::make_pair(x, y);
  }

  Code code(const std::vector<int>& pos) const {
    const int nv = g_.num_vertices();
    Code c{nv, g_.num_half_edges()};
    std::vector<int> at(nv);
    for (int v = 0; v < nv; ++v) at[pos[v]] = v;
    for (int p = 0; p < nv; ++p) {
      int v = at[p];
      c.push_back(g_.component[v]);
      c.push_back(g_.genus[v]);
      const auto& vc = vcolor(v);
      c.push_back(static_cast<long>(vc.size()));
      c.insert(c.end(), vc.begin(), vc.end());
    }
    for (int h : legs_) {
      c.push_back(g_.leg_label[h]);
      c.push_back(pos[g_.vertex_of[h]]);
      c.push_back(hcolor(h));
    }
    std::vector<std::pair<EdgeEnd, EdgeEnd>> es;
    es.reserve(edges_.size());
    for (auto [a, b] : edges_) es.push_back(ends(pos, a, b));
    std::sort(es.begin(), es.end());
    for (const auto& [x, y] : es) {
      c.push_back(x.pos);
      c.push_back(x.color);
      c.push_back(y.pos);
      c.push_back(y.color);
    }
    return c;
  }

  const StableGraph& g_;
  const Coloring& colors_;
  std::vector<int> legs_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> cells_;
  Code best_;
  std::vector<std::vector<int>> optimal_;
  std::uint64_t count_ = 0;

 private:
  void refine() {
    const int nv = g_.num_vertices();
    std::vector<Code> keys(nv);
    for (int v = 0; v < nv; ++v) {
      Code& k = keys[v];
      k = {g_.component[v], g_.genus[v]};
      const auto& vc = vcolor(v);
      k.push_back(static_cast<long>(vc.size()));
      k.insert(k.end(), vc.begin(), vc.end());
      std::vector<std::pair<long, long>> legs, loops;
      int valence = 0;
      for (int h = 0; h < g_.num_half_edges(); ++h) {
        if (g_.vertex_of[h] != v) continue;
        ++valence;
        if (g_.is_leg(h)) {
          legs.emplace_back(g_.leg_label[h], hcolor(h));
        } else if (g_.vertex_of[g_.partner[h]] == v && h < g_.partner[h]) {
          long c1 = hcolor(h), c2 = hcolor(g_.partner[h]);
          loops.emplace_back(std::min(c1, c2), std::max(c1, c2));
        }
      }
      std::sort(legs.begin(), legs.end());
      std::sort(loops.begin(), loops.end());
      k.push_back(valence);
      k.push_back(static_cast<long>(legs.size()));
      for (auto [l, c] : legs) k.insert(k.end(), {l, c});
      k.push_back(static_cast<long>(loops.size()));
      for (auto [c1, c2] : loops) k.insert(k.end(), {c1, c2});
    }
    std::vector<int> rank = ranks(keys);
    int distinct = 1 + *std::max_element(rank.begin(), rank.end());
    while (true) {
      for (int v = 0; v < nv; ++v) {
        std::vector<std::tuple<long, long, long>> around;
        for (int h = 0; h < g_.num_half_edges(); ++h) {
          if (g_.vertex_of[h] != v || g_.is_leg(h)) continue;
          int w = g_.vertex_of[g_.partner[h]];
          if (w == v) continue;
          around.emplace_back(rank[w], hcolor(h), hcolor(g_.partner[h]));
        }
        std::sort(around.begin(), around.end());
        Code& k = keys[v];
        k = {rank[v]};
        for (auto [r, c1, c2] : around) k.insert(k.end(), {r, c1, c2});
      }
      std::vector<int> next = ranks(keys);
      int next_distinct = 1 + *std::max_element(next.begin(), next.end());
      rank = std::move(next);
      if (next_distinct == distinct) break;
      distinct = next_distinct;
    }
    cells_.assign(distinct, {});
    for (int v = 0; v < nv; ++v) cells_[rank[v]].push_back(v);
  }

  static std::vector<int> ranks(const std::vector<Code>& keys) {
    std::map<Code, int> index;
    for (const auto& k : keys) index.emplace(k, 0);
    int next = 0;
    for (auto& [k, r] : index) r = next++;
    std::vector<int> out(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v) out[v] = index.at(keys[v]);
    return out;
  }
};

std::uint64_t edge_symmetry(const Searcher& s, const std::vector<int>& pos) {
  std::vector<std::pair<EdgeEnd, EdgeEnd>> es;
  for (auto [a, b] : s.edges_) es.push_back(s.ends(pos, a, b));
  std::sort(es.begin(), es.end());
  std::uint64_t factor = 1;
  for (std::size_t i = 0; i < es.size();) {
    std::size_t j = i;
    while (j < es.size() && es[j] == es[i]) ++j;
    for (std::size_t m = 2; m <= j - i; ++m) factor *= m;
    if (es[i].first == es[i].second) factor <<= (j - i);
    i = j;
  }
  return factor;
}

}  // namespace

CanonicalForm canonicalize(const StableGraph& g, const Coloring& colors) {
  Searcher s(g, colors);
  s.run(false);
  const std::vector<int>& pos = s.optimal_.front();
  CanonicalForm out;
  out.code = s.best_;
  out.aut_order = s.count_ * edge_symmetry(s, pos);
  out.vertex_map = pos;
  const int nv = g.num_vertices();
  std::vector<int> at(nv);
  for (int v = 0; v < nv; ++v) at[pos[v]] = v;
  for (int p = 0; p < nv; ++p) out.graph.add_vertex(g.genus[at[p]], g.component[at[p]]);
  out.half_edge_map.assign(g.num_half_edges(), -1);
  for (int h : s.legs_) out.half_edge_map[h] = out.graph.add_leg(pos[g.vertex_of[h]], g.leg_label[h]);
  struct Item {
    std::pair<EdgeEnd, EdgeEnd> key;
    int first, second;
  };
  std::vector<Item> items;
  for (auto [a, b] : s.edges_) {
    auto key = s.ends(pos, a, b);
    EdgeEnd ea{pos[g.vertex_of[a]], s.hcolor(a)};
    if (ea == key.first)
      items.push_back({key, a, b});
    else
      items.push_back({key, b, a});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& x, const Item& y) { return x.key < y.key; });
  for (const auto& it : items) {
    auto [h1, h2] = out.graph.add_edge(it.key.first.pos, it.key.second.pos);
    out.half_edge_map[it.first] = h1;
    out.half_edge_map[it.second] = h2;
  }
  return out;
}

std::vector<std::vector<int>> automorphisms(const StableGraph& g, const Coloring& colors) {
  Searcher s(g, colors);
  s.run(true);
  const int nv = g.num_vertices();
  const int nh = g.num_half_edges();

  // edges grouped by their unordered colored endpoints
  using End = std::pair<int, long>;
  auto key_of = [&](const std::vector<int>& vmap, int a, int b) {
    End x{vmap[g.vertex_of[a]], s.hcolor(a)}, y{vmap[g.vertex_of[b]], s.hcolor(b)};
    return y < x ? std::make_pair(y, x) : std::make_pair(x, y);
  };
  std::vector<int> identity(nv);
  std::iota(identity.begin(), identity.end(), 0);
  std::map<std::pair<End, End>, std::vector<int>> groups;
  for (std::size_t e = 0; e < s.edges_.size(); ++e)
    groups[key_of(identity, s.edges_[e].first, s.edges_[e].second)].push_back(static_cast<int>(e));

  std::vector<std::vector<int>> out;
  for (const auto& order : s.optimal_) {
    // tau(v) = order^{-1}(order0(v))
    std::vector<int> inv(nv);
    for (int v = 0; v < nv; ++v) inv[order[v]] = v;
    std::vector<int> tau(nv);
    for (int v = 0; v < nv; ++v) tau[v] = inv[s.optimal_.front()[v]];
    std::vector<int> perm(nh, -1);
    for (int h : s.legs_) perm[h] = g.leg_half_edge(g.leg_label[h]);

    struct Choice {
      std::vector<int> source, target;
      bool flippable;
    };
    std::vector<Choice> choices;
    for (const auto& [key, members] : groups) {
      auto [a0, b0] = s.edges_[members.front()];
      auto image = key_of(tau, a0, b0);
      Choice c{members, groups.at(image), image.first == image.second};
      choices.push_back(std::move(c));
    }
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == choices.size()) {
        out.push_back(perm);
        return;
      }
      Choice& c = choices[i];
      std::vector<int> target = c.target;
      std::sort(target.begin(), target.end());
      const std::size_t m = target.size();
      const std::uint64_t flips = c.flippable ? (std::uint64_t{1} << m) : 1;
      do {
        for (std::uint64_t f = 0; f < flips; ++f) {
          for (std::size_t j = 0; j < m; ++j) {
            auto [a, b] = s.edges_[c.source[j]];
            auto [x, y] = s.edges_[target[j]];
            bool straight = g.vertex_of[x] == tau[g.vertex_of[a]] && s.hcolor(x) == s.hcolor(a) &&
                            g.vertex_of[y] == tau[g.vertex_of[b]] && s.hcolor(y) == s.hcolor(b);
            if (c.flippable && (f >> j & 1U)) straight = !straight;
            perm[a] = straight ? x : y;
            perm[b] = straight ? y : x;
          }
          rec(i + 1);
        }
      } while (std::next_permutation(target.begin(), target.end()));
    };
    rec(0);
  }
  return out;
}

}  // namespace spintaut
