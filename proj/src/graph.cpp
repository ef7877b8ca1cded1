#include "spintaut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spintaut {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

int StableGraph::num_edges() const {
  int count = 0;
  for (int p : partner) count += (p >= 0);
  return count / 2;
}

int StableGraph::num_legs() const {
  int count = 0;
  for (int p : partner) count += (p < 0);
  return count;
}

int StableGraph::num_components() const {
  std::set<int> comps(component.begin(), component.end());
  return static_cast<int>(comps.size());
}

int StableGraph::h1() const { return num_edges() - num_vertices() + connected_pieces(*this); }

int StableGraph::total_genus() const {
  return std::accumulate(genus.begin(), genus.end(), 0) + h1();
}

int StableGraph::valence(int v) const {
  return static_cast<int>(std::count(vertex_of.begin(), vertex_of.end(), v));
}

std::vector<std::pair<int, int>> StableGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < num_half_edges(); ++h)
    if (partner[h] > h) out.emplace_back(h, partner[h]);
  return out;
}

std::vector<int> StableGraph::half_edges_at(int v) const {
  std::vector<int> out;
  for (int h = 0; h < num_half_edges(); ++h)
    if (vertex_of[h] == v) out.push_back(h);
  return out;
}

int StableGraph::leg_half_edge(int label) const {
  for (int h = 0; h < num_half_edges(); ++h)
    if (partner[h] < 0 && leg_label[h] == label) return h;
  return -1;
}

std::vector<int> StableGraph::leg_labels() const {
  std::vector<int> out;
  for (int h = 0; h < num_half_edges(); ++h)
    if (partner[h] < 0) out.push_back(leg_label[h]);
  std::sort(out.begin(), out.end());
  return out;
}

int StableGraph::add_vertex(int g, int comp) {
  genus.push_back(g);
  component.push_back(comp);
  return num_vertices() - 1;
}

int StableGraph::add_leg(int v, int label) {
  vertex_of.push_back(v);
  partner.push_back(-1);
  leg_label.push_back(label);
  return num_half_edges() - 1;
}

std::pair<int, int> StableGraph::add_edge(int v, int w) {
  int h = num_half_edges();
  vertex_of.push_back(v);
  vertex_of.push_back(w);
  partner.push_back(h + 1);
  partner.push_back(h);
  leg_label.push_back(0);
  leg_label.push_back(0);
  return {h, h + 1};
}

void StableGraph::validate() const {
  const int nv = num_vertices();
  const int nh = num_half_edges();
  if (static_cast<int>(component.size()) != nv)
    throw ValidationError("shape", "component labels do not match vertex count");
  if (static_cast<int>(partner.size()) != nh || static_cast<int>(leg_label.size()) != nh)
    throw ValidationError("shape", "half-edge arrays have inconsistent sizes");
  for (int v = 0; v < nv; ++v)
    if (genus[v] < 0) throw ValidationError("genus", "negative vertex genus");
  std::set<int> labels;
  for (int h = 0; h < nh; ++h) {
    if (vertex_of[h] < 0 || vertex_of[h] >= nv)
      throw ValidationError("incidence", "half-edge attached to missing vertex");
    int p = partner[h];
    if (p < 0) {
      if (!labels.insert(leg_label[h]).second)
        throw ValidationError("legs", "duplicate leg label " + std::to_string(leg_label[h]));
      continue;
    }
    if (p == h || p >= nh || partner[p] != h)
      throw ValidationError("edge pairing", "half-edge " + std::to_string(h) + " is not paired");
    if (component[vertex_of[h]] != component[vertex_of[p]])
      throw ValidationError("edge pairing", "edge joins different components");
  }
  for (int v = 0; v < nv; ++v)
    if (2 * genus[v] - 2 + valence(v) <= 0)
      throw ValidationError("stability", "vertex " + std::to_string(v) + " is unstable");
  // one connected piece per component label
  std::set<int> comps(component.begin(), component.end());
  if (connected_pieces(*this) != static_cast<int>(comps.size()))
    throw ValidationError("connectivity", "a component is disconnected");
}

StableGraph StableGraph::trivial(int g, int n) {
  StableGraph out;
  int v = out.add_vertex(g);
  for (int i = 1; i <= n; ++i) out.add_leg(v, i);
  return out;
}

int connected_pieces(const StableGraph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : g.edges()) {
    int ra = find_root(parent, g.vertex_of[a]);
    int rb = find_root(parent, g.vertex_of[b]);
    if (ra != rb) parent[ra] = rb;
  }
  int pieces = 0;
  for (int v = 0; v < g.num_vertices(); ++v) pieces += (find_root(parent, v) == v);
  return pieces;
}

Contraction contract(const StableGraph& g, std::uint64_t mask) {
  const auto edges = g.edges();
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> contracted(g.num_half_edges(), false);
  std::vector<std::pair<int, int>> cut;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!(mask >> e & 1U)) continue;
    auto [a, b] = edges[e];
    contracted[a] = contracted[b] = true;
    cut.push_back(edges[e]);
  }
  // each contracted edge closing a cycle adds one to the genus
  std::vector<int> cycles_at;
  for (auto [a, b] : cut) {
    int ra = find_root(parent, g.vertex_of[a]);
    int rb = find_root(parent, g.vertex_of[b]);
    if (ra == rb) {
      cycles_at.push_back(ra);
    } else {
      parent[ra] = rb;
    }
  }
  Contraction out;
  out.vertex_map.assign(g.num_vertices(), -1);
  std::vector<int> root_to_new(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = find_root(parent, v);
    if (root_to_new[r] < 0) root_to_new[r] = out.graph.add_vertex(0, g.component[v]);
    out.vertex_map[v] = root_to_new[r];
    out.graph.genus[root_to_new[r]] += g.genus[v];
  }
  for (int r : cycles_at) out.graph.genus[root_to_new[find_root(parent, r)]] += 1;
  out.half_edge_map.assign(g.num_half_edges(), -1);
  int next = 0;
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (!contracted[h]) out.half_edge_map[h] = next++;
  out.graph.vertex_of.resize(next);
  out.graph.partner.resize(next);
  out.graph.leg_label.resize(next);
  for (int h = 0; h < g.num_half_edges(); ++h) {
    int nh = out.half_edge_map[h];
    if (nh < 0) continue;
    out.graph.vertex_of[nh] = out.vertex_map[g.vertex_of[h]];
    out.graph.partner[nh] = g.partner[h] < 0 ? -1 : out.half_edge_map[g.partner[h]];
    out.graph.leg_label[nh] = g.leg_label[h];
  }
  return out;
}

}  // namespace spintaut
