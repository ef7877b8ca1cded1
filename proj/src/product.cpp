#include "spintaut/product.hpp"

#include <memory>
#include <mutex>

#include "spintaut/enumerate.hpp"

namespace spintaut {

namespace {

std::vector<StableGraph> ambient_graphs(const Ambient& a) {
  if (a.num_components() == 1) {
    bool standard = true;
    for (std::size_t i = 0; i < a.labels[0].size(); ++i) standard &= a.labels[0][i] == int(i) + 1;
    if (standard) return stable_graphs(a.genus[0], static_cast<int>(a.labels[0].size()));
  }
  if (a.num_components() == 1) return stable_graphs(a.genus[0], a.labels[0], 0);
  return stable_graphs_multi(a.genus, a.labels);
}

std::vector<int> vertex_image(const StableGraph& g, const std::vector<int>& perm) {
  std::vector<int> out(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) out[v] = v;
  for (int h = 0; h < g.num_half_edges(); ++h) out[g.vertex_of[h]] = g.vertex_of[perm[h]];
  return out;
}

}  // namespace

GraphIndex::GraphIndex(const Ambient& a) : ambient_(a) {
  graphs_ = ambient_graphs(a);
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    auto cf = canonicalize(graphs_[i]);
    aut_.push_back(cf.aut_order);
    ids_.emplace(std::move(cf.code), static_cast<int>(i));
    std::vector<int> d;
    for (int v = 0; v < graphs_[i].num_vertices(); ++v) d.push_back(vertex_dimension(graphs_[i], v));
    dims_.push_back(std::move(d));
  }
}

int GraphIndex::id_of(const std::vector<long>& code) const {
  auto it = ids_.find(code);
  if (it == ids_.end()) throw ValidationError("ambient", "graph does not belong to the ambient");
  return it->second;
}

int GraphIndex::id_of_canonical(const StableGraph& g) const { return id_of(canonicalize(g).code); }

const std::vector<GraphIndex::Contracted>& GraphIndex::contractions(int id) const {
  auto it = contractions_.find(id);
  if (it != contractions_.end()) return it->second;
  const StableGraph& g = graphs_[id];
  const int ne = g.num_edges();
  std::vector<Contracted> table;
  table.reserve(std::size_t{1} << ne);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
    auto c = contract(g, mask);
    auto cf = canonicalize(c.graph);
    Contracted entry;
    entry.target = id_of(cf.code);
    entry.half_edge_map.assign(g.num_half_edges(), -1);
    for (int h = 0; h < g.num_half_edges(); ++h)
      if (c.half_edge_map[h] >= 0) entry.half_edge_map[h] = cf.half_edge_map[c.half_edge_map[h]];
    entry.vertex_map.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) entry.vertex_map[v] = cf.vertex_map[c.vertex_map[v]];
    table.push_back(std::move(entry));
  }
  return contractions_.emplace(id, std::move(table)).first->second;
}

const std::vector<std::vector<int>>& GraphIndex::automorphisms(int id) const {
  auto it = automorphisms_.find(id);
  if (it != automorphisms_.end()) return it->second;
  return automorphisms_.emplace(id, spintaut::automorphisms(graphs_[id])).first->second;
}

namespace {

std::mutex& index_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const GraphIndex& graph_index(const Ambient& a) {
  static std::map<Ambient, std::unique_ptr<GraphIndex>> memo;
  std::lock_guard<std::mutex> lock(index_mutex());
  auto it = memo.find(a);
  if (it == memo.end()) it = memo.emplace(a, std::make_unique<GraphIndex>(a)).first;
  return *it->second;
}

const std::vector<Structure>& generic_structures(const GraphIndex& index, int a, int b) {
  static std::map<std::tuple<const GraphIndex*, int, int>, std::vector<Structure>> memo;
  std::lock_guard<std::mutex> lock(index_mutex());
  auto key = std::make_tuple(&index, a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const StableGraph& ga = index.graph(a);
  const StableGraph& gb = index.graph(b);
  const int ea = ga.num_edges();
  const int eb = gb.num_edges();
  const auto& auts_a = index.automorphisms(a);
  const auto& auts_b = index.automorphisms(b);
  const int dim = index.ambient().dimension();
  std::vector<Structure> out;
  for (int id = 0; id < index.size(); ++id) {
    const StableGraph& gamma = index.graph(id);
    const int ne = gamma.num_edges();
    if (ne < std::max(ea, eb) || ne > ea + eb || ne > dim) continue;
    const auto& table = index.contractions(id);
    const auto edges = gamma.edges();
    for (std::uint64_t ma = 0; ma < table.size(); ++ma) {
      if (table[ma].target != a) continue;
      for (std::uint64_t mb = 0; mb < table.size(); ++mb) {
        if ((ma & mb) != 0 || table[mb].target != b) continue;
        std::vector<std::pair<int, int>> excess;
        for (int e = 0; e < ne; ++e)
          if (!((ma | mb) >> e & 1U)) excess.push_back(edges[e]);
        const auto& ca = table[ma];
        const auto& cb = table[mb];
        for (const auto& sa : auts_a) {
          auto va = vertex_image(ga, sa);
          for (const auto& sb : auts_b) {
            auto vb = vertex_image(gb, sb);
            Structure s;
            s.gamma = id;
            s.excess = excess;
            s.a_half.assign(ga.num_half_edges(), -1);
            s.b_half.assign(gb.num_half_edges(), -1);
            for (int h = 0; h < gamma.num_half_edges(); ++h) {
              if (ca.half_edge_map[h] >= 0) s.a_half[sa[ca.half_edge_map[h]]] = h;
              if (cb.half_edge_map[h] >= 0) s.b_half[sb[cb.half_edge_map[h]]] = h;
            }
            s.a_vertex.resize(gamma.num_vertices());
            s.b_vertex.resize(gamma.num_vertices());
            for (int w = 0; w < gamma.num_vertices(); ++w) {
              s.a_vertex[w] = va[ca.vertex_map[w]];
              s.b_vertex[w] = vb[cb.vertex_map[w]];
            }
            out.push_back(std::move(s));
          }
        }
      }
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

BareTerm to_bare(const GraphIndex& index, const Term& t) {
  auto cf = canonicalize(t.graph);
  BareTerm out;
  out.id = index.id_of(cf.code);
  out.dec = Decoration::empty(cf.graph);
  for (int h = 0; h < t.graph.num_half_edges(); ++h) out.dec.psi[cf.half_edge_map[h]] = t.dec.psi[h];
  for (int v = 0; v < t.graph.num_vertices(); ++v) out.dec.kappa[cf.vertex_map[v]] = t.dec.kappa[v];
  return out;
}

}  // namespace spintaut
