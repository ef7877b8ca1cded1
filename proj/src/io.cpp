#include "spintaut/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace spintaut {

namespace {

// Graph half-edge -> JSON position (legs first, then edge halves).
std::vector<int> json_order(const StableGraph& g) {
  std::vector<int> pos(g.num_half_edges(), -1);
  int next = 0;
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (g.is_leg(h)) pos[h] = next++;
  for (auto [h, hp] : g.edges()) {
    pos[h] = next++;
    pos[hp] = next++;
  }
  return pos;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("json", what);
}

}  // namespace

Json graph_to_json(const StableGraph& g, const std::vector<int>* twist) {
  Json j;
  j["vertices"] = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v)
    j["vertices"].push_back({{"genus", g.genus[v]}, {"component", g.component[v]}});
  j["legs"] = Json::array();
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (g.is_leg(h)) j["legs"].push_back({{"label", g.leg_label[h]}, {"vertex", g.vertex_of[h]}});
  j["edges"] = Json::array();
  for (auto [h, hp] : g.edges())
    j["edges"].push_back(Json::array({Json{{"vertex", g.vertex_of[h]}}, Json{{"vertex", g.vertex_of[hp]}}}));
  j["twist"] = Json::object();
  if (twist) {
    Json legs = Json::object();
    for (int h = 0; h < g.num_half_edges(); ++h)
      if (g.is_leg(h)) legs[std::to_string(g.leg_label[h])] = (*twist)[h];
    Json edges = Json::array();
    for (auto [h, hp] : g.edges()) edges.push_back(Json::array({(*twist)[h], (*twist)[hp]}));
    j["twist"]["legs"] = legs;
    j["twist"]["edges"] = edges;
  }
  return j;
}

StableGraph graph_from_json(const Json& j) {
  require(j.is_object() && j.contains("vertices") && j.contains("legs") && j.contains("edges"),
          "graph needs vertices, legs and edges");
  StableGraph g;
  for (const auto& v : j.at("vertices")) g.add_vertex(v.at("genus").get<int>(), v.value("component", 0));
  auto vertex = [&](const Json& x) {
    const int v = x.at("vertex").get<int>();
    require(v >= 0 && v < g.num_vertices(), "vertex index out of range");
    return v;
  };
  for (const auto& l : j.at("legs")) g.add_leg(vertex(l), l.at("label").get<int>());
  for (const auto& e : j.at("edges")) {
    require(e.is_array() && e.size() == 2, "an edge is a pair of endpoints");
    g.add_edge(vertex(e[0]), vertex(e[1]));
  }
  g.validate();
  return g;
}

Json class_to_json(const TautClass& x) {
  Json out = Json::array();
  for (const auto& [key, e] : x.terms()) {
    const auto& g = e.term.graph;
    const auto pos = json_order(g);
    Json kappa = Json::array();
    for (int v = 0; v < g.num_vertices(); ++v)
      for (int d : e.term.dec.kappa[v]) kappa.push_back(Json::array({v, d}));
    std::vector<std::pair<int, int>> psi;
    for (int h = 0; h < g.num_half_edges(); ++h)
      if (e.term.dec.psi[h] > 0) psi.emplace_back(pos[h], e.term.dec.psi[h]);
    std::sort(psi.begin(), psi.end());
    Json psi_json = Json::array();
    for (auto [h, p] : psi) psi_json.push_back(Json::array({h, p}));
    out.push_back({{"graph", graph_to_json(g)},
                   {"decoration", {{"kappa", kappa}, {"psi", psi_json}}},
                   {"coeff", to_string(e.coeff)}});
  }
  return out;
}

TautClass class_from_json(const Json& j, const Ambient& ambient) {
  require(j.is_array(), "a class is a list of terms");
  TautClass out(ambient);
  for (const auto& t : j) {
    Term term;
    term.graph = graph_from_json(t.at("graph"));
    term.dec = Decoration::empty(term.graph);
    const auto pos = json_order(term.graph);
    std::vector<int> back(pos.size());
    for (std::size_t h = 0; h < pos.size(); ++h) back[pos[h]] = static_cast<int>(h);
    const auto& dec = t.at("decoration");
    for (const auto& k : dec.at("kappa")) {
      const int v = k.at(0).get<int>();
      require(v >= 0 && v < term.graph.num_vertices(), "kappa vertex out of range");
      term.dec.kappa[v].push_back(k.at(1).get<int>());
    }
    for (auto& ks : term.dec.kappa) std::sort(ks.begin(), ks.end());
    for (const auto& p : dec.at("psi")) {
      const int h = p.at(0).get<int>();
      require(h >= 0 && h < static_cast<int>(back.size()), "psi half-edge out of range");
      term.dec.psi[back[h]] = p.at(1).get<int>();
    }
    out.add(term, parse_rational(t.at("coeff").get<std::string>()));
  }
  return out;
}

Json class_document(int g, int n, const TautClass& x) {
  Json doc;
  doc["schema"] = kSchema;
  doc["g"] = g;
  doc["n"] = n;
  doc["class"] = class_to_json(x);
  return doc;
}

TautClass class_from_document(const Json& doc) {
  require(doc.is_object() && doc.contains("g") && doc.contains("n") && doc.contains("class"),
          "document needs g, n and class");
  return class_from_json(doc.at("class"), Ambient::connected(doc.at("g").get<int>(), doc.at("n").get<int>()));
}

std::string class_to_text(const TautClass& x) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::size_t width = 0;
  for (const auto& [key, e] : x.terms()) {
    const auto& g = e.term.graph;
    std::ostringstream desc;
    for (int v = 0; v < g.num_vertices(); ++v) {
      desc << (v ? " " : "") << "v" << v << "(g" << g.genus[v];
      for (int h : g.half_edges_at(v))
        if (g.is_leg(h)) desc << " " << g.leg_label[h] << (e.term.dec.psi[h] ? "^" + std::to_string(e.term.dec.psi[h]) : "");
      for (int d : e.term.dec.kappa[v]) desc << " k" << d;
      desc << ")";
    }
    for (auto [h, hp] : g.edges()) {
      desc << " e" << g.vertex_of[h] << "-" << g.vertex_of[hp];
      if (e.term.dec.psi[h] || e.term.dec.psi[hp])
        desc << "[" << e.term.dec.psi[h] << "," << e.term.dec.psi[hp] << "]";
    }
    rows.emplace_back(to_string(e.coeff), desc.str());
    width = std::max(width, rows.back().first.size());
  }
  std::ostringstream out;
  if (rows.empty()) out << "0\n";
  for (const auto& [c, d] : rows) out << std::setw(static_cast<int>(width)) << c << "  " << d << "\n";
  return out.str();
}

}  // namespace spintaut
