#include <doctest.h>

#include "spintaut/io.hpp"
#include "spintaut/spin.hpp"
#include "spintaut/strata.hpp"
#include "spintaut/twist.hpp"

using namespace spintaut;

TEST_CASE("graph json keeps the field order") {
  StableGraph g;
  g.add_vertex(1);
  g.add_vertex(0);
  g.add_leg(1, 1);
  g.add_leg(1, 2);
  g.add_edge(0, 1);
  const std::string text = graph_to_json(g).dump();
  CHECK(text ==
        R"({"vertices":[{"genus":1,"component":0},{"genus":0,"component":0}],"legs":[{"label":1,"vertex":1},)"
        R"({"label":2,"vertex":1}],"edges":[[{"vertex":0},{"vertex":1}]],"twist":{}})");
  CHECK(graph_from_json(graph_to_json(g)) == g);
}

TEST_CASE("twisted graphs carry their twist") {
  auto stars = simple_stars_odd(2, {3}, 1);
  for (const auto& s : stars) {
    Json j = graph_to_json(s.graph, &s.twist);
    if (s.graph.num_edges() > 0) CHECK(j["twist"]["edges"].size() == static_cast<std::size_t>(s.graph.num_edges()));
    CHECK(j["twist"]["legs"]["1"] == 3);
  }
}

TEST_CASE("class json round-trips exactly") {
  for (const TautClass& x : {dr_spin(2, {5, -1}, 1), strata_class_spin(2, {3}), dr_spin(1, {3, -1, 1}, 1)}) {
    const auto g = x.ambient().genus[0];
    const auto n = static_cast<int>(x.ambient().labels[0].size());
    const Json doc = class_document(g, n, x);
    const TautClass y = class_from_document(Json::parse(doc.dump()));
    CHECK(y == x);
    CHECK(class_document(g, n, y).dump() == doc.dump());
  }
}

TEST_CASE("malformed json is a validation error") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[]})")), ValidationError);
  CHECK_THROWS_AS(class_from_document(Json::parse(R"({"g":1})")), ValidationError);
}
