#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wpgraph/constructions.hpp"
#include "wpgraph/graph6.hpp"

using namespace wpgraph;

namespace {

// The 8-vertex localization example: a1 a2 | u1 u2 u3 | h1 h2 h3.
Graph figure_graph() {
  return Graph::from_edges(
      8, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 7}, {5, 6}, {6, 7}});
}

Graph c5() { return make_family({FamilySpec::Kind::cycle, 5, 0}); }

}  // namespace

TEST_CASE("graph construction validates simple-graph invariants") {
  CHECK_THROWS_AS(Graph({0b10, 0b00}), Error);          // asymmetric
  CHECK_THROWS_AS(Graph({0b01, 0b01}), Error);          // self loop at 0 (and asymmetric)
  CHECK_THROWS_AS(Graph({0b100, 0b000}), Error);        // bit beyond n
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), Error);
  const Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(k2.has_edge(0, 1));
  CHECK(k2.has_edge(1, 0));
  CHECK(k2.degree(0) == 1);
}

TEST_CASE("graph6 decodes the format's fixed points") {
  const Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));
}

TEST_CASE("graph6 encodes the canonical examples") {
  CHECK(encode_graph6(Graph::from_edges(1, {})) == "@");
  CHECK(encode_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
  CHECK(encode_graph6(c5()) == "Dhc");
}

TEST_CASE("graph6 parse rejects malformed records") {
  auto code = [](std::string text) { return oracle::error_code_of([&] { parse_graph6(text); }); };
  CHECK(code("A") == errc::length_mismatch);    // missing edge byte
  CHECK(code("A_~") == errc::length_mismatch);  // trailing byte
  CHECK(code("") == errc::length_mismatch);
  CHECK(code("A5") == errc::byte_out_of_range);  // edge byte below 63
  CHECK(code(std::string("A") + char(127)) == errc::byte_out_of_range);
  CHECK(code("A`") == errc::nonzero_padding);  // K2 with a padding bit set
  CHECK(code("?") == errc::byte_out_of_range);    // order 0 header
  CHECK(code("~??") == errc::byte_out_of_range);  // long-form marker, unsupported
  CHECK(oracle::error_code_of([] { encode_graph6(Graph()); }) == errc::order_too_large);
}

TEST_CASE("graph6 round trip is the identity on random graphs") {
  std::mt19937_64 rng(20250810);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(rng, n);
    const std::string text = encode_graph6(g);
    for (char c : text) CHECK((c >= 63 && c <= 126));
    const Graph back = parse_graph6(text);
    CHECK(back == g);
    CHECK(encode_graph6(back) == text);  // canonical padding
  }
}

TEST_CASE("open neighborhood matches the localization example") {
  const Graph g = figure_graph();
  CHECK(open_neighborhood(g, VertexSet::of({0, 1})) == VertexSet::of({2, 3, 4}));
  CHECK(open_neighborhood(g, VertexSet()) == VertexSet());
  // C5: N({v1,v3}) = {v2,v4,v5}
  CHECK(open_neighborhood(c5(), VertexSet::of({0, 2})) == VertexSet::of({1, 3, 4}));
}

TEST_CASE("open neighborhood never meets its argument") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10));
    const std::uint64_t mask = rng() & full_mask(g.order());
    const VertexSet a{mask};
    CHECK((open_neighborhood(g, a) & a).empty());
    CHECK(open_neighborhood(g, a).bits() == oracle::neighborhood(g, mask));
  }
}

TEST_CASE("localization deletes the closed neighborhood") {
  const Graph g = figure_graph();
  const InducedSubgraph loc = localization(g, VertexSet::of({0, 1}));
  CHECK(loc.graph.order() == 3);
  CHECK(loc.to_original == std::vector<int>{5, 6, 7});
  CHECK(loc.graph.has_edge(0, 1));  // h1-h2
  CHECK(loc.graph.has_edge(1, 2));  // h2-h3
  CHECK(!loc.graph.has_edge(0, 2));
  CHECK(loc.graph.edge_count() == 2);

  const InducedSubgraph everything = localization(g, VertexSet());
  CHECK(everything.graph == g);

  // C5 localized at one vertex is K2 on the two far vertices
  const InducedSubgraph k2 = localization(c5(), VertexSet::of({0}));
  CHECK(k2.to_original == std::vector<int>{2, 3});
  CHECK(k2.graph.edge_count() == 1);

  CHECK_THROWS_AS(localization(c5(), VertexSet::of({0, 1})), Error);  // adjacent pair
}

TEST_CASE("localization order identity on random independent sets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 9));
    // random independent set: greedy from a random mask
    std::uint64_t mask = rng() & full_mask(g.order());
    std::uint64_t a = 0;
    for (int v = 0; v < g.order(); ++v)
      if (((mask >> v) & 1) && (g.row(v) & a) == 0) a |= bit(v);
    const VertexSet as{a};
    const InducedSubgraph loc = localization(g, as);
    CHECK(loc.graph.order() == g.order() - as.size() - open_neighborhood(g, as).size());
  }
}

TEST_CASE("connectivity and components") {
  CHECK(is_connected(c5()));
  CHECK(is_connected(Graph::from_edges(1, {})));
  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(!is_connected(two_k2));

  const auto comps = connected_components(two_k2);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].to_original == std::vector<int>{0, 1});
  CHECK(comps[1].to_original == std::vector<int>{2, 3});
  CHECK(comps[0].graph.edge_count() == 1);

  CHECK(connected_components(c5()).size() == 1);

  // localization of the 8-vertex example graph is a single 3-vertex path
  const auto loc = localization(figure_graph(), VertexSet::of({0, 1}));
  const auto loc_comps = connected_components(loc.graph);
  REQUIRE(loc_comps.size() == 1);
  CHECK(loc_comps[0].graph.order() == 3);
}

TEST_CASE("vertex sets order by bit pattern and print 1-indexed") {
  CHECK(VertexSet::of({0, 2}) < VertexSet::of({0, 3}));
  CHECK(VertexSet::of({1, 2}) < VertexSet::of({0, 3}));  // numeric mask order
  CHECK(vertex_set_label(VertexSet::of({0, 2})) == "{1, 3}");
  CHECK(VertexSet::of({0, 2}).to_vector() == std::vector<int>{0, 2});
}
