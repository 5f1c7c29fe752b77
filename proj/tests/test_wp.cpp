#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wpgraph/constructions.hpp"
#include "wpgraph/sweep.hpp"
#include "wpgraph/wp.hpp"

using namespace wpgraph;

namespace {

Graph c5() { return make_family({FamilySpec::Kind::cycle, 5, 0}); }
Graph c4() { return make_family({FamilySpec::Kind::cycle, 4, 0}); }
Graph p3() { return make_family({FamilySpec::Kind::path, 3, 0}); }
Graph k2() { return make_family({FamilySpec::Kind::complete, 2, 0}); }

}  // namespace

TEST_CASE("disjoint extension on C5 finds the first solution") {
  const OmegaFamily om = maximum_independent_sets(c5());
  const std::vector<VertexSet> tuple = {VertexSet::of({0}), VertexSet::of({1})};
  const auto ext = disjoint_extension(c5(), tuple, om);
  REQUIRE(ext.has_value());
  // Frozen from the brute-force oracle: {v1,v3} is the first superset of
  // {v1}, and {v2,v4} the first maximum set containing {v2} disjoint from it.
  CHECK((*ext)[0] == VertexSet::of({0, 2}));
  CHECK((*ext)[1] == VertexSet::of({1, 3}));
}

TEST_CASE("disjoint extension can be impossible") {
  const OmegaFamily om = maximum_independent_sets(c4());
  const std::vector<VertexSet> tuple = {VertexSet::of({0}), VertexSet::of({2})};
  CHECK(!disjoint_extension(c4(), tuple, om).has_value());
}

TEST_CASE("disjoint extension of two empty sets in K2") {
  const OmegaFamily om = maximum_independent_sets(k2());
  const std::vector<VertexSet> tuple = {VertexSet(), VertexSet()};
  const auto ext = disjoint_extension(k2(), tuple, om);
  REQUIRE(ext.has_value());
  CHECK((*ext)[0] == VertexSet::of({0}));
  CHECK((*ext)[1] == VertexSet::of({1}));
}

TEST_CASE("disjoint extension validates its tuple") {
  const OmegaFamily om = maximum_independent_sets(c5());
  std::vector<VertexSet> overlapping = {VertexSet::of({0}), VertexSet::of({0})};
  CHECK(oracle::error_code_of([&] { disjoint_extension(c5(), overlapping, om); }) ==
        errc::bad_tuple);
  std::vector<VertexSet> dependent = {VertexSet::of({0, 1}), VertexSet()};
  CHECK(oracle::error_code_of([&] { disjoint_extension(c5(), dependent, om); }) ==
        errc::bad_tuple);
}

TEST_CASE("membership golden verdicts") {
  CHECK(is_wp(c5(), 2).status == WpStatus::member);
  CHECK(is_wp(c5(), 1).status == WpStatus::member);

  const WpWitness c4w = is_wp(c4(), 2);
  CHECK(c4w.status == WpStatus::non_member);
  CHECK(c4w.failing_tuple ==
        std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({2})});

  const WpWitness p3w = is_wp(p3(), 1);
  CHECK(p3w.status == WpStatus::non_member);
  CHECK(p3w.failing_tuple == std::vector<VertexSet>{VertexSet::of({1})});

  const WpWitness k2w = is_wp(k2(), 2);
  CHECK(k2w.status == WpStatus::member);
  CHECK(k2w.extension == std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({1})});
}

TEST_CASE("membership respects the caps") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < 15; ++i) edges.emplace_back(i, i + 1);
  const Graph path15 = Graph::from_edges(15, edges);
  CHECK(is_wp(path15, 2).status == WpStatus::cap_exceeded);

  WpCaps tight;
  tight.omega_cap = 2;
  CHECK(is_wp(c5(), 2, tight).status == WpStatus::cap_exceeded);  // |Omega(C5)| = 5
}

TEST_CASE("well-covered golden verdicts") {
  CHECK(is_well_covered(c4()));
  CHECK(!is_well_covered(p3()));
  CHECK(is_well_covered(Graph::from_edges(1, {})));
}

TEST_CASE("one-well-covered golden verdicts") {
  CHECK(is_one_well_covered(c5()));
  CHECK(!is_one_well_covered(c4()));
  CHECK(is_one_well_covered(k2()));
  CHECK(oracle::error_code_of([] { is_one_well_covered(Graph::from_edges(1, {})); }) ==
        errc::has_isolated_vertex);
}

TEST_CASE("avoidance golden values") {
  const auto s1 = avoidance_check(c5(), VertexSet::of({0}), 2);
  REQUIRE(s1.has_value());
  CHECK(*s1 == VertexSet::of({0, 3}));

  CHECK(!avoidance_check(c4(), VertexSet::of({0}), 2).has_value());

  const auto s3 = avoidance_check(c5(), VertexSet(), 0);
  REQUIRE(s3.has_value());
  CHECK(*s3 == VertexSet::of({1, 3}));

  CHECK(oracle::error_code_of([&] { avoidance_check(c5(), VertexSet::of({0, 2}), 1); }) ==
        errc::a_maximum);
  CHECK(oracle::error_code_of([&] { avoidance_check(c5(), VertexSet::of({0}), 0); }) ==
        errc::bad_argument);
}

TEST_CASE("structure audit passes on known members") {
  const W2AuditRecord r5 = w2_structure_audit(c5());
  CHECK(r5.all_passed());
  CHECK(!r5.cap_exceeded);
  const W2AuditRecord r2 = w2_structure_audit(k2());
  CHECK(r2.all_passed());
}

TEST_CASE("structure audit flags an isolated vertex first") {
  const Graph k1_k2 = Graph::from_edges(3, {{1, 2}});
  const W2AuditRecord rec = w2_structure_audit(k1_k2);
  CHECK(!rec.no_isolated.passed);
  CHECK(!rec.all_passed());
}

TEST_CASE("W_1 membership coincides with well-coveredness") {
  // exhaustive through order 4, randomized above that
  for (int n = 1; n <= 4; ++n)
    generate_all_graphs(n, false, [&](const Graph& g) {
      CHECK((is_wp(g, 1).status == WpStatus::member) == is_well_covered(g));
      CHECK(is_well_covered(g) == oracle::well_covered(g));
    });
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, 5 + static_cast<int>(rng() % 5));
    CHECK((is_wp(g, 1).status == WpStatus::member) == is_well_covered(g));
    CHECK(is_well_covered(g) == oracle::well_covered(g));
  }
}

TEST_CASE("membership agrees with the brute-force oracle") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6));
    for (int p = 1; p <= 3; ++p) {
      const WpWitness w = is_wp(g, p);
      REQUIRE(w.status != WpStatus::cap_exceeded);
      const auto fail = oracle::wp_failing_tuple(g, p);
      CHECK((w.status == WpStatus::member) == oracle::is_wp(g, p));
      if (w.status == WpStatus::non_member && fail) {
        REQUIRE(w.failing_tuple.size() == fail->size());
        for (std::size_t i = 0; i < fail->size(); ++i)
          CHECK(w.failing_tuple[i].bits() == (*fail)[i]);
      }
    }
  }
}

TEST_CASE("the two W_2 routes agree on isolate-free graphs") {
  std::mt19937_64 rng(321);
  int checked = 0;
  while (checked < 150) {
    const Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.45);
    bool isolated = false;
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) == 0) isolated = true;
    if (isolated) continue;
    ++checked;
    CHECK((is_wp(g, 2).status == WpStatus::member) == is_one_well_covered(g));
  }
}

TEST_CASE("extension monotonicity under componentwise subsets") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 6));
    const OmegaFamily om = maximum_independent_sets(g);
    const auto inds = independent_sets(g);
    for (int attempt = 0; attempt < 20; ++attempt) {
      const VertexSet a = inds[rng() % inds.size()];
      VertexSet b;
      for (int tries = 0; tries < 10; ++tries) {
        const VertexSet candidate = inds[rng() % inds.size()];
        if (candidate.disjoint_with(a)) {
          b = candidate;
          break;
        }
      }
      if (!b.disjoint_with(a)) continue;
      const std::vector<VertexSet> tuple = {a, b};
      if (!disjoint_extension(g, tuple, om)) continue;
      // drop one random vertex from each side; the smaller tuple must extend
      auto shrink = [&](VertexSet s) {
        auto vs = s.to_vector();
        if (vs.empty()) return s;
        return s - VertexSet(bit(vs[rng() % vs.size()]));
      };
      const std::vector<VertexSet> sub = {shrink(a), shrink(b)};
      CHECK(disjoint_extension(g, sub, om).has_value());
    }
  }
}

TEST_CASE("membership is componentwise") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph a = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 4));
    const Graph b = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 4));
    const Graph u = disjoint_union(std::vector<Graph>{a, b});
    for (int p : {1, 2}) {
      const bool whole = is_wp(u, p).status == WpStatus::member;
      const bool parts =
          is_wp(a, p).status == WpStatus::member && is_wp(b, p).status == WpStatus::member;
      CHECK(whole == parts);
    }
  }
}

TEST_CASE("connected members other than K2 have minimum degree 2") {
  generate_all_graphs(5, true, [&](const Graph& g) {
    if (is_wp(g, 2).status != WpStatus::member) return;
    if (g.order() == 2) return;
    for (int v = 0; v < g.order(); ++v) CHECK(g.degree(v) >= 2);
  });
}
