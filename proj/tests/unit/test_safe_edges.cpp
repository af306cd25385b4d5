#include <doctest.h>

#include <sstream>

#include "chordkit/chordality.hpp"
#include "chordkit/errors.hpp"
#include "chordkit/exact.hpp"
#include "chordkit/families.hpp"
#include "chordkit/safe_edges.hpp"
#include "chordkit/separators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace chordkit;

TEST_SUITE("safe-edges") {
  TEST_CASE("f_v on the three-separator neighbourhood") {
    Graph g = fixture::three_separators();
    CHECK(f_v(g, 0) == EdgeSet{{1, 2}, {1, 3}, {2, 3}});
    SafetyTag t = safety(g, 0);
    CHECK(t.rule == SafetyRule::A);
    CHECK(t.f_v.size() == 3);
  }

  TEST_CASE("f_v on small graphs") {
    CHECK(f_v(fixture::cycle(4), 0) == EdgeSet{{1, 3}});
    CHECK(f_v(fixture::path(3), 1).empty());
    CHECK(f_v(fixture::complete(4), 2).empty());
    CHECK(f_v(fixture::star(3), 0).empty());
  }

  TEST_CASE("safety tags") {
    CHECK(safety(fixture::complete(4), 0).rule == SafetyRule::A);
    CHECK(safety(fixture::cycle(5), 2).rule == SafetyRule::A);
    CHECK(safety(fixture::path(3), 1).rule == SafetyRule::NotSafe);
    CHECK(safety(fixture::path(3), 0).rule == SafetyRule::A);
    CHECK(to_string(SafetyRule::A) == "A");
    CHECK(to_string(SafetyRule::B) == "B");
    CHECK(to_string(SafetyRule::NotSafe) == "NotSafe");
    // deg = κ = 3 and N(v) minus one vertex is a clique.
    Graph b = fixture::make(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {1, 5}, {2, 4}});
    REQUIRE(vertex_connectivity(b) == 3);
    SafetyTag t = safety(b, 0);
    if (t.rule != SafetyRule::A) CHECK(t.rule == SafetyRule::B);
    CHECK(safety(b, 0, 3).rule == t.rule);
  }

  TEST_CASE("f_v is independent of the separator order") {
    oracle::Rng rng(71);
    for (int i = 0; i < 120; ++i) {
      Graph g = oracle::random_connected(rng, 3 + static_cast<int>(rng() % 7), 0.3);
      const int v = static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count()));
      const EdgeSet base = f_v(g, v);
      for (int round = 0; round < 4; ++round) {
        SeparatorPicker pick = [&](const EdgeSet& c) { return static_cast<std::size_t>(rng() % c.size()); };
        CHECK(f_v(g, v, pick) == base);
      }
    }
  }

  TEST_CASE("eliminating a safe vertex keeps the minimum fill") {
    oracle::Rng rng(72);
    for (int i = 0; i < 80; ++i) {
      Graph g = oracle::random_connected(rng, 2 + static_cast<int>(rng() % 7), 0.3);
      const int mfi = oracle::min_fill_and_width(g).mfi;
      for (int v : g.vertices()) {
        if (safety(g, v).rule == SafetyRule::NotSafe) continue;
        Elimination e = eliminate(g, v);
        CHECK(oracle::min_fill_and_width(e.graph).mfi + static_cast<int>(e.fill.size()) == mfi);
      }
      ReductionTrace t = reduce(g);
      CHECK(t.total_fill_added + exact_mfi(t.residual).value == mfi);
    }
  }

  TEST_CASE("reduce trace") {
    ReductionTrace c = reduce(fixture::cycle(5));
    CHECK(c.steps.size() == 2);
    CHECK(c.total_fill_added == 2);
    CHECK(c.residual.is_complete());
    CHECK(c.log() == "step=1 vertex=0 tag=A fill=1-4\nstep=2 vertex=1 tag=A fill=2-4\n");

    ReductionTrace k = reduce(fixture::complete(4));
    CHECK(k.steps.empty());
    CHECK(k.residual == fixture::complete(4));

    Graph grid = generate(FamilySpec::grid(4, 4));
    ReductionTrace t = reduce(grid);
    int a = 0, b = 0;
    for (const auto& s : t.steps) (s.tag.rule == SafetyRule::A ? a : b)++;
    CHECK(a == 4);
    CHECK(b == 4);
    CHECK(t.total_fill_added == 12);
    CHECK(t.residual.vertex_count() == 8);
    CHECK(t.total_fill_added + exact_mfi(t.residual).value == 18);
    for (const auto& s : t.steps) CHECK(s.tag.rule != SafetyRule::NotSafe);
  }

  TEST_CASE("reduce on chordal graphs adds nothing") {
    oracle::Rng rng(73);
    for (int i = 0; i < 100; ++i) {
      Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.4);
      TriangulationReport r = apply_ordering(g, EliminationOrdering(g, g.vertices().to_vector()));
      ReductionTrace t = reduce(r.supergraph);
      CHECK(t.total_fill_added == 0);
      CHECK((t.residual.empty() || t.residual.is_complete()));
    }
  }

  TEST_CASE("replaying the trace reproduces the residual") {
    oracle::Rng rng(74);
    for (int i = 0; i < 100; ++i) {
      Graph g = oracle::random_connected(rng, 2 + static_cast<int>(rng() % 8), 0.3);
      ReductionTrace t = reduce(g);
      Graph h = g;
      int total = 0;
      for (const auto& s : t.steps) {
        Elimination e = eliminate(h, s.vertex);
        CHECK(e.fill == s.fill);
        total += static_cast<int>(e.fill.size());
        h = e.graph;
      }
      CHECK(h == t.residual);
      CHECK(total == t.total_fill_added);
    }
  }

  TEST_CASE("grid corners reduce under A") {
    const FamilySpec spec = FamilySpec::grid(4, 4);
    ReductionTrace t = reduce(generate(spec));
    REQUIRE(t.steps.size() >= 4);
    VertexSet corners{grid_vertex(4, 1, 1), grid_vertex(4, 1, 4), grid_vertex(4, 4, 1), grid_vertex(4, 4, 4)};
    for (int i = 0; i < 4; ++i) {
      CHECK(corners.contains(t.steps[i].vertex));
      CHECK(t.steps[i].tag.rule == SafetyRule::A);
    }
  }

  TEST_CASE("tau zero certificates") {
    for (auto spec : {FamilySpec::grid(3, 3), FamilySpec::grid(3, 5), FamilySpec::grid(4, 4), FamilySpec::cocktail(3)}) {
      CAPTURE(spec.to_string());
      Graph g = generate(spec);
      RecipeOrdering r = recipe_ordering(spec);
      REQUIRE(r.safe_prefix);
      CHECK(check_tau0_certificate(g, r.ordering, *r.safe_prefix));
    }
    Graph p3 = fixture::path(3);
    CHECK_FALSE(check_tau0_certificate(p3, EliminationOrdering(p3, {1, 0, 2}), 1));
    CHECK(check_tau0_certificate(p3, EliminationOrdering(p3, {0, 1, 2}), 1));
    CHECK_THROWS_AS(check_tau0_certificate(p3, EliminationOrdering(p3, {0, 1, 2}), 3), InvalidInput);
    CHECK_THROWS_AS(check_tau0_certificate(p3, EliminationOrdering(p3, {0, 1, 2}), -1), InvalidInput);
    Graph t = generate(FamilySpec::tau(2, 3, 5));
    CHECK_FALSE(check_tau0_certificate(t, recipe_ordering(FamilySpec::tau(2, 3, 5)).ordering, 0));
  }
}
