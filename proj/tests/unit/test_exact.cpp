#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>

#include "chordkit/errors.hpp"
#include "chordkit/exact.hpp"
#include "chordkit/families.hpp"
#include "chordkit/separators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace chordkit;

namespace {

// Every (fill, width) pair reachable by some ordering.
std::vector<std::pair<int, int>> profile(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  std::function<void(const Graph&, int, int)> walk = [&](const Graph& h, int fill, int width) {
    if (h.empty()) {
      out.emplace_back(fill, width);
      return;
    }
    for (int v : h.vertices()) {
      auto step = eliminate(h, v);
      walk(step.graph, fill + static_cast<int>(step.fill.size()), std::max(width, h.degree(v)));
    }
  };
  walk(g, 0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Profiled {
  int mfi = std::numeric_limits<int>::max();
  int tw = std::numeric_limits<int>::max();
  int tau = 0;
  int phi = 0;
  std::vector<std::pair<int, int>> pairs;

  std::optional<int> capped(int w) const {
    std::optional<int> best;
    for (auto [f, wd] : pairs)
      if (wd <= w && (!best || f < *best)) best = f;
    return best;
  }
};

Profiled brute(const Graph& g) {
  Profiled p;
  p.pairs = profile(g);
  for (auto [f, w] : p.pairs) {
    p.mfi = std::min(p.mfi, f);
    p.tw = std::min(p.tw, w);
  }
  int tight = std::numeric_limits<int>::max();
  for (auto [f, w] : p.pairs)
    if (f == p.mfi) tight = std::min(tight, w);
  p.tau = tight - p.tw;
  p.phi = *p.capped(p.tw) - p.mfi;
  return p;
}

void check_witness(const Graph& g, const EliminationOrdering& a, int fill, int width) {
  TriangulationReport r = apply_ordering(g, a);
  CHECK(r.total_fill == fill);
  CHECK(r.width == width);
}

}  // namespace

TEST_SUITE("exact-solvers") {
  TEST_CASE("trivial graphs") {
    for (int n = 0; n <= 2; ++n) {
      Graph g = fixture::complete(n);
      CHECK(exact_mfi(g).value == 0);
      CHECK(exact_tw(g).value == std::max(0, n - 1));
      TauPhiResult r = exact_tau_phi(g);
      CHECK(r.tau == 0);
      CHECK(r.phi == 0);
      CHECK(r.min_fill_witness.size() == n);
    }
    Graph k6 = fixture::complete(6);
    CHECK(exact_mfi(k6).value == 0);
    CHECK(exact_tw(k6).value == 5);
  }

  TEST_CASE("cycles and paths") {
    for (int n = 4; n <= 10; ++n) {
      CHECK(exact_mfi(fixture::cycle(n)).value == n - 3);
      CHECK(exact_tw(fixture::cycle(n)).value == 2);
    }
    CHECK(exact_mfi(fixture::path(7)).value == 0);
    CHECK(exact_tw(fixture::path(7)).value == 1);
  }

  TEST_CASE("agrees with the permutation oracle") {
    oracle::Rng rng(61);
    for (int i = 0; i < 150; ++i) {
      const int n = 1 + static_cast<int>(rng() % 7);
      Graph g = i % 3 == 0 ? oracle::random_graph(rng, n, 0.4) : oracle::random_connected(rng, n, 0.3);
      Profiled p = brute(g);
      SolverResult mfi = exact_mfi(g);
      SolverResult tw = exact_tw(g);
      REQUIRE(mfi.value == p.mfi);
      REQUIRE(tw.value == p.tw);
      CHECK(apply_ordering(g, mfi.witness).total_fill == p.mfi);
      CHECK(apply_ordering(g, tw.witness).width == p.tw);
      TauPhiResult tp = exact_tau_phi(g);
      CHECK(tp.mfi == p.mfi);
      CHECK(tp.tw == p.tw);
      CHECK(tp.tau == p.tau);
      CHECK(tp.phi == p.phi);
      check_witness(g, tp.min_fill_witness, p.mfi, p.tw + p.tau);
      check_witness(g, tp.min_width_witness, p.mfi + p.phi, p.tw);
      for (int w = 0; w < n; ++w) {
        EliminationOrdering wit;
        std::optional<int> capped = width_capped_min_fill(g, w, {}, &wit);
        REQUIRE(capped == p.capped(w));
        if (capped) {
          TriangulationReport r = apply_ordering(g, wit);
          CHECK(r.total_fill == *capped);
          CHECK(r.width <= w);
        }
      }
    }
  }

  TEST_CASE("tfm matches the oracle") {
    oracle::Rng rng(62);
    for (int i = 0; i < 60; ++i) {
      Graph g = oracle::random_connected(rng, 2 + static_cast<int>(rng() % 6), 0.35);
      Profiled p = brute(g);
      for (int k = 0; k <= 2; ++k) {
        for (int c = 0; c <= 2; ++c) {
          bool expected = false;
          for (auto [f, w] : p.pairs) expected = expected || (w <= p.tw + k && f <= p.mfi + c);
          CHECK(tfm_decide(g, k, c) == expected);
        }
      }
    }
    CHECK_THROWS_AS(tfm_decide(fixture::cycle(4), -1, 0), InvalidInput);
    CHECK_THROWS_AS(tfm_decide(fixture::cycle(4), 0, -1), InvalidInput);
  }

  TEST_CASE("tau family separates width and fill") {
    Graph g = generate(FamilySpec::tau(2, 3, 5));
    TauPhiResult r = exact_tau_phi(g);
    CHECK(r.mfi == 9);
    CHECK(r.tw == 9);
    CHECK(r.tau == 1);
    CHECK(r.phi == 1);
    CHECK_FALSE(tfm_decide(g, 0, 0));
    CHECK(tfm_decide(g, 1, 0));
    CHECK(tfm_decide(g, 0, 1));
  }

  TEST_CASE("disconnected graphs combine per component") {
    Graph g = fixture::make(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}});
    CHECK(exact_mfi(g).value == 1 + 2);
    CHECK(exact_tw(g).value == 2);
    Profiled p = brute(fixture::make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 4}}));
    TauPhiResult r = exact_tau_phi(fixture::make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 4}}));
    CHECK(r.tau == p.tau);
    CHECK(r.phi == p.phi);
  }

  TEST_CASE("thread count does not change results") {
    oracle::Rng rng(63);
    for (int i = 0; i < 20; ++i) {
      Graph g = oracle::random_connected(rng, 12, 0.25);
      SolverOptions many;
      many.threads = 3;
      CHECK(exact_mfi(g).value == exact_mfi(g, many).value);
      CHECK(exact_tw(g).value == exact_tw(g, many).value);
      TauPhiResult a = exact_tau_phi(g);
      TauPhiResult b = exact_tau_phi(g, many);
      CHECK(a.tau == b.tau);
      CHECK(a.phi == b.phi);
      CHECK(a.min_fill_witness.order() == b.min_fill_witness.order());
    }
  }

  TEST_CASE("capacity limits") {
    SolverOptions small;
    small.limit = 5;
    CHECK_THROWS_AS(exact_mfi(fixture::cycle(6), small), CapacityError);
    Graph two = fixture::make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
    CHECK(exact_mfi(two, small).value == 4);
    SolverOptions huge;
    huge.limit = SolverOptions::kMaxLimit + 1;
    CHECK_THROWS_AS(exact_tw(fixture::cycle(4), huge), InvalidInput);
  }

  TEST_CASE("connectivity equal to treewidth") {
    Graph wheel = generate(FamilySpec::parse("halin:0-1,0-2,0-3,0-4,0-5"));
    CHECK(vertex_connectivity(wheel) == 3);
    CHECK(min_ordering_width_equivalence(wheel));
    CHECK(exact_mfi(wheel).value == 2);
    CHECK(min_ordering_width_equivalence(generate(FamilySpec::rook(2, 4))));
    CHECK(min_ordering_width_equivalence(fixture::cycle(7)));
    CHECK_THROWS_AS(min_ordering_width_equivalence(generate(FamilySpec::grid(3, 3))), InvalidInput);
  }
}
