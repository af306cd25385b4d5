#include "chordkit/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

#include "chordkit/errors.hpp"
#include "chordkit/separators.hpp"

namespace chordkit {

namespace {

using Mask = std::uint32_t;
using Value = std::uint16_t;
constexpr Value kInf = std::numeric_limits<Value>::max();

// One connected component relabelled to 0..k-1 (ascending original ids).
struct Piece {
  int k = 0;
  int edges = 0;
  std::vector<Mask> adj;
  std::vector<int> ids;
};

std::vector<Piece> split(const Graph& g, const SolverOptions& opts) {
  if (opts.limit > SolverOptions::kMaxLimit) {
    throw InvalidInput("solver limit " + std::to_string(opts.limit) + " exceeds the hard maximum " +
                       std::to_string(SolverOptions::kMaxLimit));
  }
  std::vector<Piece> pieces;
  for (VertexSet c : components(g)) {
    if (c.size() > opts.limit) {
      throw CapacityError("component with " + std::to_string(c.size()) +
                          " vertices exceeds the solver limit of " + std::to_string(opts.limit));
    }
    Piece p;
    Graph sub = g.induced(c).compacted(&p.ids);
    p.k = sub.order();
    p.edges = sub.edge_count();
    for (int v = 0; v < p.k; ++v) p.adj.push_back(static_cast<Mask>(sub.neighbors(v).bits()));
    pieces.push_back(std::move(p));
  }
  return pieces;
}

// Component of v in g[t] and |N(component)|. Since the component is a whole
// component of g[t], its neighbourhood avoids t, and that size is the madj of
// every member eliminated last within t.
struct Region {
  Mask members;
  int cost;
};

inline Region region_of(const Piece& p, Mask t, int v) {
  Mask region = Mask{1} << v;
  Mask frontier = region;
  Mask reach = 0;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= p.adj[static_cast<std::size_t>(std::countr_zero(f))];
    reach |= next;
    next &= t & ~region;
    region |= next;
    frontier = next;
  }
  return {region, std::popcount(reach & ~region)};
}

// Visits every nonempty subset so that t - {v} is always finished before t.
void for_each_state(int k, int threads, const std::function<void(Mask)>& visit) {
  const std::uint64_t total = std::uint64_t{1} << k;
  if (threads <= 1 || k < 12) {
    for (std::uint64_t t = 1; t < total; ++t) visit(static_cast<Mask>(t));
    return;
  }
  std::vector<Mask> layer;
  for (int size = 1; size <= k; ++size) {
    layer.clear();
    // Gosper's hack walks all k-bit masks of the given popcount.
    std::uint64_t t = (std::uint64_t{1} << size) - 1;
    while (t < total) {
      layer.push_back(static_cast<Mask>(t));
      std::uint64_t c = t & (~t + 1);
      std::uint64_t r = t + c;
      t = (((r ^ t) >> 2) / c) | r;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (layer.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    for (int w = 0; w < threads; ++w) {
      std::size_t lo = static_cast<std::size_t>(w) * chunk;
      std::size_t hi = std::min(layer.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) visit(layer[i]);
      });
    }
    for (auto& th : pool) th.join();
  }
}

// Calls fn(region) for each component of g[t].
template <class Fn>
inline void for_each_region(const Piece& p, Mask t, Fn&& fn) {
  for (Mask rest = t; rest;) {
    Region r = region_of(p, t, std::countr_zero(rest));
    fn(r);
    rest &= ~r.members;
  }
}

// Σ madj over the best prefix eliminating exactly t; kInf if no ordering of t
// keeps every madj within `cap`.
std::vector<Value> sum_table(const Piece& p, int cap, int threads) {
  std::vector<Value> f(std::size_t{1} << p.k, kInf);
  f[0] = 0;
  for_each_state(p.k, threads, [&](Mask t) {
    Value best = kInf;
    for_each_region(p, t, [&](const Region& r) {
      if (r.cost > cap) return;
      Value sub = kInf;
      for (Mask m = r.members; m; m &= m - 1) sub = std::min(sub, f[t & ~(Mask{1} << std::countr_zero(m))]);
      if (sub != kInf) best = std::min<Value>(best, static_cast<Value>(sub + r.cost));
    });
    f[t] = best;
  });
  return f;
}

// Least possible maximum madj over orderings of t.
std::vector<Value> width_table(const Piece& p, int threads) {
  std::vector<Value> w(std::size_t{1} << p.k, kInf);
  w[0] = 0;
  for_each_state(p.k, threads, [&](Mask t) {
    Value best = kInf;
    for_each_region(p, t, [&](const Region& r) {
      Value sub = kInf;
      for (Mask m = r.members; m; m &= m - 1) sub = std::min(sub, w[t & ~(Mask{1} << std::countr_zero(m))]);
      best = std::min<Value>(best, std::max<Value>(sub, static_cast<Value>(r.cost)));
    });
    w[t] = best;
  });
  return w;
}

// Least maximum madj over orderings of t whose every prefix is Σ-optimal in f.
std::vector<Value> tight_width_table(const Piece& p, const std::vector<Value>& f, int threads) {
  std::vector<Value> w(std::size_t{1} << p.k, kInf);
  w[0] = 0;
  for_each_state(p.k, threads, [&](Mask t) {
    Value best = kInf;
    for_each_region(p, t, [&](const Region& r) {
      for (Mask m = r.members; m; m &= m - 1) {
        Mask prev = t & ~(Mask{1} << std::countr_zero(m));
        if (f[prev] == kInf || f[prev] + r.cost != f[t] || w[prev] == kInf) continue;
        best = std::min<Value>(best, std::max<Value>(w[prev], static_cast<Value>(r.cost)));
      }
    });
    w[t] = best;
  });
  return w;
}

Mask full_mask(const Piece& p) { return (Mask{1} << p.k) - 1; }

// Walks back from the full set choosing, at each step, the smallest vertex
// whose removal satisfies `keep(prev, t, cost)`; returns original ids.
template <class Keep>
std::vector<int> reconstruct(const Piece& p, Keep&& keep) {
  std::vector<int> rev;
  Mask t = full_mask(p);
  while (t) {
    int chosen = -1;
    for (Mask m = t; m && chosen < 0; m &= m - 1) {
      int v = std::countr_zero(m);
      Region r = region_of(p, t, v);
      if (keep(t & ~(Mask{1} << v), t, r.cost)) chosen = v;
    }
    if (chosen < 0) throw Error("exact solver: witness reconstruction failed");
    rev.push_back(p.ids[static_cast<std::size_t>(chosen)]);
    t &= ~(Mask{1} << chosen);
  }
  return {rev.rbegin(), rev.rend()};
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t states_of(const Piece& p) { return std::uint64_t{1} << p.k; }

}  // namespace

SolverResult exact_mfi(const Graph& g, const SolverOptions& opts) {
  Timer timer;
  SolverResult res;
  std::vector<int> order;
  for (const Piece& p : split(g, opts)) {
    std::vector<Value> f = sum_table(p, p.k, opts.threads);
    res.value += f[full_mask(p)] - p.edges;
    std::vector<int> part = reconstruct(p, [&](Mask prev, Mask t, int cost) {
      return f[prev] != kInf && f[prev] + cost == f[t];
    });
    order.insert(order.end(), part.begin(), part.end());
    res.stats.states += states_of(p);
  }
  res.witness = EliminationOrdering(g, std::move(order));
  res.stats.elapsed_seconds = timer.seconds();
  return res;
}

SolverResult exact_tw(const Graph& g, const SolverOptions& opts) {
  Timer timer;
  SolverResult res;
  std::vector<int> order;
  for (const Piece& p : split(g, opts)) {
    std::vector<Value> w = width_table(p, opts.threads);
    res.value = std::max<int>(res.value, w[full_mask(p)]);
    std::vector<int> part = reconstruct(p, [&](Mask prev, Mask t, int cost) {
      return std::max<int>(w[prev], cost) == w[t];
    });
    order.insert(order.end(), part.begin(), part.end());
    res.stats.states += states_of(p);
  }
  res.witness = EliminationOrdering(g, std::move(order));
  res.stats.elapsed_seconds = timer.seconds();
  return res;
}

std::optional<int> width_capped_min_fill(const Graph& g, int w, const SolverOptions& opts,
                                         EliminationOrdering* witness) {
  int total = 0;
  std::vector<int> order;
  for (const Piece& p : split(g, opts)) {
    std::vector<Value> f = sum_table(p, w, opts.threads);
    Value best = f[full_mask(p)];
    if (best == kInf) return std::nullopt;
    total += best - p.edges;
    if (witness) {
      std::vector<int> part = reconstruct(p, [&](Mask prev, Mask t, int cost) {
        return cost <= w && f[prev] != kInf && f[prev] + cost == f[t];
      });
      order.insert(order.end(), part.begin(), part.end());
    }
  }
  if (witness) *witness = EliminationOrdering(g, std::move(order));
  return total;
}

TauPhiResult exact_tau_phi(const Graph& g, const SolverOptions& opts) {
  Timer timer;
  std::vector<Piece> pieces = split(g, opts);
  TauPhiResult res;
  int fill_optimal_width = 0;
  std::vector<int> fill_order;
  for (const Piece& p : pieces) {
    std::vector<Value> f = sum_table(p, p.k, opts.threads);
    std::vector<Value> tight = tight_width_table(p, f, opts.threads);
    std::vector<Value> w = width_table(p, opts.threads);
    const Mask all = full_mask(p);
    res.mfi += f[all] - p.edges;
    res.tw = std::max<int>(res.tw, w[all]);
    fill_optimal_width = std::max<int>(fill_optimal_width, tight[all]);
    std::vector<int> part = reconstruct(p, [&](Mask prev, Mask t, int cost) {
      return f[prev] != kInf && f[prev] + cost == f[t] && tight[prev] != kInf &&
             std::max<int>(tight[prev], cost) == tight[t];
    });
    fill_order.insert(fill_order.end(), part.begin(), part.end());
    res.stats.states += 3 * states_of(p);
  }
  res.tau = fill_optimal_width - res.tw;
  res.min_fill_witness = EliminationOrdering(g, std::move(fill_order));
  // Every component fits under the global width, so the cap is feasible.
  std::optional<int> capped = width_capped_min_fill(g, res.tw, opts, &res.min_width_witness);
  for (const Piece& p : pieces) res.stats.states += states_of(p);
  res.phi = *capped - res.mfi;
  res.stats.elapsed_seconds = timer.seconds();
  return res;
}

bool tfm_decide(const Graph& g, int k, int c, const SolverOptions& opts) {
  if (k < 0 || c < 0) throw InvalidInput("tfm: k and c must be non-negative");
  const int tw = exact_tw(g, opts).value;
  const int mfi = exact_mfi(g, opts).value;
  std::optional<int> capped = width_capped_min_fill(g, tw + k, opts);
  return capped && *capped <= mfi + c;
}

bool min_ordering_width_equivalence(const Graph& g, const SolverOptions& opts) {
  const int kappa = vertex_connectivity(g);
  TauPhiResult r = exact_tau_phi(g, opts);
  if (kappa != r.tw) {
    throw InvalidInput("equivalence check needs kappa = tw, got kappa=" + std::to_string(kappa) +
                       " tw=" + std::to_string(r.tw));
  }
  const int n = g.vertex_count();
  const int k = kappa;
  return r.tau == 0 && r.phi == 0 && r.mfi + g.edge_count() == k * (n - k) + k * (k - 1) / 2;
}

}  // namespace chordkit
