// Brute-force reference implementations used only by tests. Everything here
// works by plain subset loops over 2^n masks so that expected values are
// derived on a path fully independent of the library's search kernels.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wpgraph/graph.hpp"

namespace oracle {

using wpgraph::Graph;

inline bool independent(const Graph& g, std::uint64_t mask) {
  for (int u = 0; u < g.order(); ++u) {
    if (!((mask >> u) & 1)) continue;
    for (int v = u + 1; v < g.order(); ++v)
      if (((mask >> v) & 1) && g.has_edge(u, v)) return false;
  }
  return true;
}

inline int popcount(std::uint64_t m) { return std::popcount(m); }

// All independent sets as masks, ascending.
inline std::vector<std::uint64_t> independent_sets(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
    if (independent(g, m)) out.push_back(m);
  return out;
}

inline int alpha(const Graph& g) {
  int best = 0;
  for (std::uint64_t m : independent_sets(g)) best = std::max(best, popcount(m));
  return best;
}

inline std::vector<long long> polynomial(const Graph& g) {
  std::vector<long long> coeffs(static_cast<std::size_t>(alpha(g)) + 1, 0);
  for (std::uint64_t m : independent_sets(g)) ++coeffs[static_cast<std::size_t>(popcount(m))];
  return coeffs;
}

inline std::vector<std::uint64_t> omega(const Graph& g) {
  const int a = alpha(g);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : independent_sets(g))
    if (popcount(m) == a) out.push_back(m);
  return out;
}

inline std::uint64_t neighborhood(const Graph& g, std::uint64_t mask) {
  std::uint64_t nb = 0;
  for (int v = 0; v < g.order(); ++v)
    if ((mask >> v) & 1) nb |= g.row(v);
  return nb & ~mask;
}

inline bool maximal_independent(const Graph& g, std::uint64_t mask) {
  return independent(g, mask) &&
         (mask | neighborhood(g, mask)) == wpgraph::full_mask(g.order());
}

inline bool well_covered(const Graph& g) {
  const int a = alpha(g);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
    if (maximal_independent(g, m) && popcount(m) != a) return false;
  return true;
}

// Plain recursive search for p pairwise disjoint maximum sets covering the
// tuple, in ascending mask order.
inline bool extension_exists(const std::vector<std::uint64_t>& tuple,
                             const std::vector<std::uint64_t>& om, std::size_t slot,
                             std::uint64_t used) {
  if (slot == tuple.size()) return true;
  for (std::uint64_t s : om)
    if ((tuple[slot] & ~s) == 0 && (s & used) == 0)
      if (extension_exists(tuple, om, slot + 1, used | s)) return true;
  return false;
}

// Scans ordered tuples of pairwise disjoint independent sets ascending by
// concatenated masks; returns the first tuple with no extension, or nullopt
// for members. Membership additionally requires order >= p.
inline std::optional<std::vector<std::uint64_t>> wp_failing_tuple(const Graph& g, int p) {
  const std::vector<std::uint64_t> inds = independent_sets(g);
  const std::vector<std::uint64_t> om = omega(g);
  std::vector<std::uint64_t> tuple(static_cast<std::size_t>(p), 0);
  auto rec = [&](auto&& self, int slot, std::uint64_t used) -> bool {
    if (slot == p) return extension_exists(tuple, om, 0, 0);
    for (std::uint64_t a : inds) {
      if (a & used) continue;
      tuple[static_cast<std::size_t>(slot)] = a;
      if (!self(self, slot + 1, used | a)) return false;
    }
    return true;
  };
  if (rec(rec, 0, 0)) return std::nullopt;
  return tuple;
}

inline bool is_wp(const Graph& g, int p) {
  return g.order() >= p && !wp_failing_tuple(g, p).has_value();
}

// Runs fn and reports which library error it raised, if any.
template <class F>
inline std::optional<wpgraph::errc> error_code_of(F&& fn) {
  try {
    fn();
  } catch (const wpgraph::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double edge_prob = 0.5) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
