#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wpgraph/errors.hpp"

namespace wpgraph {

using Bits = std::uint64_t;  // bit i <-> vertex i

constexpr int kMaxOrder = 62;  // one adjacency row fits one word, graph6 short form

constexpr Bits bit(int v) { return Bits{1} << v; }
constexpr Bits full_mask(int n) { return n == 0 ? 0 : (~Bits{0} >> (64 - n)); }

// Set of vertices of one graph, as a bit vector. Ordering is numeric on the
// bit pattern; every "lexicographically first" tie-break in this library
// means the smallest bit pattern.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Bits bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vs) {
    Bits b = 0;
    for (int v : vs) b |= bit(v);
    return VertexSet(b);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint_with(VertexSet o) const { return (bits_ & o.bits_) == 0; }

  // Ascending vertex indices (0-based).
  std::vector<int> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  Bits bits_ = 0;
};

// Immutable simple graph on at most 62 vertices, adjacency as one bit row per
// vertex. Construction validates symmetry, irreflexivity and that no bit at
// index >= n is set; operations hand out fresh values.
//
// Order zero is permitted as a value (localization can delete every vertex);
// the graph6 codec and the CLI only ever produce orders 1..62.
class Graph {
 public:
  Graph() = default;  // the empty graph (n = 0)

  // Rows must already describe a simple graph; throws bad_argument otherwise.
  explicit Graph(std::vector<Bits> rows);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  // Edge bits in column-major upper-triangle order: pair t enumerates
  // (0,1), (0,2), (1,2), (0,3), ... — the same order graph6 uses.
  static Graph from_edge_mask(int n, std::uint64_t mask);

  int order() const { return static_cast<int>(rows_.size()); }
  Bits row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  VertexSet neighbors(int v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
  bool has_edge(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1; }
  int degree(int v) const { return std::popcount(rows_[static_cast<std::size_t>(v)]); }
  VertexSet vertices() const { return VertexSet(full_mask(order())); }
  int edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bits> rows_;
};

// Induced subgraph together with the map from its vertex indices back to the
// indices of the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;
};

// N(a): vertices outside `a` adjacent to some member of `a`.
VertexSet open_neighborhood(const Graph& g, VertexSet a);
// N[a] = a united with N(a).
VertexSet closed_neighborhood(const Graph& g, VertexSet a);

// Deletes the closed neighborhood of an independent set and keeps the rest as
// an induced subgraph. Throws not_independent when `a` carries an edge.
InducedSubgraph localization(const Graph& g, VertexSet a);

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

bool is_connected(const Graph& g);

// Maximal connected induced subgraphs, ordered by smallest original vertex.
std::vector<InducedSubgraph> connected_components(const Graph& g);

// Renders {0, 2} as "{1, 3}": report output is 1-indexed.
std::string vertex_set_label(VertexSet s);

}  // namespace wpgraph
