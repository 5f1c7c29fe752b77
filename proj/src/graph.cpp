#include "wpgraph/graph.hpp"

#include <array>

namespace wpgraph {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(std::vector<Bits> rows) : rows_(std::move(rows)) {
  const int n = order();
  if (n > kMaxOrder) throw Error(errc::order_too_large, "graph order " + std::to_string(n) + " exceeds 62");
  const Bits allowed = full_mask(n);
  for (int v = 0; v < n; ++v) {
    if (rows_[static_cast<std::size_t>(v)] & ~allowed)
      throw Error(errc::bad_argument, "adjacency row has bits beyond vertex range");
    if (rows_[static_cast<std::size_t>(v)] & bit(v))
      throw Error(errc::bad_argument, "self-loop at vertex " + std::to_string(v + 1));
  }
  for (int u = 0; u < n; ++u)
    for (Bits b = rows_[static_cast<std::size_t>(u)]; b != 0; b &= b - 1) {
      int v = std::countr_zero(b);
      if (!((rows_[static_cast<std::size_t>(v)] >> u) & 1))
        throw Error(errc::bad_argument, "adjacency is not symmetric");
    }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0 || n > kMaxOrder) throw Error(errc::order_too_large, "graph order must be 0..62");
  std::vector<Bits> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw Error(errc::bad_argument, "bad edge endpoint");
    rows[static_cast<std::size_t>(u)] |= bit(v);
    rows[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Bits> rows(static_cast<std::size_t>(n), 0);
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if ((mask >> t) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
  return Graph(std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order(); ++v) twice += degree(v);
  return twice / 2;
}

VertexSet open_neighborhood(const Graph& g, VertexSet a) {
  Bits nb = 0;
  for (Bits b = a.bits(); b != 0; b &= b - 1) nb |= g.row(std::countr_zero(b));
  return VertexSet(nb & ~a.bits());
}

VertexSet closed_neighborhood(const Graph& g, VertexSet a) {
  Bits nb = a.bits();
  for (Bits b = a.bits(); b != 0; b &= b - 1) nb |= g.row(std::countr_zero(b));
  return VertexSet(nb);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> map = keep.to_vector();
  const int m = static_cast<int>(map.size());
  std::vector<Bits> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    const Bits orig = g.row(map[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m; ++j)
      if ((orig >> map[static_cast<std::size_t>(j)]) & 1) rows[static_cast<std::size_t>(i)] |= bit(j);
  }
  return {Graph(std::move(rows)), std::move(map)};
}

InducedSubgraph localization(const Graph& g, VertexSet a) {
  for (Bits b = a.bits(); b != 0; b &= b - 1) {
    int v = std::countr_zero(b);
    if (g.row(v) & a.bits())
      throw Error(errc::not_independent, "localization at a dependent set");
  }
  return induced_subgraph(g, g.vertices() - closed_neighborhood(g, a));
}

namespace {

Bits reachable_from(const Graph& g, int start) {
  Bits seen = bit(start);
  Bits frontier = seen;
  while (frontier != 0) {
    Bits next = 0;
    for (Bits b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw Error(errc::bad_argument, "connectivity of the empty graph");
  return reachable_from(g, 0) == full_mask(g.order());
}

std::vector<InducedSubgraph> connected_components(const Graph& g) {
  std::vector<InducedSubgraph> out;
  Bits remaining = full_mask(g.order());
  while (remaining != 0) {
    int start = std::countr_zero(remaining);
    Bits comp = reachable_from(g, start) & remaining;
    out.push_back(induced_subgraph(g, VertexSet(comp)));
    remaining &= ~comp;
  }
  return out;
}

std::string vertex_set_label(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.to_vector()) {
    if (!first) out += ", ";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace wpgraph
