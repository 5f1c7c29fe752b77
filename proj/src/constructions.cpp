#include "wpgraph/constructions.hpp"

#include <cctype>

namespace wpgraph {

Graph make_family(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  std::vector<std::pair<int, int>> edges;
  switch (spec.kind) {
    case Kind::cycle:
      if (spec.a < 3) throw Error(errc::bad_spec, "cycle needs at least 3 vertices");
      for (int i = 0; i < spec.a; ++i) edges.emplace_back(i, (i + 1) % spec.a);
      return Graph::from_edges(spec.a, edges);
    case Kind::path:
      if (spec.a < 1) throw Error(errc::bad_spec, "path needs at least 1 vertex");
      for (int i = 0; i + 1 < spec.a; ++i) edges.emplace_back(i, i + 1);
      return Graph::from_edges(spec.a, edges);
    case Kind::complete:
      if (spec.a < 1) throw Error(errc::bad_spec, "complete graph needs at least 1 vertex");
      for (int i = 0; i < spec.a; ++i)
        for (int j = i + 1; j < spec.a; ++j) edges.emplace_back(i, j);
      return Graph::from_edges(spec.a, edges);
    case Kind::complete_bipartite:
      if (spec.a < 1 || spec.b < 1)
        throw Error(errc::bad_spec, "complete bipartite graph needs nonempty parts");
      for (int i = 0; i < spec.a; ++i)
        for (int j = 0; j < spec.b; ++j) edges.emplace_back(i, spec.a + j);
      return Graph::from_edges(spec.a + spec.b, edges);
    case Kind::empty:
      if (spec.a < 1) throw Error(errc::bad_spec, "empty graph needs at least 1 vertex");
      return Graph::from_edges(spec.a, edges);
  }
  throw Error(errc::bad_spec, "unknown family kind");
}

Graph corona(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  const int n = ng * (1 + nh);
  if (n > kMaxOrder)
    throw Error(errc::order_too_large, "corona would have " + std::to_string(n) + " vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < ng; ++u)
    for (int v = u + 1; v < ng; ++v)
      if (g.has_edge(u, v)) edges.emplace_back(u, v);
  for (int i = 0; i < ng; ++i) {
    const int base = ng + i * nh;
    for (int u = 0; u < nh; ++u) {
      edges.emplace_back(i, base + u);
      for (int v = u + 1; v < nh; ++v)
        if (h.has_edge(u, v)) edges.emplace_back(base + u, base + v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph disjoint_union(std::span<const Graph> gs) {
  int n = 0;
  for (const Graph& g : gs) n += g.order();
  if (n > kMaxOrder)
    throw Error(errc::order_too_large, "union would have " + std::to_string(n) + " vertices");
  std::vector<std::pair<int, int>> edges;
  int base = 0;
  for (const Graph& g : gs) {
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v)
        if (g.has_edge(u, v)) edges.emplace_back(base + u, base + v);
    base += g.order();
  }
  return Graph::from_edges(n, edges);
}

namespace {

struct SpecParser {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(errc::bad_spec, why + " in '" + std::string(text) + "' at offset " +
                                    std::to_string(pos));
  }

  int number() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    int value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000) fail("size out of range");
      ++pos;
    }
    return value;
  }

  FamilySpec family() {
    if (done()) fail("expected a family letter");
    const char kind = peek();
    ++pos;
    FamilySpec spec;
    switch (kind) {
      case 'C': spec.kind = FamilySpec::Kind::cycle; break;
      case 'P': spec.kind = FamilySpec::Kind::path; break;
      case 'K': spec.kind = FamilySpec::Kind::complete; break;
      case 'E': spec.kind = FamilySpec::Kind::empty; break;
      default: fail("unknown family letter");
    }
    spec.a = number();
    if (kind == 'K' && !done() && peek() == ',') {
      ++pos;
      spec.kind = FamilySpec::Kind::complete_bipartite;
      spec.b = number();
    }
    return spec;
  }

  Graph term() {  // corona chain
    Graph g = make_family(family());
    while (!done() && peek() == '*') {
      ++pos;
      g = corona(g, make_family(family()));
    }
    return g;
  }

  Graph expression() {  // union chain
    std::vector<Graph> parts{term()};
    while (!done() && peek() == '+') {
      ++pos;
      parts.push_back(term());
    }
    if (parts.size() == 1) return parts[0];
    return disjoint_union(parts);
  }
};

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  SpecParser parser{text};
  FamilySpec spec = parser.family();
  if (!parser.done()) parser.fail("trailing characters");
  return spec;
}

Graph graph_from_spec_text(std::string_view text) {
  SpecParser parser{text};
  Graph g = parser.expression();
  if (!parser.done()) parser.fail("trailing characters");
  return g;
}

bool looks_like_family_spec(std::string_view text) {
  if (text.size() < 2) return false;
  if (text[0] != 'C' && text[0] != 'P' && text[0] != 'K' && text[0] != 'E') return false;
  return std::isdigit(static_cast<unsigned char>(text[1])) != 0;
}

}  // namespace wpgraph
