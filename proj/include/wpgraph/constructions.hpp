#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wpgraph/graph.hpp"

namespace wpgraph {

// Named generators. Text forms: "C5", "P4", "K3", "K2,3", "E4"; corona is
// spelled "K2*K1" and disjoint union "K2+K2" (corona binds tighter).
struct FamilySpec {
  enum class Kind { cycle, path, complete, complete_bipartite, empty };
  Kind kind = Kind::empty;
  int a = 0;  // size, or left part size
  int b = 0;  // right part size (complete_bipartite only)
};

// Vertices 0..n-1 in conventional order: cycle edges i-(i+1 mod n), path
// edges i-(i+1), bipartite parts 0..a-1 and a..a+b-1. Cycles need size >= 3,
// everything else size >= 1 (bad_spec otherwise).
Graph make_family(const FamilySpec& spec);

// g, then one copy of h per vertex of g: copy i occupies the block
// n(g)+i*n(h) .. n(g)+(i+1)*n(h)-1 and is completely joined to vertex i.
// Throws order_too_large past 62 vertices.
Graph corona(const Graph& g, const Graph& h);

// Block-diagonal adjacency, members in order. Throws order_too_large.
Graph disjoint_union(std::span<const Graph> gs);

FamilySpec parse_family_spec(std::string_view text);

// Full expression grammar over family specs: '*' corona, '+' union,
// left-associative, '*' binding tighter. Throws bad_spec.
Graph graph_from_spec_text(std::string_view text);

// True when the text looks like a spec expression rather than a graph6 record.
bool looks_like_family_spec(std::string_view text);

}  // namespace wpgraph
