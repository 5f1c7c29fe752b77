#pragma once

#include <string>
#include <string_view>

#include "wpgraph/graph.hpp"

namespace wpgraph {

// graph6 short form, orders 1..62. Header byte 63+n, then ceil(C(n,2)/6)
// bytes in [63,126], each carrying six upper-triangle edge bits
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed most significant bit first,
// padded with zero bits.
//
// parse errors: byte_out_of_range, length_mismatch, nonzero_padding.
// encode errors: order_too_large (outside 1..62).
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

struct Graph6Record {
  std::string text;  // canonical encoding; re-encoding `graph` reproduces it
  Graph graph;
};

Graph6Record make_graph6_record(std::string_view text);

}  // namespace wpgraph
