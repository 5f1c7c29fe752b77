#include "wpgraph/graph6.hpp"

namespace wpgraph {

namespace {

constexpr int kOffset = 63;

int edge_byte_count(int n) {
  int pairs = n * (n - 1) / 2;
  return (pairs + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Error(errc::length_mismatch, "empty graph6 record");
  const unsigned char header = static_cast<unsigned char>(text[0]);
  if (header < kOffset + 1 || header > kOffset + kMaxOrder)
    throw Error(errc::byte_out_of_range,
                "header byte " + std::to_string(int(header)) + " outside order range 1..62");
  const int n = header - kOffset;
  const int pairs = n * (n - 1) / 2;
  const int want = edge_byte_count(n);
  if (static_cast<int>(text.size()) - 1 != want)
    throw Error(errc::length_mismatch, "expected " + std::to_string(want) + " edge bytes, got " +
                                           std::to_string(text.size() - 1));

  std::vector<Bits> rows(static_cast<std::size_t>(n), 0);
  int t = 0;  // pair index in column-major upper-triangle order
  int i = 0, j = 1;
  for (int byte_idx = 0; byte_idx < want; ++byte_idx) {
    const unsigned char c = static_cast<unsigned char>(text[static_cast<std::size_t>(byte_idx) + 1]);
    if (c < kOffset || c > kOffset + 63)
      throw Error(errc::byte_out_of_range, "edge byte " + std::to_string(int(c)) + " at position " +
                                               std::to_string(byte_idx + 1));
    const int value = c - kOffset;
    for (int b = 5; b >= 0; --b, ++t) {
      const int set = (value >> b) & 1;
      if (t >= pairs) {
        if (set) throw Error(errc::nonzero_padding, "padding bit set");
        continue;
      }
      if (set) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(std::move(rows));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > kMaxOrder)
    throw Error(errc::order_too_large, "graph6 short form covers orders 1..62");
  std::string out;
  out.reserve(static_cast<std::size_t>(1 + edge_byte_count(n)));
  out.push_back(static_cast<char>(kOffset + n));
  int value = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + value));
        value = 0;
        filled = 0;
      }
    }
  if (filled != 0) out.push_back(static_cast<char>(kOffset + (value << (6 - filled))));
  return out;
}

Graph6Record make_graph6_record(std::string_view text) {
  Graph g = parse_graph6(text);
  return {std::string(text), std::move(g)};
}

}  // namespace wpgraph
