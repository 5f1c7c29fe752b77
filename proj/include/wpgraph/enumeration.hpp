#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "wpgraph/graph.hpp"

namespace wpgraph {

using BigInt = boost::multiprecision::cpp_int;

// Exact coefficient sequence s_0..s_alpha: s_k counts the independent sets of
// size k. Coefficients are kept as big integers because log-concavity tests
// square them.
struct IndependencePolynomial {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const IndependencePolynomial&, const IndependencePolynomial&) = default;
};

// All maximum independent sets, in ascending bit-pattern order. The list is
// complete; |sets| equals the top polynomial coefficient.
struct OmegaFamily {
  int alpha = 0;
  std::vector<VertexSet> sets;
};

bool is_independent(const Graph& g, VertexSet a);

// Size of a largest independent set, by branch and bound on bit rows.
int independence_number(const Graph& g);

struct PolynomialOptions {
  // Residual-subset memo entries kept at most; past the cap the recursion
  // simply stops inserting.
  std::size_t memo_cap = std::size_t{1} << 20;
};

// Exact coefficients via the vertex-deletion recursion
//   I(G) = I(G - v) + x * I(G - N[v]),
// memoized on the residual vertex set.
IndependencePolynomial independence_polynomial(const Graph& g, const PolynomialOptions& opts = {});

OmegaFamily maximum_independent_sets(const Graph& g);

namespace detail {

template <class F>
bool emit(F& f, VertexSet s) {
  if constexpr (std::is_void_v<std::invoke_result_t<F&, VertexSet>>) {
    f(s);
    return true;
  } else {
    return f(s);
  }
}

// Decides vertex membership from the highest index down, zero branch first,
// so leaves appear in ascending numeric order of the chosen bit pattern.
template <class F>
bool enumerate_rec(const Graph& g, int pos, Bits chosen, std::optional<int> size_filter, F& f) {
  if (pos < 0) {
    if (!size_filter || std::popcount(chosen) == *size_filter) return emit(f, VertexSet(chosen));
    return true;
  }
  if (size_filter) {
    const int have = std::popcount(chosen);
    if (have > *size_filter) return true;
    if (have + pos + 1 < *size_filter) return true;
  }
  if (!enumerate_rec(g, pos - 1, chosen, size_filter, f)) return false;
  if ((g.row(pos) & chosen) == 0)
    if (!enumerate_rec(g, pos - 1, chosen | bit(pos), size_filter, f)) return false;
  return true;
}

}  // namespace detail

// Streams every independent set exactly once, in ascending bit-pattern order
// (the empty set first). The callback may return bool; false stops the scan.
// With size_filter only sets of that exact size are emitted.
template <class F>
void enumerate_independent_sets(const Graph& g, std::optional<int> size_filter, F&& f) {
  F& ref = f;
  detail::enumerate_rec(g, g.order() - 1, Bits{0}, size_filter, ref);
}

template <class F>
void enumerate_independent_sets(const Graph& g, F&& f) {
  enumerate_independent_sets(g, std::nullopt, std::forward<F>(f));
}

// Materialized variant, ascending order.
std::vector<VertexSet> independent_sets(const Graph& g, std::optional<int> size_filter = std::nullopt);

// Number of independent sets (the coefficient sum) without building the list.
BigInt count_independent_sets(const Graph& g);

}  // namespace wpgraph
