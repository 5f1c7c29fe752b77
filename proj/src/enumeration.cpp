#include "wpgraph/enumeration.hpp"

#include <unordered_map>

namespace wpgraph {

bool is_independent(const Graph& g, VertexSet a) {
  for (Bits b = a.bits(); b != 0; b &= b - 1)
    if (g.row(std::countr_zero(b)) & a.bits()) return false;
  return true;
}

namespace {

// Lowest-index vertex of maximum degree within the residual set. Any pivot is
// correct; this one keeps recursion traces deterministic.
int pivot_vertex(const Graph& g, Bits residual) {
  int best = -1, best_deg = -1;
  for (Bits b = residual; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    const int deg = std::popcount(g.row(v) & residual);
    if (deg > best_deg) {
      best = v;
      best_deg = deg;
    }
  }
  return best;
}

void alpha_rec(const Graph& g, Bits residual, int size, int& best) {
  // Peel vertices of residual degree 0 and 1 first: taking them is always
  // safe, and it keeps path- and cycle-like residues out of the branch tree.
  for (bool changed = true; changed;) {
    changed = false;
    for (Bits b = residual; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      const Bits nb = g.row(v) & residual;
      if (nb == 0) {
        residual &= ~bit(v);
        ++size;
      } else if (std::popcount(nb) == 1) {
        residual &= ~(nb | bit(v));
        ++size;
        changed = true;
        break;
      }
    }
  }
  if (size + std::popcount(residual) <= best) return;
  if (residual == 0) {
    if (size > best) best = size;
    return;
  }
  const int v = pivot_vertex(g, residual);
  alpha_rec(g, residual & ~(g.row(v) | bit(v)), size + 1, best);
  alpha_rec(g, residual & ~bit(v), size, best);
}

using Coeffs = std::vector<BigInt>;

Coeffs add_shifted(const Coeffs& a, const Coeffs& b) {
  // a + x*b
  Coeffs out(std::max(a.size(), b.size() + 1), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
  return out;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Connected piece of `residual` containing its lowest vertex.
Bits residual_component(const Graph& g, Bits residual) {
  Bits seen = bit(std::countr_zero(residual));
  Bits frontier = seen;
  while (frontier != 0) {
    Bits next = 0;
    for (Bits b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
    frontier = next & residual & ~seen;
    seen |= frontier;
  }
  return seen;
}

struct PolyContext {
  const Graph& g;
  std::size_t memo_cap;
  std::unordered_map<Bits, Coeffs> memo;
};

// Deletion recursion I(G) = I(G - v) + x*I(G - N[v]), factored over the
// connected pieces of the residual set: deleting closed neighborhoods
// splinters sparse graphs, and without the product step the memo would have
// to hold every splinter pattern separately.
Coeffs poly_rec(PolyContext& ctx, Bits residual) {
  if (residual == 0) return {BigInt(1)};
  if (auto it = ctx.memo.find(residual); it != ctx.memo.end()) return it->second;
  const Bits comp = residual_component(ctx.g, residual);
  Coeffs out;
  if (comp != residual) {
    out = multiply(poly_rec(ctx, comp), poly_rec(ctx, residual & ~comp));
  } else {
    const int v = pivot_vertex(ctx.g, residual);
    Coeffs without = poly_rec(ctx, residual & ~bit(v));
    Coeffs with = poly_rec(ctx, residual & ~(ctx.g.row(v) | bit(v)));
    out = add_shifted(without, with);
  }
  if (ctx.memo.size() < ctx.memo_cap) ctx.memo.emplace(residual, out);
  return out;
}

}  // namespace

int independence_number(const Graph& g) {
  int best = 0;
  alpha_rec(g, full_mask(g.order()), 0, best);
  return best;
}

IndependencePolynomial independence_polynomial(const Graph& g, const PolynomialOptions& opts) {
  PolyContext ctx{g, opts.memo_cap, {}};
  return {poly_rec(ctx, full_mask(g.order()))};
}

OmegaFamily maximum_independent_sets(const Graph& g) {
  OmegaFamily out;
  out.alpha = independence_number(g);
  enumerate_independent_sets(g, out.alpha, [&](VertexSet s) { out.sets.push_back(s); });
  return out;
}

std::vector<VertexSet> independent_sets(const Graph& g, std::optional<int> size_filter) {
  std::vector<VertexSet> out;
  enumerate_independent_sets(g, size_filter, [&](VertexSet s) { out.push_back(s); });
  return out;
}

BigInt count_independent_sets(const Graph& g) {
  BigInt total = 0;
  for (const BigInt& c : independence_polynomial(g).coeffs) total += c;
  return total;
}

}  // namespace wpgraph
