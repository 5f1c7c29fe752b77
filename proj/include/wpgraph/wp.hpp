#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wpgraph/enumeration.hpp"
#include "wpgraph/graph.hpp"

namespace wpgraph {

// A graph is in W_p when it has at least p vertices and every p pairwise
// disjoint independent sets extend to p pairwise disjoint maximum independent
// sets, one containing each. W_1 is exactly the well-covered class.

struct WpCaps {
  int definitional_n_cap = 14;       // refuse the definitional scan above this order
  std::size_t omega_cap = 5000;      // refuse when |Omega| exceeds this
};

enum class WpStatus { member, non_member, cap_exceeded };

struct WpWitness {
  WpStatus status = WpStatus::non_member;
  // non_member: the lexicographically first tuple with no disjoint extension.
  // Empty only in the degenerate order-0 case, where membership fails on the
  // order requirement alone.
  std::vector<VertexSet> failing_tuple;
  // member: the lexicographically first extension of the all-empty tuple,
  // i.e. p pairwise disjoint maximum independent sets.
  std::vector<VertexSet> extension;
  std::string method = "definitional";
};

// Lexicographically first list of pairwise disjoint maximum independent sets
// S_1..S_p with tuple[i] a subset of S_i, or nullopt when none exists.
// Throws bad_tuple when the tuple overlaps or carries an edge.
std::optional<std::vector<VertexSet>> disjoint_extension(const Graph& g,
                                                         std::span<const VertexSet> tuple,
                                                         const OmegaFamily& omega);

WpWitness is_wp(const Graph& g, int p, const WpCaps& caps = {});

// Every maximal independent set is maximum.
bool is_well_covered(const Graph& g);

// Well covered, and deleting any single vertex leaves a well-covered graph
// with the same independence number. Coincides with W_2 membership on graphs
// without isolated vertices. Throws has_isolated_vertex.
bool is_one_well_covered(const Graph& g);

// Lexicographically first maximum independent set containing `a` and avoiding
// `v`, or nullopt. `a` must be independent, non-maximum (else a_maximum) and
// must not contain v.
std::optional<VertexSet> avoidance_check(const Graph& g, VertexSet a, int v);
std::optional<VertexSet> avoidance_check(const Graph& g, VertexSet a, int v,
                                         const OmegaFamily& omega);

// Structural audit of a (caller-verified) W_2 member. Each fact is checked
// exhaustively; failures carry a witness and falsify the underlying lemma, so
// corpus runs treat any of them as fatal findings.
struct W2FactResult {
  bool checked = false;
  bool passed = false;
  std::string witness;  // human-readable description of the first failure
};

struct W2AuditRecord {
  W2FactResult no_isolated;        // (i)
  W2FactResult localization;       // (ii) G_A stays W_2, alpha drops by |A|
  W2FactResult componentwise;      // (iii)
  W2FactResult avoidance;          // (iv)
  W2FactResult leafless;           // (v) connected non-K2 members have min degree >= 2
  bool cap_exceeded = false;       // a nested membership test hit a cap

  bool all_passed() const {
    return no_isolated.passed && localization.passed && componentwise.passed &&
           avoidance.passed && leafless.passed;
  }
};

W2AuditRecord w2_structure_audit(const Graph& g, const WpCaps& caps = {});

}  // namespace wpgraph
