#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wpgraph/graph.hpp"
#include "wpgraph/rational.hpp"

namespace wpgraph {

// A graph is lambda-quasi-regularizable when lambda*|A| <= |N(A)| for every
// independent set A. All comparisons cross-multiply exact integers; equality
// cases are exactly where a verdict must not wobble.

struct ExpansionWitness {
  VertexSet set;
  int neighborhood_size = 0;
  Rational deficiency;  // lambda*|A| - |N(A)|, positive for violations
};

struct QuasiRegResult {
  bool holds = false;
  std::optional<ExpansionWitness> witness;  // lexicographically first violation
};

// Short-circuits on the first violating set. lambda must be positive.
QuasiRegResult is_lambda_quasi_regularizable(const Graph& g, const Rational& lambda);

enum class PremiseStatus { checked, not_connected, not_w2 };

// Exhaustive check that every non-maximum independent set A of a connected
// W_2 member has |N(A)| >= 2|A|. A nonempty violation list would falsify the
// structural statement this toolkit audits; corpus runs abort on it.
struct LocalExpansionReport {
  PremiseStatus premises = PremiseStatus::checked;
  std::vector<ExpansionWitness> violations;

  bool applicable() const { return premises == PremiseStatus::checked; }
  bool passed() const { return applicable() && violations.empty(); }
};

LocalExpansionReport verify_local_expansion(const Graph& g, bool connected_verified,
                                            bool w2_verified);

// For connected W_2 members, 2-quasi-regularizability must coincide with
// n >= 3*alpha. Both sides are computed independently and compared.
struct ThresholdReport {
  PremiseStatus premises = PremiseStatus::checked;
  bool two_quasi_regularizable = false;
  bool order_at_least_3alpha = false;
  std::optional<ExpansionWitness> witness;  // present when both sides are false

  bool applicable() const { return premises == PremiseStatus::checked; }
  bool agree() const { return two_quasi_regularizable == order_at_least_3alpha; }
  bool passed() const { return applicable() && agree(); }
};

ThresholdReport check_threshold_equivalence(const Graph& g, bool connected_verified,
                                            bool w2_verified);

// Largest lambda for which the graph is lambda-quasi-regularizable:
// min |N(A)|/|A| over nonempty independent A, with the lexicographically
// first minimizer.
std::pair<Rational, ExpansionWitness> min_expansion_ratio(const Graph& g);

}  // namespace wpgraph
