#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpgraph/criteria.hpp"
#include "wpgraph/quasireg.hpp"
#include "wpgraph/wp.hpp"

namespace wpgraph {

using Json = nlohmann::ordered_json;

enum class CheckOutcome { pass, fail, not_applicable, cap_exceeded };

const char* check_outcome_label(CheckOutcome o);  // "pass" / "fail" / "not-applicable" / "cap-exceeded"

struct WpEntry {
  int p = 0;
  WpStatus status = WpStatus::cap_exceeded;
  std::string method;  // "definitional" or "one-well-covered"
  std::vector<VertexSet> failing_tuple;
  std::vector<VertexSet> extension;
};

struct QuasiRegEntry {
  Rational lambda;
  bool holds = false;
  std::optional<ExpansionWitness> witness;
};

// Which universally quantified statement a per-graph check contradicted.
// Any true flag on a corpus run is a discovery event and flips the exit code.
struct ViolationFlags {
  bool local_expansion = false;
  bool threshold_equivalence = false;
  bool w2_facts = false;
  bool coefficient_chains = false;
  bool criteria_soundness = false;
  bool w2_cross_check = false;

  bool any() const {
    return local_expansion || threshold_equivalence || w2_facts || coefficient_chains ||
           criteria_soundness || w2_cross_check;
  }
};

// Everything the harness knows about one graph after a full classification
// pass. Vertex sets serialize as sorted 1-indexed integer lists.
struct ClassificationReport {
  std::string graph6;
  int n = 0;
  int alpha = 0;
  bool connected = false;
  std::vector<BigInt> polynomial;
  std::vector<WpEntry> wp;              // ascending p
  std::vector<QuasiRegEntry> quasireg;  // lambda in option order
  CheckOutcome local_expansion = CheckOutcome::not_applicable;
  CheckOutcome threshold_equivalence = CheckOutcome::not_applicable;
  std::vector<CriterionVerdict> criteria;
  bool direct_log_concave = false;
  bool direct_unimodal = false;

  struct Audits {
    CheckOutcome w2_facts = CheckOutcome::not_applicable;
    std::string w2_facts_witness;
    std::vector<std::pair<Rational, ChainResult>> chain_i;  // per lambda
    std::vector<std::pair<int, ChainResult>> chain_ii;      // per p
    CheckOutcome w2_cross_check = CheckOutcome::not_applicable;
  } audits;

  ViolationFlags violations;  // bookkeeping for the sweep, not serialized
  bool cap_exceeded = false;
};

Json report_to_json(const ClassificationReport& r);
std::string report_to_jsonl(const ClassificationReport& r);  // one compact line, no newline

// Human output. Witness lists longer than eight vertices are truncated with
// an ellipsis marker and the count of what was cut.
std::string format_vertex_list(VertexSet s, std::size_t limit = 8);
std::string sweep_table_header(const std::vector<Rational>& lambdas, const std::vector<int>& ps);
std::string sweep_table_row(const ClassificationReport& r);
std::string analyze_detail(const ClassificationReport& r);

}  // namespace wpgraph
