#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wpgraph/graph6.hpp"
#include "wpgraph/report.hpp"

namespace wpgraph {

struct SweepOptions {
  std::vector<int> p_list{1, 2};
  std::vector<Rational> lambdas{Rational(1), Rational(3, 2), Rational(2)};
  // Definitional membership scan runs up to this order; for p = 2 the
  // one-well-covered fast path covers orders up to fast_path_cap, with the
  // method recorded in the report.
  int definitional_cap = 12;
  int fast_path_cap = 14;
  std::size_t omega_cap = 5000;
  int jobs = 1;  // 1 = the serial reference path, >1 = OpenMP workers
  bool strict_parse = false;
};

// Appends lambda = p for every requested p, so criterion premises are
// machine-checked rather than inferred from the order threshold.
SweepOptions normalize_options(SweepOptions opts);

// Full classification of one graph: polynomial, memberships, expansion
// checks, audits, criteria. This is the per-graph kernel the sweep runs in
// parallel; it is pure and thread-safe.
ClassificationReport classify_graph(const Graph& g, const std::string& graph6_text,
                                    const SweepOptions& opts);

struct ParseIssue {
  std::size_t line_number = 0;
  std::string message;
};

// All 2^C(n,2) labeled graphs on n vertices (n <= 7, order_too_large above),
// optionally restricted to connected ones. Isomorphic duplicates are
// deliberate: verification is per-graph, duplication costs time only.
template <class F>
void generate_all_graphs(int n, bool connected_only, F&& f);

// Newline-delimited graph6 records in file order. Blank lines and a leading
// ">>graph6<<" marker are ignored. Malformed lines throw in strict mode and
// are reported and skipped otherwise.
std::vector<Graph6Record> ingest_corpus(std::istream& in, bool strict,
                                        std::vector<ParseIssue>* issues = nullptr);
std::vector<std::string> read_corpus_lines(const std::string& path);  // io_error on failure

struct GenSpec {
  int n = 0;
  bool connected_only = false;
};

struct SweepInput {
  std::string corpus_id;
  std::vector<std::string> lines;  // corpus mode: raw file lines
  std::optional<GenSpec> gen;      // generator mode
};

struct ViolationCounts {
  long long local_expansion = 0;
  long long threshold_equivalence = 0;
  long long w2_facts = 0;
  long long coefficient_chains = 0;
  long long criteria_soundness = 0;
  long long w2_cross_check = 0;

  long long total() const {
    return local_expansion + threshold_equivalence + w2_facts + coefficient_chains +
           criteria_soundness + w2_cross_check;
  }
};

struct SweepSummary {
  std::string corpus_id;
  long long graphs = 0;
  long long connected = 0;
  long long well_covered = 0;
  long long w2 = 0;
  long long two_quasi_regularizable = 0;
  long long order_ge_3alpha = 0;
  ViolationCounts violations;
  long long cap_exceeded = 0;
  double wall_seconds = 0.0;
  int jobs = 1;
  std::vector<ParseIssue> issues;
};

// Reports arrive at the sink in input order regardless of the worker count,
// so equal corpora produce byte-identical outputs at any parallelism.
using ReportSink = std::function<void(std::size_t index, const ClassificationReport&)>;

SweepSummary sweep(const SweepInput& input, const SweepOptions& opts, const ReportSink& sink);

std::string summary_table(const SweepSummary& s);

// ---- generator definition ----

namespace detail {
bool edge_mask_connected(int n, std::uint64_t mask);
}

template <class F>
void generate_all_graphs(int n, bool connected_only, F&& f) {
  if (n < 1) throw Error(errc::bad_argument, "need at least one vertex");
  if (n > 7)
    throw Error(errc::order_too_large, "labeled enumeration is capped at 7 vertices");
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    if (connected_only && !detail::edge_mask_connected(n, mask)) continue;
    f(Graph::from_edge_mask(n, mask));
  }
}

}  // namespace wpgraph
