#include "wpgraph/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <sstream>
#include <variant>

namespace wpgraph {

SweepOptions normalize_options(SweepOptions opts) {
  for (int p : opts.p_list) {
    const Rational lp(p);
    if (std::find(opts.lambdas.begin(), opts.lambdas.end(), lp) == opts.lambdas.end())
      opts.lambdas.push_back(lp);
  }
  if (opts.jobs < 1) opts.jobs = 1;
  return opts;
}

namespace detail {

bool edge_mask_connected(int n, std::uint64_t mask) {
  std::array<Bits, 8> rows{};
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if ((mask >> t) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
  Bits seen = 1, frontier = 1;
  while (frontier != 0) {
    Bits next = 0;
    for (Bits b = frontier; b != 0; b &= b - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(b))];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == full_mask(n);
}

}  // namespace detail

ClassificationReport classify_graph(const Graph& g, const std::string& graph6_text,
                                    const SweepOptions& opts) {
  ClassificationReport r;
  r.graph6 = graph6_text;
  r.n = g.order();
  r.connected = is_connected(g);
  r.polynomial = independence_polynomial(g).coeffs;
  r.alpha = static_cast<int>(r.polynomial.size()) - 1;

  // W_p membership per requested p
  const WpCaps caps{opts.definitional_cap, opts.omega_cap};
  bool w2_member = false, w2_capped = false;
  bool has_isolated = false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) has_isolated = true;

  for (int p : opts.p_list) {
    WpEntry entry;
    entry.p = p;
    if (g.order() <= opts.definitional_cap) {
      WpWitness w = is_wp(g, p, caps);
      entry.status = w.status;
      entry.method = "definitional";
      entry.failing_tuple = std::move(w.failing_tuple);
      entry.extension = std::move(w.extension);
      // Cross-check the two W_2 routes whenever both are available.
      if (p == 2 && entry.status != WpStatus::cap_exceeded && !has_isolated) {
        const bool fast = is_one_well_covered(g);
        const bool definitional = entry.status == WpStatus::member;
        r.audits.w2_cross_check = fast == definitional ? CheckOutcome::pass : CheckOutcome::fail;
        if (fast != definitional) r.violations.w2_cross_check = true;
      }
    } else if (p == 2 && g.order() <= opts.fast_path_cap) {
      entry.method = "one-well-covered";
      if (has_isolated)
        entry.status = WpStatus::non_member;  // membership forces isolate-freeness
      else
        entry.status = is_one_well_covered(g) ? WpStatus::member : WpStatus::non_member;
    } else {
      entry.status = WpStatus::cap_exceeded;
      entry.method = "definitional";
    }
    if (entry.status == WpStatus::cap_exceeded) r.cap_exceeded = true;
    if (p == 2) {
      w2_member = entry.status == WpStatus::member;
      w2_capped = entry.status == WpStatus::cap_exceeded;
    }
    r.wp.push_back(std::move(entry));
  }

  // Quasi-regularizability for each lambda
  for (const Rational& lambda : opts.lambdas) {
    QuasiRegResult q = is_lambda_quasi_regularizable(g, lambda);
    r.quasireg.push_back(QuasiRegEntry{lambda, q.holds, q.witness});
  }
  auto qr_holds = [&](const Rational& lambda) -> bool {
    for (const QuasiRegEntry& e : r.quasireg)
      if (e.lambda == lambda) return e.holds;
    return false;
  };

  // Expansion checks, gated on connected W_2 membership
  const bool has_p2 = std::find(opts.p_list.begin(), opts.p_list.end(), 2) != opts.p_list.end();
  if (has_p2 && r.connected && w2_member) {
    LocalExpansionReport le = verify_local_expansion(g, true, true);
    r.local_expansion = le.passed() ? CheckOutcome::pass : CheckOutcome::fail;
    if (!le.passed()) r.violations.local_expansion = true;

    ThresholdReport th = check_threshold_equivalence(g, true, true);
    r.threshold_equivalence = th.passed() ? CheckOutcome::pass : CheckOutcome::fail;
    if (!th.passed()) r.violations.threshold_equivalence = true;
  } else if (has_p2 && w2_capped && r.connected) {
    r.local_expansion = CheckOutcome::cap_exceeded;
    r.threshold_equivalence = CheckOutcome::cap_exceeded;
  }

  // Structural facts audit for W_2 members
  if (has_p2 && w2_member) {
    W2AuditRecord audit = w2_structure_audit(g, caps);
    if (audit.cap_exceeded) {
      r.audits.w2_facts = CheckOutcome::cap_exceeded;
      r.cap_exceeded = true;
    } else if (audit.all_passed()) {
      r.audits.w2_facts = CheckOutcome::pass;
    } else {
      r.audits.w2_facts = CheckOutcome::fail;
      r.violations.w2_facts = true;
      for (const W2FactResult* f :
           {&audit.no_isolated, &audit.localization, &audit.componentwise, &audit.avoidance,
            &audit.leafless})
        if (f->checked && !f->passed) {
          r.audits.w2_facts_witness = f->witness;
          break;
        }
    }
  }

  // Coefficient chains under machine-verified premises
  for (const Rational& lambda : opts.lambdas) {
    ChainResult res;
    if (qr_holds(lambda)) {
      res = coefficient_inequality_audit(r.n, r.alpha, r.polynomial, 1, lambda, true, false).chain_i;
      if (res.status == ChainResult::Status::fail) r.violations.coefficient_chains = true;
    }
    r.audits.chain_i.emplace_back(lambda, res);
  }
  for (const WpEntry& e : r.wp) {
    ChainResult res;
    if (r.connected && e.status == WpStatus::member) {
      res = coefficient_inequality_audit(r.n, r.alpha, r.polynomial, e.p, Rational(1), false, true)
                .chain_ii;
      if (res.status == ChainResult::Status::fail) r.violations.coefficient_chains = true;
    }
    r.audits.chain_ii.emplace_back(e.p, res);
  }

  // Unified criteria verdicts
  std::vector<MembershipInput> memberships;
  for (const WpEntry& e : r.wp)
    if (e.status == WpStatus::member)
      memberships.push_back(MembershipInput{e.p, true, qr_holds(Rational(e.p))});
  r.criteria = unified_verdict(r.connected, memberships, r.n, r.alpha, r.polynomial);
  for (const CriterionVerdict& c : r.criteria) {
    if (c.name == "direct") {
      r.direct_log_concave = *c.direct_log_concave;
      r.direct_unimodal = *c.direct_unimodal;
    }
  }
  // Soundness: a fired formula with verified premises must be matched by the
  // direct check on the exact polynomial.
  for (const CriterionVerdict& c : r.criteria) {
    if (c.name == "direct" || !c.fired || !c.premises_verified) continue;
    const bool ok = c.name == "unimodality_LR" ? r.direct_unimodal : r.direct_log_concave;
    if (!ok) r.violations.criteria_soundness = true;
  }
  return r;
}

namespace {

std::string_view normalize_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  return line;
}

}  // namespace

std::vector<Graph6Record> ingest_corpus(std::istream& in, bool strict,
                                        std::vector<ParseIssue>* issues) {
  std::vector<Graph6Record> out;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string_view line = normalize_line(raw);
    if (line.empty()) continue;
    try {
      out.push_back(make_graph6_record(line));
    } catch (const Error& e) {
      if (strict)
        throw Error(e.code(), "line " + std::to_string(line_number) + ": " + e.what());
      if (issues) issues->push_back({line_number, e.what()});
    }
  }
  return out;
}

std::vector<std::string> read_corpus_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io_error, "cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) lines.push_back(raw);
  return lines;
}

namespace {

// Work items stay slim: generator mode holds edge masks, corpus mode holds
// the normalized lines. Reports are built and destroyed inside the workers;
// only aggregation and emission run on the driving thread.
struct WorkList {
  std::vector<std::uint64_t> masks;                          // generator mode
  std::vector<std::pair<std::string, std::size_t>> lines;    // corpus mode: text, line number

  std::size_t size() const { return masks.empty() ? lines.size() : masks.size(); }
};

using ItemResult = std::variant<ClassificationReport, ParseIssue>;

ItemResult run_item(const WorkList& items, std::size_t index, const SweepInput& input,
                    const SweepOptions& opts) {
  try {
    if (input.gen) {
      Graph g = Graph::from_edge_mask(input.gen->n, items.masks[index]);
      return classify_graph(g, encode_graph6(g), opts);
    }
    const auto& [text, line_number] = items.lines[index];
    try {
      Graph g = parse_graph6(text);
      return classify_graph(g, text, opts);
    } catch (const Error& e) {
      return ParseIssue{line_number, e.what()};
    }
  } catch (const Error& e) {
    return ParseIssue{0, e.what()};
  }
}

void accumulate(SweepSummary& s, const ClassificationReport& r) {
  ++s.graphs;
  if (r.connected) ++s.connected;
  for (const WpEntry& e : r.wp) {
    if (e.p == 1 && e.status == WpStatus::member) ++s.well_covered;
    if (e.p == 2 && e.status == WpStatus::member) ++s.w2;
  }
  for (const QuasiRegEntry& e : r.quasireg)
    if (e.lambda == Rational(2) && e.holds) ++s.two_quasi_regularizable;
  if (r.n >= 3 * r.alpha) ++s.order_ge_3alpha;
  if (r.cap_exceeded) ++s.cap_exceeded;
  if (r.violations.local_expansion) ++s.violations.local_expansion;
  if (r.violations.threshold_equivalence) ++s.violations.threshold_equivalence;
  if (r.violations.w2_facts) ++s.violations.w2_facts;
  if (r.violations.coefficient_chains) ++s.violations.coefficient_chains;
  if (r.violations.criteria_soundness) ++s.violations.criteria_soundness;
  if (r.violations.w2_cross_check) ++s.violations.w2_cross_check;
}

}  // namespace

namespace {

std::vector<std::uint64_t> generator_masks(const GenSpec& gen, int jobs) {
  if (gen.n < 1) throw Error(errc::bad_argument, "need at least one vertex");
  if (gen.n > 7) throw Error(errc::order_too_large, "labeled enumeration is capped at 7 vertices");
  const int pairs = gen.n * (gen.n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::vector<std::uint64_t> masks;
  if (!gen.connected_only) {
    masks.resize(total);
    for (std::uint64_t m = 0; m < total; ++m) masks[m] = m;
    return masks;
  }
  std::vector<char> keep(total);
  if (jobs > 1) {
#pragma omp parallel for schedule(static) num_threads(jobs)
    for (long long m = 0; m < static_cast<long long>(total); ++m)
      keep[static_cast<std::size_t>(m)] =
          detail::edge_mask_connected(gen.n, static_cast<std::uint64_t>(m));
  } else {
    for (std::uint64_t m = 0; m < total; ++m) keep[m] = detail::edge_mask_connected(gen.n, m);
  }
  for (std::uint64_t m = 0; m < total; ++m)
    if (keep[m]) masks.push_back(m);
  return masks;
}

}  // namespace

SweepSummary sweep(const SweepInput& input, const SweepOptions& raw_opts, const ReportSink& sink) {
  const SweepOptions opts = normalize_options(raw_opts);
  const auto start = std::chrono::steady_clock::now();

  WorkList items;
  if (input.gen) {
    items.masks = generator_masks(*input.gen, opts.jobs);
  } else {
    std::size_t line_number = 0;
    for (const std::string& raw : input.lines) {
      ++line_number;
      const std::string_view line = normalize_line(raw);
      if (line.empty()) continue;
      items.lines.emplace_back(std::string(line), line_number);
    }
  }

  SweepSummary summary;
  summary.corpus_id = input.corpus_id;
  summary.jobs = opts.jobs;

  // Chunked two-phase loop: classify a block in parallel, then aggregate and
  // emit in input order. Workers also destroy the previous block's reports
  // (slot assignment), keeping the serial phase down to counters and the sink.
  constexpr std::size_t kChunk = 4096;
  std::vector<ItemResult> buffer(std::min(kChunk, items.size()));
  std::size_t emitted = 0;
  for (std::size_t base = 0; base < items.size(); base += kChunk) {
    const std::size_t count = std::min(kChunk, items.size() - base);
    if (opts.jobs > 1) {
      // Interleaved static schedule: slot ownership is the same every chunk,
      // so report memory is freed by the thread that allocated it, while the
      // interleaving spreads expensive graphs (members under full audit)
      // across workers.
#pragma omp parallel for schedule(static, 16) num_threads(opts.jobs)
      for (long long i = 0; i < static_cast<long long>(count); ++i)
        buffer[static_cast<std::size_t>(i)] =
            run_item(items, base + static_cast<std::size_t>(i), input, opts);
    } else {
      // Serial reference path; the parallel loop above must match it exactly.
      for (std::size_t i = 0; i < count; ++i) buffer[i] = run_item(items, base + i, input, opts);
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (const ParseIssue* issue = std::get_if<ParseIssue>(&buffer[i])) {
        // Generated graphs cannot fail to parse; an issue there is a real error.
        if (input.gen || opts.strict_parse)
          throw Error(errc::io_error,
                      "line " + std::to_string(issue->line_number) + ": " + issue->message);
        summary.issues.push_back(*issue);
        continue;
      }
      const ClassificationReport& r = std::get<ClassificationReport>(buffer[i]);
      accumulate(summary, r);
      if (sink) sink(emitted, r);
      ++emitted;
    }
  }

  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string summary_table(const SweepSummary& s) {
  std::ostringstream out;
  out << "corpus: " << s.corpus_id << "\n";
  out << "graphs: " << s.graphs << "  connected: " << s.connected
      << "  well-covered: " << s.well_covered << "  W2: " << s.w2
      << "  2-quasi-regularizable: " << s.two_quasi_regularizable
      << "  n>=3alpha: " << s.order_ge_3alpha << "\n";
  out << "violations: local-expansion " << s.violations.local_expansion << ", threshold "
      << s.violations.threshold_equivalence << ", w2-facts " << s.violations.w2_facts
      << ", coef-ineq " << s.violations.coefficient_chains << ", criteria-soundness "
      << s.violations.criteria_soundness << ", w2-cross-check " << s.violations.w2_cross_check
      << "\n";
  out << "caps hit: " << s.cap_exceeded << "  parse issues: " << s.issues.size()
      << "  jobs: " << s.jobs << "  wall: " << s.wall_seconds << " s\n";
  return out.str();
}

}  // namespace wpgraph
