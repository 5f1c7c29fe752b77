// End-to-end acceptance run. Prints one pass/fail line per criterion and
// exits nonzero when anything failed. Needs the CLI binary path as argv[1]
// for the subprocess checks; set WPGRAPH_N9_CORPUS to a graph6 file of
// connected graphs through order 9 to extend the corpus criteria beyond the
// built-in generator.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wpgraph/constructions.hpp"
#include "wpgraph/sweep.hpp"

using namespace wpgraph;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct CliRunner {
  std::string binary;

  bool available() const { return !binary.empty(); }

  int run(const std::string& args, const std::string& stdout_path) const {
    const std::string cmd = "\"" + binary + "\" " + args + " > " + stdout_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return status;
  }
};

// ---- criterion 1: the C5 profile through the CLI ----
void criterion_1(const CliRunner& cli) {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  if (cli.available()) {
    const int status = cli.run("analyze C5 --json", "acceptance_c1.json");
    pass = status == 0;  // no violations on C5
    if (pass) {
      const Json j = Json::parse(read_file("acceptance_c1.json"));
      pass = j["n"] == 5 && j["alpha"] == 2 && j["connected"] == true &&
             j["wp"]["1"]["status"] == "member" && j["wp"]["2"]["status"] == "member" &&
             j["quasireg"]["1"]["holds"] == true && j["quasireg"]["2"]["holds"] == false &&
             j["quasireg"]["2"]["witness"].size() == 2 &&
             j["quasireg"]["2"]["neighborhood_size"] == 3 &&
             j["n"].get<int>() < 3 * j["alpha"].get<int>();
    }
    std::remove("acceptance_c1.json");
  } else {
    pass = false;
    detail = "CLI binary path missing";
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) pass = false;
  if (detail.empty())
    detail = "analyze C5: n=5 alpha=2 W1+W2 member, 1-QR yes, 2-QR no with |A|=2 |N(A)|=3, " +
             std::to_string(elapsed) + " s";
  report(1, "C5 golden analysis", pass, detail);
}

// ---- criterion 2: the 8-vertex localization example ----
void criterion_2() {
  const Graph g = Graph::from_edges(
      8, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 7}, {5, 6}, {6, 7}});
  const VertexSet a = VertexSet::of({0, 1});
  bool pass = open_neighborhood(g, a) == VertexSet::of({2, 3, 4});
  const InducedSubgraph loc = localization(g, a);
  pass = pass && loc.graph.order() == 3 && loc.to_original == std::vector<int>{5, 6, 7} &&
         loc.graph.has_edge(0, 1) && loc.graph.has_edge(1, 2) && !loc.graph.has_edge(0, 2) &&
         is_connected(loc.graph);
  report(2, "localization golden example", pass,
         "N({a1,a2}) = {u1,u2,u3}, localization is the path h1-h2-h3");
}

struct CorpusOutcome {
  ViolationCounts violations;
  long long graphs = 0;
  long long w2 = 0;
  double seconds = 0;
  bool external = false;
};

// One sweep over every built-in corpus (all labeled connected graphs through
// order 6) plus the optional external corpus; criteria 3..6 read off the
// violation counters.
CorpusOutcome run_corpus_sweeps() {
  CorpusOutcome out;
  SweepOptions opts;
  opts.jobs = omp_get_max_threads();
  const auto start = Clock::now();
  for (int n = 1; n <= 6; ++n) {
    SweepInput input;
    input.corpus_id = "gen:n=" + std::to_string(n) + ",connected";
    input.gen = GenSpec{n, true};
    const SweepSummary s = sweep(input, opts, nullptr);
    out.graphs += s.graphs;
    out.w2 += s.w2;
    out.violations.local_expansion += s.violations.local_expansion;
    out.violations.threshold_equivalence += s.violations.threshold_equivalence;
    out.violations.w2_facts += s.violations.w2_facts;
    out.violations.coefficient_chains += s.violations.coefficient_chains;
    out.violations.criteria_soundness += s.violations.criteria_soundness;
    out.violations.w2_cross_check += s.violations.w2_cross_check;
  }
  out.seconds = seconds_since(start);

  if (const char* path = std::getenv("WPGRAPH_N9_CORPUS")) {
    out.external = true;
    SweepInput input;
    input.corpus_id = path;
    input.lines = read_corpus_lines(path);
    const SweepSummary s = sweep(input, opts, nullptr);
    out.graphs += s.graphs;
    out.w2 += s.w2;
    out.violations.local_expansion += s.violations.local_expansion;
    out.violations.threshold_equivalence += s.violations.threshold_equivalence;
    out.violations.w2_facts += s.violations.w2_facts;
    out.violations.coefficient_chains += s.violations.coefficient_chains;
    out.violations.criteria_soundness += s.violations.criteria_soundness;
    out.violations.w2_cross_check += s.violations.w2_cross_check;
  }
  return out;
}

void criteria_3_to_6(const CorpusOutcome& c) {
  const std::string corpus_note =
      std::to_string(c.graphs) + " graphs, " + std::to_string(c.w2) + " W2 members" +
      (c.external ? ", external corpus included" : ", built-in n<=6 only") + ", " +
      std::to_string(c.seconds) + " s";
  report(3, "local expansion sweep",
         c.violations.local_expansion == 0 && c.seconds < 60.0,
         "violations " + std::to_string(c.violations.local_expansion) + "; " + corpus_note);
  report(4, "threshold equivalence sweep", c.violations.threshold_equivalence == 0,
         "violations " + std::to_string(c.violations.threshold_equivalence));
  report(5, "structure and coefficient lemma audits",
         c.violations.w2_facts == 0 && c.violations.coefficient_chains == 0,
         "w2-facts " + std::to_string(c.violations.w2_facts) + ", coef-ineq " +
             std::to_string(c.violations.coefficient_chains));
  report(6, "criteria soundness against direct checks", c.violations.criteria_soundness == 0,
         "false positives " + std::to_string(c.violations.criteria_soundness));
}

// ---- criterion 7: the algebraic identity over the whole grid ----
void criterion_7() {
  const auto start = Clock::now();
  long long mismatches = 0, checked = 0;
  for (int p = 1; p <= 5; ++p)
    for (int alpha = 1; alpha <= 10; ++alpha)
      for (int n = 1; n <= 40; ++n)
        for (int k = 1; k <= alpha - 1; ++k) {
          ++checked;
          const Rational lhs = log_concavity_margin(p, Rational(p), n, alpha, k);
          if (!(lhs.is_integer() && lhs.num == quadratic_margin(p, n, alpha, k))) ++mismatches;
        }
  const double elapsed = seconds_since(start);
  report(7, "margin identity at lambda = p", mismatches == 0 && elapsed < 1.0,
         std::to_string(checked) + " tuples, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(elapsed) + " s");
}

// ---- criterion 8: product lemma property suite ----
void criterion_8() {
  const ProductLemmaSuiteResult res = product_lemma_suite(1000, 20250810);
  report(8, "product lemma on random pairs",
         res.violations == 0 && res.lc_lc_pairs == 1000 && res.lc_unimodal_pairs == 1000,
         std::to_string(res.lc_lc_pairs) + " LCxLC + " + std::to_string(res.lc_unimodal_pairs) +
             " LCxunimodal, " + std::to_string(res.violations) + " violations");
}

// ---- criterion 9: oracle equivalences ----
void criterion_9() {
  bool pass = true;
  std::string detail;

  // polynomial vs subset brute force, 500 random graphs through order 14
  {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 500 && pass; ++trial) {
      const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 14),
                                           0.1 + 0.8 * (static_cast<double>(rng() % 100) / 100.0));
      const std::vector<long long> expect = oracle::polynomial(g);
      const IndependencePolynomial got = independence_polynomial(g);
      if (got.coeffs.size() != expect.size()) pass = false;
      for (std::size_t i = 0; pass && i < expect.size(); ++i)
        if (got.coeffs[i] != expect[i]) pass = false;
    }
    if (!pass) detail = "polynomial oracle mismatch";
  }

  // the two W_2 routes on every isolate-free labeled graph through order 7
  long long compared = 0, mismatches = 0;
  if (pass) {
    for (int n = 2; n <= 7; ++n) {
      const int pairs = n * (n - 1) / 2;
      const long long total = 1LL << pairs;
      long long local_compared = 0, local_mismatches = 0;
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : local_compared, local_mismatches)
      for (long long mask = 0; mask < total; ++mask) {
        const Graph g = Graph::from_edge_mask(n, static_cast<std::uint64_t>(mask));
        bool isolated = false;
        for (int v = 0; v < n; ++v)
          if (g.degree(v) == 0) isolated = true;
        if (isolated) continue;
        ++local_compared;
        const bool definitional = is_wp(g, 2).status == WpStatus::member;
        if (definitional != is_one_well_covered(g)) ++local_mismatches;
      }
      compared += local_compared;
      mismatches += local_mismatches;
    }
    if (mismatches > 0) {
      pass = false;
      detail = "W2 route mismatch on " + std::to_string(mismatches) + " graphs";
    }
  }

  // byte-exact graph6 round trips
  if (pass) {
    std::mt19937_64 rng(606060);
    for (int trial = 0; trial < 500 && pass; ++trial) {
      const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 20));
      const std::string text = encode_graph6(g);
      if (!(parse_graph6(text) == g) || encode_graph6(parse_graph6(text)) != text) pass = false;
    }
    if (!pass && detail.empty()) detail = "graph6 round trip mismatch";
  }

  if (detail.empty())
    detail = "500 polynomial oracles, " + std::to_string(compared) +
             " isolate-free W2 cross-checks, 500 round trips";
  report(9, "oracle equivalences", pass, detail);
}

// ---- criterion 10: byte-identical sweeps at different widths ----
void criterion_10(const CliRunner& cli) {
  bool pass = false;
  std::string detail;
  if (cli.available()) {
    const int s1 = cli.run("sweep --gen-n 6 --connected --jobs 1 --json acceptance_j1.jsonl",
                           "acceptance_s1.txt");
    const int s8 = cli.run("sweep --gen-n 6 --connected --jobs 8 --json acceptance_j8.jsonl",
                           "acceptance_s8.txt");
    const std::string a = read_file("acceptance_j1.jsonl");
    const std::string b = read_file("acceptance_j8.jsonl");
    pass = s1 == 0 && s8 == 0 && !a.empty() && a == b;
    detail = "sweep --jobs 1 vs --jobs 8 over gen:n=6,connected: " +
             std::string(a == b ? "byte-identical" : "DIFFER") + ", " +
             std::to_string(a.size()) + " bytes";
    for (const char* f :
         {"acceptance_j1.jsonl", "acceptance_j8.jsonl", "acceptance_s1.txt", "acceptance_s8.txt"})
      std::remove(f);
  } else {
    detail = "CLI binary path missing";
  }
  report(10, "determinism across worker counts", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  CliRunner cli{argc > 1 ? argv[1] : ""};

  criterion_1(cli);
  criterion_2();
  const CorpusOutcome corpus = run_corpus_sweeps();
  criteria_3_to_6(corpus);
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(cli);

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
