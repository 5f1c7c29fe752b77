// Command-line surface: analyze / poly / sweep / verify / construct.
// Exit codes: 0 clean, 1 a universally quantified statement was violated
// (a discovery), 2 usage or parse error.

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wpgraph/constructions.hpp"
#include "wpgraph/quasireg.hpp"
#include "wpgraph/sweep.hpp"

namespace {

using namespace wpgraph;

int default_jobs() {
  if (const char* env = std::getenv("WPGRAPH_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return omp_get_max_threads();
}

Graph graph_from_input(const std::string& text) {
  if (looks_like_family_spec(text)) return graph_from_spec_text(text);
  return parse_graph6(text);
}

std::vector<int> parse_p_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const int p = std::stoi(item);
    if (p < 1) throw Error(errc::bad_argument, "p must be at least 1");
    out.push_back(p);
  }
  if (out.empty()) throw Error(errc::bad_argument, "empty p list");
  return out;
}

std::vector<Rational> parse_lambda_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational lambda = Rational::parse(item);
    if (!lambda.positive()) throw Error(errc::bad_argument, "lambda must be positive");
    out.push_back(lambda);
  }
  if (out.empty()) throw Error(errc::bad_argument, "empty lambda list");
  return out;
}

struct CommonOpts {
  std::string p_list = "1,2";
  std::string lambda_list = "1,3/2,2";
  int cap_n = 12;
  std::size_t omega_cap = 5000;

  SweepOptions to_sweep_options() const {
    SweepOptions opts;
    opts.p_list = parse_p_list(p_list);
    opts.lambdas = parse_lambda_list(lambda_list);
    opts.definitional_cap = cap_n;
    opts.omega_cap = omega_cap;
    return opts;
  }
};

void add_common(CLI::App* cmd, CommonOpts& common) {
  cmd->add_option("--p", common.p_list, "comma-separated p values (default 1,2)");
  cmd->add_option("--lambda", common.lambda_list,
                  "comma-separated lambda values, fractions allowed (default 1,3/2,2)");
  cmd->add_option("--cap-n", common.cap_n, "definitional membership cap (default 12)");
  cmd->add_option("--omega-cap", common.omega_cap, "maximum-set family cap (default 5000)");
}

int run_analyze(const std::string& input, const CommonOpts& common, bool json) {
  const Graph g = graph_from_input(input);
  const SweepOptions opts = normalize_options(common.to_sweep_options());
  const ClassificationReport report = classify_graph(g, encode_graph6(g), opts);
  if (json) {
    std::cout << report_to_jsonl(report) << "\n";
  } else {
    std::cout << analyze_detail(report);
    if (g.order() >= 1) {
      const auto [ratio, witness] = min_expansion_ratio(g);
      std::cout << "min expansion ratio: " << ratio.str() << " at "
                << format_vertex_list(witness.set) << " (|N|=" << witness.neighborhood_size
                << ")\n";
    }
  }
  return report.violations.any() ? 1 : 0;
}

int run_poly(const std::string& input) {
  const Graph g = graph_from_input(input);
  const IndependencePolynomial poly = independence_polynomial(g);
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
    if (i) std::cout << " ";
    std::cout << poly.coeffs[i].str();
  }
  std::cout << "\n";
  return 0;
}

struct CorpusArgs {
  std::string corpus_path;
  int gen_n = 0;
  bool connected = false;

  SweepInput to_input() const {
    SweepInput input;
    if (!corpus_path.empty()) {
      input.corpus_id = corpus_path;
      input.lines = read_corpus_lines(corpus_path);
    } else {
      input.corpus_id =
          "gen:n=" + std::to_string(gen_n) + (connected ? ",connected" : ",all");
      input.gen = GenSpec{gen_n, connected};
    }
    return input;
  }
};

void add_corpus(CLI::App* cmd, CorpusArgs& args, bool* strict = nullptr) {
  auto* corpus = cmd->add_option("--corpus", args.corpus_path, "newline-delimited graph6 file");
  auto* gen = cmd->add_option("--gen-n", args.gen_n, "built-in labeled generator, n <= 7");
  cmd->add_flag("--connected", args.connected, "generator: connected graphs only");
  corpus->excludes(gen);
  cmd->callback([corpus, gen]() {
    if (corpus->count() == 0 && gen->count() == 0)
      throw CLI::ValidationError("one of --corpus or --gen-n is required");
  });
  if (strict) cmd->add_flag("--strict", *strict, "stop at the first malformed corpus line");
}

int run_sweep(const CorpusArgs& corpus, const CommonOpts& common, int jobs,
              const std::string& json_out, bool table, bool strict) {
  SweepOptions opts = common.to_sweep_options();
  opts.jobs = jobs;
  opts.strict_parse = strict;

  std::ofstream file;
  std::ostream* json_stream = nullptr;
  if (!json_out.empty()) {
    if (json_out == "-") {
      json_stream = &std::cout;
    } else {
      file.open(json_out);
      if (!file) throw Error(errc::io_error, "cannot open '" + json_out + "' for writing");
      json_stream = &file;
    }
  }

  if (table) std::cout << sweep_table_header(opts.lambdas, opts.p_list) << "\n";
  ReportSink sink;
  if (json_stream || table)
    sink = [json_stream, table](std::size_t, const ClassificationReport& r) {
      if (json_stream) *json_stream << report_to_jsonl(r) << "\n";
      if (table) std::cout << sweep_table_row(r) << "\n";
    };

  const SweepSummary summary = sweep(corpus.to_input(), opts, sink);
  std::ostream& info = json_stream == &std::cout ? std::cerr : std::cout;
  info << summary_table(summary);
  for (const ParseIssue& issue : summary.issues)
    std::cerr << "skipped line " << issue.line_number << ": " << issue.message << "\n";
  return summary.violations.total() > 0 ? 1 : 0;
}

int run_verify(const std::string& theorem, const CorpusArgs& corpus, const CommonOpts& common,
               int jobs, int pairs, std::uint64_t seed) {
  if (theorem == "product-lemma") {
    const ProductLemmaSuiteResult res = product_lemma_suite(pairs, seed);
    std::cout << "product-lemma: " << res.lc_lc_pairs << " LCxLC and " << res.lc_unimodal_pairs
              << " LCxunimodal products, " << res.violations << " violations\n";
    return res.violations > 0 ? 1 : 0;
  }
  SweepOptions opts = common.to_sweep_options();
  opts.jobs = jobs;
  const SweepSummary summary = sweep(corpus.to_input(), opts, nullptr);
  long long count = 0;
  if (theorem == "local-expansion") count = summary.violations.local_expansion;
  else if (theorem == "threshold") count = summary.violations.threshold_equivalence;
  else if (theorem == "coef-ineq") count = summary.violations.coefficient_chains;
  else if (theorem == "w2-facts") count = summary.violations.w2_facts;
  else throw Error(errc::bad_argument, "unknown theorem '" + theorem + "'");
  std::cout << theorem << ": " << summary.graphs << " graphs checked, " << count
            << " violations\n";
  return count > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive verification for W_p graphs, quasi-regularizability and "
               "independence polynomials"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_input;
  CommonOpts analyze_common;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "classify one graph and run every audit");
  analyze->add_option("graph", analyze_input, "graph6 record or family spec (C5, K2*K1, ...)")
      ->required();
  add_common(analyze, analyze_common);
  analyze->add_flag("--json", analyze_json, "emit the report as one JSON line");

  // poly
  std::string poly_input;
  auto* poly = app.add_subcommand("poly", "print the independence polynomial coefficients");
  poly->add_option("graph", poly_input, "graph6 record or family spec")->required();

  // sweep
  CorpusArgs sweep_corpus;
  CommonOpts sweep_common;
  int sweep_jobs = default_jobs();
  std::string sweep_json;
  bool sweep_table = false;
  bool sweep_strict = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "audit every graph in a corpus");
  add_corpus(sweep_cmd, sweep_corpus, &sweep_strict);
  add_common(sweep_cmd, sweep_common);
  sweep_cmd->add_option("--jobs", sweep_jobs, "worker count (default WPGRAPH_JOBS or all cores)");
  sweep_cmd->add_option("--json", sweep_json, "write one report per line to this file ('-' = stdout)");
  sweep_cmd->add_flag("--table", sweep_table, "print a fixed-column row per graph");

  // verify
  std::string verify_theorem;
  CorpusArgs verify_corpus;
  CommonOpts verify_common;
  int verify_jobs = default_jobs();
  int verify_pairs = 1000;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "check a single statement over a corpus");
  verify->add_option("--theorem", verify_theorem,
                     "local-expansion | threshold | coef-ineq | product-lemma | w2-facts")
      ->required();
  verify->add_option("--corpus", verify_corpus.corpus_path, "newline-delimited graph6 file");
  verify->add_option("--gen-n", verify_corpus.gen_n, "built-in labeled generator, n <= 7");
  verify->add_flag("--connected", verify_corpus.connected, "generator: connected graphs only");
  add_common(verify, verify_common);
  verify->add_option("--jobs", verify_jobs, "worker count");
  verify->add_option("--pairs", verify_pairs, "product-lemma: pairs per class (default 1000)");
  verify->add_option("--seed", verify_seed, "product-lemma: RNG seed");

  // construct
  std::string corona_spec, union_spec;
  auto* construct = app.add_subcommand("construct", "emit a constructed graph as graph6");
  auto* corona_opt = construct->add_option("--corona", corona_spec, "e.g. K2*K1");
  auto* union_opt = construct->add_option("--union", union_spec, "e.g. K2+K2");
  corona_opt->excludes(union_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(analyze_input, analyze_common, analyze_json);
    if (*poly) return run_poly(poly_input);
    if (*sweep_cmd)
      return run_sweep(sweep_corpus, sweep_common, sweep_jobs, sweep_json, sweep_table, sweep_strict);
    if (*verify) {
      if (verify_theorem != "product-lemma" && verify_corpus.corpus_path.empty() &&
          verify_corpus.gen_n == 0)
        throw Error(errc::bad_argument, "verify needs --corpus or --gen-n");
      return run_verify(verify_theorem, verify_corpus, verify_common, verify_jobs, verify_pairs,
                        verify_seed);
    }
    if (*construct) {
      const std::string& spec = corona_spec.empty() ? union_spec : corona_spec;
      if (spec.empty()) throw Error(errc::bad_spec, "construct needs --corona or --union");
      std::cout << encode_graph6(graph_from_spec_text(spec)) << "\n";
      return 0;
    }
  } catch (const wpgraph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
