// Times the serial reference sweep against the OpenMP sweep on the built-in
// corpus, then checks that both emit identical reports. Timing runs use a
// null sink so the comparison measures the classification kernels, not the
// (serial, order-preserving) JSON emission.
//
//   bench_sweep [n=6] [jobs=<cores>]

#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "wpgraph/sweep.hpp"

using namespace wpgraph;

namespace {

SweepInput corpus(int n) {
  SweepInput input;
  input.corpus_id = "bench:n=" + std::to_string(n);
  input.gen = GenSpec{n, true};
  return input;
}

SweepSummary timed_run(int n, int jobs) {
  SweepOptions opts;
  opts.jobs = jobs;
  return sweep(corpus(n), opts, nullptr);
}

std::string jsonl_run(int n, int jobs) {
  SweepOptions opts;
  opts.jobs = jobs;
  std::ostringstream jsonl;
  sweep(corpus(n), opts, [&](std::size_t, const ClassificationReport& r) {
    jsonl << report_to_jsonl(r) << "\n";
  });
  return jsonl.str();
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 6;
  const int jobs = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
  if (n < 1 || n > 7 || jobs < 1) {
    std::cerr << "usage: bench_sweep [n 1..7] [jobs >= 1]\n";
    return 2;
  }

  std::cout << "corpus: all labeled connected graphs on " << n << " vertices\n";
  const SweepSummary serial = timed_run(n, 1);
  std::cout << "serial reference: " << serial.graphs << " graphs in " << serial.wall_seconds
            << " s\n";
  const SweepSummary parallel = timed_run(n, jobs);
  std::cout << "openmp x" << jobs << ":        " << parallel.graphs << " graphs in "
            << parallel.wall_seconds << " s\n";
  if (parallel.wall_seconds > 0)
    std::cout << "speedup: " << serial.wall_seconds / parallel.wall_seconds << "\n";

  const bool identical = jsonl_run(n, 1) == jsonl_run(n, jobs) &&
                         serial.graphs == parallel.graphs &&
                         serial.violations.total() == parallel.violations.total();
  if (!identical) {
    std::cerr << "MISMATCH between serial and parallel runs\n";
    return 1;
  }
  std::cout << "outputs identical\n";
  return serial.violations.total() > 0 ? 1 : 0;
}
