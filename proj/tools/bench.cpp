// Benchmark of the parallel trial runner against the serial reference path.
// Both paths must produce identical reports (everything except wall time);
// the benchmark checks that while timing them.

#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lomean/suites.hpp"

namespace {

lomean::json strip_wall(lomean::SuiteReport rep) {
  lomean::json j = rep.to_json();
  j.erase("wall_ms");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  int trials = 300;
  if (argc > 1) trials = std::stoi(argv[1]);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-16s %10s %10s %8s  %s\n", "suite", "serial ms", "omp ms", "speedup", "identical");

  bool all_identical = true;
  for (const std::string& name : lomean::suite_names()) {
    lomean::SuiteOptions opt;
    opt.trials = trials;
    opt.seed = 42;
    opt.keep_records = false;

    opt.mode = lomean::ExecMode::Serial;
    const lomean::SuiteReport serial = lomean::run_suite(name, opt);
    opt.mode = lomean::ExecMode::Parallel;
    const lomean::SuiteReport parallel = lomean::run_suite(name, opt);

    const bool identical = strip_wall(serial) == strip_wall(parallel);
    all_identical = all_identical && identical;
    std::printf("%-16s %10.1f %10.1f %7.2fx  %s\n", name.c_str(), serial.wall_ms,
                parallel.wall_ms, serial.wall_ms / std::max(parallel.wall_ms, 1e-9),
                identical ? "yes" : "NO");
  }
  return all_identical ? 0 : 1;
}
