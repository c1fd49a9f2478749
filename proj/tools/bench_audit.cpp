// Benchmark: audit a batch of boost models with the serial reference loop
// and with the parallel kernel, verify the reports are identical, and print
// both wall times. Exits nonzero when the reports differ.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "relcheck/axioms.hpp"
#include "relcheck/sampling.hpp"
#include "relcheck/worldview.hpp"

using namespace relcheck;

namespace {

bool reportsEqual(const std::vector<AxiomReport>& a,
                  const std::vector<AxiomReport>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].axiom != b[i].axiom || a[i].verdict != b[i].verdict ||
        a[i].instancesChecked != b[i].instancesChecked ||
        a[i].note != b[i].note ||
        a[i].counterexample.has_value() != b[i].counterexample.has_value()) {
      return false;
    }
    if (a[i].counterexample &&
        (a[i].counterexample->description != b[i].counterexample->description ||
         a[i].counterexample->data != b[i].counterexample->data)) {
      return false;
    }
  }
  return true;
}

double seconds(std::chrono::steady_clock::duration d) {
  return std::chrono::duration_cast<std::chrono::duration<double>>(d).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"audit benchmark: serial reference loop vs parallel kernel"};
  int models = 4;
  int randomCount = 24;
  int gridRadius = 1;
  uint64_t seed = 2026;
  app.add_option("--models", models, "number of boost models to audit")
      ->check(CLI::Range(1, 1000));
  app.add_option("--random-count", randomCount,
                 "random instances per sampling batch")
      ->check(CLI::Range(0, 1000000));
  app.add_option("--grid-radius", gridRadius, "integer grid radius")
      ->check(CLI::Range(0, 8));
  app.add_option("--seed", seed, "model / sampling seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif

  SplitMix64 rng(seed);
  std::vector<Model> batch;
  batch.reserve(static_cast<size_t>(models));
  for (int i = 0; i < models; ++i) {
    BoostSpec spec;
    spec.triple = randPythTriple(rng);
    batch.push_back(buildBoostModel(spec, FieldMode::euclidean));
  }

  SamplingConfig cfg;
  cfg.seed = seed;
  cfg.gridRadius = gridRadius;
  cfg.randomCount = randomCount;

  using clock = std::chrono::steady_clock;

  const auto t0 = clock::now();
  std::vector<std::vector<AxiomReport>> serial;
  serial.reserve(batch.size());
  for (const Model& m : batch) {
    serial.push_back(auditAll(m, cfg, ExecPolicy::serial));
  }
  const auto t1 = clock::now();
  std::vector<std::vector<AxiomReport>> parallel;
  parallel.reserve(batch.size());
  for (const Model& m : batch) {
    parallel.push_back(auditAll(m, cfg, ExecPolicy::parallel));
  }
  const auto t2 = clock::now();

  for (size_t i = 0; i < batch.size(); ++i) {
    if (!reportsEqual(serial[i], parallel[i])) {
      std::cerr << "mismatch: serial and parallel audits of model " << i
                << " differ\n";
      return 1;
    }
  }

  const double ts = seconds(t1 - t0);
  const double tp = seconds(t2 - t1);
  std::printf("models: %d, random-count: %d, grid-radius: %d\n", models,
              randomCount, gridRadius);
  std::printf("serial reference: %.3f s\n", ts);
  std::printf("parallel kernel:  %.3f s\n", tp);
  if (tp > 0.0) std::printf("speedup: %.2fx\n", ts / tp);
  std::puts("reports identical: yes");
  return 0;
}
