// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "ddi/analyzer.hpp"
#include "ddi/expander.hpp"
#include "ddi/frontend.hpp"
#include "ddi/generator.hpp"
#include "ddi/graph.hpp"
#include "ddi/oracle.hpp"
#include "ddi/transforms.hpp"

namespace {

std::string straight_line(int n) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::ostringstream os;
  os << "int ";
  for (int k = 0; k < n; ++k) os << (k ? ", " : "") << "v" << k << " = " << k % 7;
  os << ";\n";
  for (int k = 0; k < 2 * n; ++k) {
    os << "v" << pick(rng) << " = v" << pick(rng) << " + v" << pick(rng) << ";\n";
  }
  os << "print v0;\n";
  return os.str();
}

std::string array_loop(int trips) {
  std::ostringstream os;
  os << "int a[], b[], c[];\n"
     << "for (i = 1; i <= " << trips << "; i++) {\n"
     << "  a[i] = b[i] + c[i];\n"
     << "  a[i + 1] = a[i - 1] + c[i - 1];\n"
     << "  c[i - 1] = b[i];\n"
     << "}\n";
  return os.str();
}

void BM_Parse(benchmark::State& state) {
  const std::string src = straight_line(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ddi::parse_program({src, "bench"}));
}
BENCHMARK(BM_Parse)->RangeMultiplier(2)->Range(100, 800);

void BM_StraightLineDependences(benchmark::State& state) {
  const ddi::Program p = ddi::parse_program({straight_line(static_cast<int>(state.range(0))), "bench"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddi::find_dependences(ddi::build_graph(ddi::expand_loops(p))));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StraightLineDependences)->RangeMultiplier(2)->Range(100, 800)->Complexity();

void BM_ArrayLoopDependences(benchmark::State& state) {
  const ddi::Program p = ddi::parse_program({array_loop(static_cast<int>(state.range(0))), "bench"});
  for (auto _ : state) {
    const auto xp = ddi::expand_loops(p);
    benchmark::DoNotOptimize(
        ddi::parallelizability_report(ddi::find_dependences(ddi::build_graph(xp)), xp.loops));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ArrayLoopDependences)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_DeadCode(benchmark::State& state) {
  const ddi::Program p = ddi::parse_program({straight_line(static_cast<int>(state.range(0))), "bench"});
  for (auto _ : state) benchmark::DoNotOptimize(ddi::eliminate_dead_code(p));
}
BENCHMARK(BM_DeadCode)->Arg(100)->Arg(200);

void BM_VerifyRandom(benchmark::State& state) {
  std::uint64_t k = 0;
  for (auto _ : state) {
    const auto p = ddi::parse_program({ddi::generate_program(ddi::derive_seed(1, k++)), "bench"});
    benchmark::DoNotOptimize(ddi::verify_equivalence(p));
  }
}
BENCHMARK(BM_VerifyRandom);

}  // namespace

BENCHMARK_MAIN();
