// Serial reference vs OpenMP kernels on the cavity and manufactured presets.
//
//   OMP_NUM_THREADS=8 ./build/bench/bench_kernels
#include <benchmark/benchmark.h>

#include "rbfpielm/assembly.hpp"
#include "rbfpielm/pipeline.hpp"
#include "rbfpielm/postprocess.hpp"

namespace {

using namespace rbfpielm;

struct Inputs {
  PdeProblem problem;
  CollocationSet points;
  RbfBasis basis;
  AssemblyOptions options;
};

Inputs inputs_for(const char* preset) {
  const RunConfig cfg = preset_defaults(preset);
  return {make_problem(cfg), make_points(cfg), make_basis(cfg), {cfg.scale_interior}};
}

void BM_AssembleSerial(benchmark::State& state, const char* preset) {
  const Inputs in = inputs_for(preset);
  for (auto _ : state) {
    auto sys = assemble_serial(in.problem, in.points, in.basis, in.options);
    benchmark::DoNotOptimize(sys.matrix.data());
  }
}

void BM_AssembleOpenMP(benchmark::State& state, const char* preset) {
  const Inputs in = inputs_for(preset);
  for (auto _ : state) {
    auto sys = assemble(in.problem, in.points, in.basis, in.options);
    benchmark::DoNotOptimize(sys.matrix.data());
  }
}

void BM_FieldGrid(benchmark::State& state) {
  const RunConfig cfg = preset_defaults("cavity");
  const RbfBasis basis = make_basis(cfg);
  const Solution sol(basis, Vector::Ones(static_cast<Eigen::Index>(basis.size())));
  for (auto _ : state) {
    auto field = field_grid(sol, 101, 101);
    benchmark::DoNotOptimize(field.data());
  }
}

void BM_Solve(benchmark::State& state, const char* preset) {
  const RunConfig cfg = preset_defaults(preset);
  const Inputs in = inputs_for(preset);
  const auto sys = assemble(in.problem, in.points, in.basis, in.options);
  for (auto _ : state) {
    auto rep = solve_least_squares(sys, cfg.rcond);
    benchmark::DoNotOptimize(rep.coefficients.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_AssembleSerial, cavity, "cavity")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AssembleOpenMP, cavity, "cavity")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AssembleSerial, mms_k10, "mms-k10")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AssembleOpenMP, mms_k10, "mms-k10")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FieldGrid)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, cavity, "cavity")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
