#include "bnkit/cli/generator.hpp"
#include "bnkit/network.hpp"
#include "bnkit/solver.hpp"

#include <benchmark/benchmark.h>

namespace {

void first_solution(benchmark::State &state, bnkit::Problem problem, bnkit::cli::Family family) {
  bnkit::cli::GenSpec spec;
  spec.nodes = static_cast<std::size_t>(state.range(0));
  spec.family = family;
  spec.seed = 21;
  const auto net = bnkit::parse_bnet(bnkit::cli::generate_bnet(spec));
  for (auto _ : state) {
    bnkit::SolutionStream stream(net, {problem, std::nullopt, 1});
    benchmark::DoNotOptimize(stream.next());
  }
}

void BM_FirstMinimal(benchmark::State &state) {
  first_solution(state, bnkit::Problem::minimal_trap_spaces,
                 bnkit::cli::Family::inhibitor_dominant);
}
BENCHMARK(BM_FirstMinimal)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FirstMaximal(benchmark::State &state) {
  first_solution(state, bnkit::Problem::maximal_trap_spaces,
                 bnkit::cli::Family::inhibitor_dominant);
}
BENCHMARK(BM_FirstMaximal)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FirstFixedPoint(benchmark::State &state) {
  first_solution(state, bnkit::Problem::fixed_points,
                 bnkit::cli::Family::nested_canalizing_unate);
}
BENCHMARK(BM_FirstFixedPoint)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
