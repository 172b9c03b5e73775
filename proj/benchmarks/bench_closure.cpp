#include "bnkit/cli/generator.hpp"
#include "bnkit/closure.hpp"
#include "bnkit/network.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

bnkit::BooleanNetwork generated(std::size_t nodes, bnkit::cli::Family family) {
  bnkit::cli::GenSpec spec;
  spec.nodes = nodes;
  spec.family = family;
  spec.seed = 11;
  return bnkit::parse_bnet(bnkit::cli::generate_bnet(spec));
}

bnkit::State random_state(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bnkit::State x(n);
  for (std::size_t i = 0; i < n; ++i)
    x.set(i, rng() % 2);
  return x;
}

void BM_EvalOnCube(benchmark::State &state) {
  const auto net = generated(static_cast<std::size_t>(state.range(0)),
                             bnkit::cli::Family::inhibitor_dominant);
  bnkit::Cube c(net.size());
  std::mt19937_64 rng(3);
  for (std::size_t i = 0; i < net.size(); ++i)
    if (rng() % 2)
      c.fix(i, rng() % 2);
  for (auto _ : state)
    for (std::size_t i = 0; i < net.size(); ++i)
      benchmark::DoNotOptimize(
          bnkit::eval_on_cube(net.function(static_cast<bnkit::ComponentIndex>(i)), c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(net.size()));
}
BENCHMARK(BM_EvalOnCube)->Arg(1000)->Arg(10000);

void BM_ClosureOfState(benchmark::State &state) {
  const auto net = generated(static_cast<std::size_t>(state.range(0)),
                             bnkit::cli::Family::inhibitor_dominant);
  const auto x = random_state(net.size(), 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(bnkit::closure(net, x));
}
BENCHMARK(BM_ClosureOfState)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ParseBnet(benchmark::State &state) {
  bnkit::cli::GenSpec spec;
  spec.nodes = static_cast<std::size_t>(state.range(0));
  const auto text = bnkit::cli::generate_bnet(spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(bnkit::parse_bnet(text));
}
BENCHMARK(BM_ParseBnet)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace
