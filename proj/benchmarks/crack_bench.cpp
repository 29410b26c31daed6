#include <benchmark/benchmark.h>

#include "gradreveal/cracker.hpp"
#include "gradreveal/market.hpp"

using namespace gradreveal;

namespace {

// Prefix of p with `unrevealed` digits withheld, on a fixed desk or paper setup.
struct Fixture {
  Secret secret;
  Bulletin bulletin;
};

const Fixture& fixture(bool paper) {
  static const Fixture desk_fixture = [] {
    auto rng = RandomStream::seeded(3);
    auto [s, b] = setup(ProtocolConfig::desk(), rng);
    return Fixture{s, b};
  }();
  static const Fixture paper_fixture = [] {
    auto rng = RandomStream::seeded(3);
    auto [s, b] = setup(ProtocolConfig::paper(), rng);
    return Fixture{s, b};
  }();
  return paper ? paper_fixture : desk_fixture;
}

}  // namespace

// args: unrevealed digits, paper (0/1), workers
static void BM_CrackWorstCase(benchmark::State& state) {
  const auto& fx = fixture(state.range(1) != 0);
  const std::size_t digits = fx.bulletin.config.digits;
  const std::string prefix =
      fx.secret.p.to_string().substr(0, digits - static_cast<std::size_t>(state.range(0)));
  // Corrupt the first digit so nothing divides: every candidate is tested.
  std::string wrong = prefix;
  wrong[0] = wrong[0] == '9' ? '8' : '9';
  CrackOptions options;
  options.workers = static_cast<unsigned>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crack(fx.bulletin.n, digits, wrong, CrackBudget{UINT64_MAX}, options));
  }
  state.counters["candidates/s"] = benchmark::Counter(
      static_cast<double>(*candidate_space(digits, wrong.size()).to_u64()),
      benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_CrackWorstCase)
    ->Args({4, 0, 1})
    ->Args({5, 0, 1})
    ->Args({4, 1, 1})
    ->Args({5, 1, 1})
    ->Args({5, 1, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_DeskSimulation(benchmark::State& state) {
  const auto config = ProtocolConfig::desk();
  const auto caps = uniform_base_caps(config.num_codes);
  const std::vector<AgentProfile> agents = {{"a", CrackBudget{1'000}},
                                            {"b", CrackBudget{1'000'000}}};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(config, agents, caps, seed++));
  }
}
BENCHMARK(BM_DeskSimulation)->Unit(benchmark::kMillisecond);
