#include <snncore/gadgets.hpp>
#include <snncore/simulator.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

std::vector<snn::SpikeTrain> random_inputs(std::size_t d, std::size_t horizon,
                                           std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::vector<snn::SpikeTrain> in;
	for (std::size_t i = 0; i < d; ++i) {
		in.push_back(snn::random_integer_train(rng, horizon));
	}
	return in;
}

void bench_build_spike(benchmark::State& state) {
	const std::size_t m = static_cast<std::size_t>(state.range(0));
	for (auto _ : state) {
		benchmark::DoNotOptimize(snn::spike_net(m));
	}
}
BENCHMARK(bench_build_spike)->Arg(4)->Arg(16)->Arg(64);

void bench_simulate_spike(benchmark::State& state) {
	const std::size_t m = static_cast<std::size_t>(state.range(0));
	const snn::Network net = snn::spike_net(m);
	const auto in = random_inputs(1, 3 * m, 7);
	for (auto _ : state) {
		benchmark::DoNotOptimize(snn::simulate_network(net, in));
	}
}
BENCHMARK(bench_simulate_spike)->Arg(4)->Arg(16)->Arg(64);

void bench_simulate_memory(benchmark::State& state) {
	const std::size_t m = static_cast<std::size_t>(state.range(0));
	const snn::Network net = snn::memory_net(2, m);
	const auto in = random_inputs(2, 24, 11);
	for (auto _ : state) {
		benchmark::DoNotOptimize(snn::simulate_network(net, in));
	}
}
BENCHMARK(bench_simulate_memory)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
