#include <doctest.h>

#include <snncore/gadgets.hpp>
#include <snncore/simulator.hpp>

#include <nlohmann/json.hpp>

#include <random>

using namespace snn;

namespace {

std::vector<SpikeTrain> random_tuple(std::mt19937_64& rng, std::size_t d,
                                     std::size_t horizon) {
	std::vector<SpikeTrain> in;
	for (std::size_t i = 0; i < d; ++i) {
		std::vector<Time> t;
		for (long k = 1; k <= (long)horizon; ++k) {
			if (rng() % 2) t.push_back(Rat(k));
		}
		in.emplace_back(std::move(t));
	}
	return in;
}

void check_gadget(const Gadget& g, std::uint64_t seed, int trials,
                  std::size_t horizon = 12) {
	std::mt19937_64 rng(seed);
	for (int t = 0; t < trials; ++t) {
		auto in = random_tuple(rng, g.net.input_count(), horizon);
		CHECK(simulate_network(g.net, in) == gadget_oracle_all(g, in));
	}
}

// Admissible inputs for the translate block: disjoint trains, at most one
// pending event per inter-sync gap, and a clear right after every sync spike
// so that an unproductive sync leaves no carryover.
std::vector<SpikeTrain> translate_tuple(std::mt19937_64& rng,
                                        std::size_t horizon) {
	std::vector<Time> pending, sync, clear;
	long prev = 0;
	for (long k = 2; k <= (long)horizon; k += 2) {
		if (rng() % 2) continue;
		std::vector<long> mid;
		for (long x = prev + 2; x < k; ++x) mid.push_back(x);
		if (!mid.empty() && rng() % 2) {
			pending.push_back(Rat(mid[rng() % mid.size()]));
		}
		sync.push_back(Rat(k));
		clear.push_back(Rat(k + 1));
		prev = k;
	}
	return {SpikeTrain(std::move(pending)), SpikeTrain(std::move(sync)),
	        SpikeTrain(std::move(clear))};
}

}  // namespace

TEST_CASE("frozen sizes of the primitive blocks") {
	CHECK(stats(xor_net()) ==
	      NetworkStats{2, {2, 2, 1}, 5, 6, 2, 2});
	auto s_and = stats(and_net(3));
	CHECK(s_and.depth == 2);
	CHECK(s_and.nonzero_weights == 6);  // d + 3
	CHECK(stats(and_net(5)).nonzero_weights == 8);
	auto s_eq = stats(is_equal_net());
	CHECK(s_eq.depth == 4);
	CHECK(s_eq.nonzero_weights == 18);
	CHECK(stats(clock_net(4)).nonzero_weights == 15);  // 5 (m - 1)
	CHECK(stats(clock_net(8)).nonzero_weights == 35);
	CHECK(stats(minus_net()) == NetworkStats{1, {2, 1}, 3, 2, 1, 1});
	CHECK(stats(translate_net()) == NetworkStats{1, {3, 1}, 4, 3, 1, 1});
	CHECK(stats(skip_net()) == NetworkStats{1, {1, 1}, 2, 1, 0, 1});
}

TEST_CASE("primitive gadgets equal their oracle") {
	for (const char* kind : {"SKIP", "MINUS", "XOR", "IS_EQUAL"}) {
		check_gadget(build_primitive(kind), 1001, 20);
	}
	for (std::size_t d = 2; d <= 3; ++d) {
		check_gadget(build_primitive("OR", d), 1000 + d, 20);
		check_gadget(build_primitive("AND", d), 1010 + d, 20);
	}
	check_gadget(build_periodic("ODD_EVEN"), 1021, 20);
}

TEST_CASE("translate forwards a pending event to the next sync spike") {
	Gadget g = build_primitive("TRANSLATE");
	// A pending event before the first sync spike moves onto it.
	CHECK(simulate_network(g.net,
	                       {SpikeTrain::from_ints({2}),
	                        SpikeTrain::from_ints({4, 8}),
	                        SpikeTrain::from_ints({5})}) ==
	      std::vector<SpikeTrain>{SpikeTrain::from_ints({4})});
	// An unproductive sync spike leaves residue; the clear removes it so the
	// next pending event is forwarded and not emitted early.
	CHECK(simulate_network(g.net,
	                       {SpikeTrain::from_ints({5}),
	                        SpikeTrain::from_ints({3, 8}),
	                        SpikeTrain::from_ints({4})}) ==
	      std::vector<SpikeTrain>{SpikeTrain::from_ints({8})});
	// Empty gaps forward nothing when each sync is followed by a clear.
	CHECK(simulate_network(g.net, {SpikeTrain{}, SpikeTrain::from_ints({2, 4}),
	                               SpikeTrain::from_ints({3, 5})}) ==
	      std::vector<SpikeTrain>{SpikeTrain{}});
	// Random admissible inputs agree with the interval-counting oracle.
	std::mt19937_64 rng(1031);
	for (int t = 0; t < 50; ++t) {
		auto in = translate_tuple(rng, 20);
		CHECK(simulate_network(g.net, in) == gadget_oracle_all(g, in));
	}
}

TEST_CASE("clock residues partition the input") {
	for (std::size_t m : {2, 4, 8}) {
		Network clock = clock_net(m);
		std::mt19937_64 rng(m);
		for (int t = 0; t < 10; ++t) {
			auto in = random_tuple(rng, 1, 16);
			auto out = simulate_network(clock, in);
			REQUIRE(out.size() == m);
			std::vector<SpikeTrain> residues;
			for (std::size_t j = 1; j <= m; ++j) {
				CHECK(out[j - 1] == clock_oracle(m, j, in[0]));
				residues.push_back(out[j - 1]);
			}
			CHECK(train_union(residues) == in[0]);
		}
	}
}

TEST_CASE("spike selection works for every index up to eight") {
	for (std::size_t m = 1; m <= 8; ++m) {
		std::mt19937_64 rng(40 + m);
		Network net = spike_net(m);
		for (int t = 0; t < 10; ++t) {
			auto in = random_tuple(rng, 1, 12);
			CHECK(simulate_network(net, in) ==
			      std::vector<SpikeTrain>{spike_oracle(m, in[0])});
		}
	}
}

TEST_CASE("temporal gadgets equal their oracles") {
	for (std::size_t m = 1; m <= 4; ++m) {
		check_gadget(build_temporal("CEIL", m), 70 + m, 15);
		check_gadget(build_temporal("DELAY", m), 80 + m, 15);
		check_gadget(build_temporal("REPEAT", m), 90 + m, 10);
	}
	check_gadget(build_temporal("IS_APPROX_EQUAL", 2), 99, 10);
	check_gadget(build_temporal("IF_THEN", 3, {true, false, true}), 98, 10);
}

TEST_CASE("representation rows reproduce accepted index patterns") {
	std::vector<bool> r{true, false, true, true};
	Network net = represent_net(r);
	std::mt19937_64 rng(55);
	for (int t = 0; t < 10; ++t) {
		auto in = random_tuple(rng, 1, 10);
		CHECK(simulate_network(net, in) ==
		      std::vector<SpikeTrain>{represent_oracle(r, in[0])});
	}
}

TEST_CASE("memory gadget exposes all delayed copies") {
	for (std::size_t d = 1; d <= 2; ++d) {
		for (std::size_t m = 1; m <= 3; ++m) {
			Gadget g = build_memory_gadget(d, m);
			std::mt19937_64 rng(10 * d + m);
			for (int t = 0; t < 8; ++t) {
				auto in = random_tuple(rng, d, 10);
				CHECK(simulate_network(g.net, in) ==
				      memory_oracle(d, m, in));
			}
		}
	}
}

TEST_CASE("boolean head fires exactly on accepted masks") {
	// Accept the two single-input masks but not the joint one.
	Network net = boolean_head_net({1, 2}, 2);
	std::mt19937_64 rng(77);
	for (int t = 0; t < 20; ++t) {
		auto in = random_tuple(rng, 2, 10);
		CHECK(simulate_network(net, in) ==
		      std::vector<SpikeTrain>{xor_oracle(in[0], in[1])});
	}
}

TEST_CASE("markovian gadget matches the declarative oracle") {
	MarkovianSpec spec{2, 2,
	                   {HistoryPattern{3, 1}, HistoryPattern{2}}};
	Network net = markovian_net(spec);
	std::mt19937_64 rng(78);
	for (int t = 0; t < 15; ++t) {
		auto in = random_tuple(rng, 2, 10);
		CHECK(simulate_network(net, in) ==
		      std::vector<SpikeTrain>{eval_oracle(FunctionSpec{spec}, in)});
	}
}

TEST_CASE("reset wrapping silences the wrapped block") {
	Network inner = spike_net(2);
	Network wrapped = wrap_with_reset(inner);
	CHECK(wrapped.input_count() == 2);  // original input plus the reset port
	// Without a reset the second spike is selected; a reset between the two
	// spikes restarts the count.
	SpikeTrain in = SpikeTrain::from_ints({1, 2, 4, 6});
	CHECK(simulate_network(wrapped, {in, SpikeTrain{}}) ==
	      std::vector<SpikeTrain>{SpikeTrain::from_ints({2})});
	CHECK(simulate_network(wrapped, {in, SpikeTrain::from_ints({3})}) ==
	      std::vector<SpikeTrain>{SpikeTrain::from_ints({2, 6})});
}

TEST_CASE("single input pipeline emits a construction trace") {
	std::vector<std::string> trace;
	Network net = single_input_net(false, 3, {1, 3}, &trace);
	CHECK(net.input_count() == 1);
	CHECK(net.output_count() == 1);
	bool saw_output = false;
	for (const auto& step : trace) {
		if (step.rfind("output", 0) == 0) saw_output = true;
	}
	CHECK(saw_output);
	CHECK_FALSE(trace.empty());
}

TEST_CASE("gadget catalog lists every kind with ports and stats") {
	auto j = nlohmann::json::parse(gadget_catalog_json());
	REQUIRE(j.is_array());
	CHECK(j.size() >= 15);
	std::set<std::string> kinds;
	for (const auto& entry : j) {
		kinds.insert(entry.at("kind").get<std::string>());
		CHECK(entry.contains("input_ports"));
		CHECK(entry.contains("output_ports"));
		CHECK(entry.contains("example_stats"));
	}
	for (const char* k : {"SKIP", "OR", "AND", "MINUS", "XOR", "CLOCK",
	                      "SPIKE", "MEMORY", "CEIL", "DELAY", "REPEAT"}) {
		CHECK(kinds.count(k));
	}
}
