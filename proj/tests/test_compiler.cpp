#include <doctest.h>

#include <snncore/compiler.hpp>
#include <snncore/simulator.hpp>

#include <nlohmann/json.hpp>

#include <random>

using namespace snn;

namespace {

SpikeTrain net_out(const Network& net, const std::vector<SpikeTrain>& in) {
	return simulate_network(net, in)[0];
}

bool all_bounds_pass(const CompileReport& rep) {
	for (const auto& b : rep.bound_check) {
		if (!b.pass) return false;
	}
	return !rep.bound_check.empty();
}

}  // namespace

TEST_CASE("single input compilation on hand examples") {
	auto fin = compile_single_input(FiniteSpec{4, {2}}, MemoryInfinite{});
	CHECK(all_bounds_pass(fin));
	CHECK(net_out(fin.network, {SpikeTrain::from_ints({5, 6, 7, 8})}) ==
	      SpikeTrain::from_ints({6}));
	auto per = compile_single_input(PeriodicSpec{4, {1, 3}}, MemoryInfinite{});
	CHECK(all_bounds_pass(per));
	CHECK(net_out(per.network, {SpikeTrain::from_ints(
	          {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})}) ==
	      SpikeTrain::from_ints({1, 3, 5, 7, 9, 11}));
}

TEST_CASE("frozen architecture sizes of the single input compiler") {
	// Sizes depend only on the padded period 4^ceil(log4 m) and |out|.
	struct Row {
		std::size_t m, r, depth, neurons, weights;
	};
	for (const Row& row : std::initializer_list<Row>{
	         {1, 1, 24, 193, 373},
	         {2, 2, 27, 395, 760},
	         {3, 1, 27, 395, 759},
	         {4, 4, 27, 395, 762},
	         {5, 2, 31, 804, 1536},
	         {6, 6, 31, 804, 1540}}) {
		std::set<std::size_t> out;
		for (std::size_t i = 1; i <= row.r; ++i) out.insert(i);
		auto rep = compile_single_input(FiniteSpec{row.m, out},
		                                MemoryInfinite{});
		CHECK(rep.arch_stats.depth == row.depth);
		CHECK(rep.arch_stats.total_neurons == row.neurons);
		CHECK(rep.arch_stats.nonzero_weights == row.weights);
	}
	auto per = compile_single_input(PeriodicSpec{4, {2, 4}},
	                                MemoryInfinite{});
	CHECK(per.arch_stats.depth == 21);
	CHECK(per.arch_stats.total_neurons == 347);
	CHECK(per.arch_stats.nonzero_weights == 676);
}

TEST_CASE("periods that are not powers of four are rejected with advice") {
	try {
		compile_single_input(PeriodicSpec{3, {1}}, MemoryInfinite{});
		FAIL("expected a compile error");
	} catch (const CompileError& e) {
		CHECK(e.code == "unsupported-period");
		CHECK(std::string(e.what()).find("re-express") != std::string::npos);
	}
}

TEST_CASE("boolean tables compile to exact memoryless heads") {
	// XOR on two inputs: accept masks 1 and 2.
	std::vector<bool> table{false, true, true, false};
	auto rep = compile_boolean(table, 2);
	CHECK(all_bounds_pass(rep));
	std::vector<SpikeTrain> in{SpikeTrain::from_ints({1, 2, 3}),
	                           SpikeTrain::from_ints({2, 4})};
	CHECK(net_out(rep.network, in) == SpikeTrain::from_ints({1, 3, 4}));
	CHECK_THROWS_AS(compile_boolean({true, false}, 1), CompileError);
}

TEST_CASE("markovian compilation matches the oracle") {
	MarkovianSpec spec{2, 2, {HistoryPattern{3, 1}, HistoryPattern{2}}};
	auto rep = compile_markovian(spec, MemoryInfinite{});
	CHECK(all_bounds_pass(rep));
	std::mt19937_64 rng(21);
	for (int t = 0; t < 20; ++t) {
		std::vector<SpikeTrain> in;
		for (int i = 0; i < 2; ++i) {
			std::vector<Time> times;
			for (long k = 1; k <= 9; ++k) {
				if (rng() % 2) times.push_back(Rat(k));
			}
			in.emplace_back(std::move(times));
		}
		CHECK(net_out(rep.network, in) ==
		      eval_oracle(FunctionSpec{spec}, in));
	}
}

TEST_CASE("classifier compilation on the reference example") {
	ClassifierSpec spec{2, {3}};
	auto rep = compile_classifier(spec, MemoryInfinite{});
	CHECK(all_bounds_pass(rep));
	std::vector<SpikeTrain> in{SpikeTrain::from_ints({1, 2, 4}),
	                           SpikeTrain::from_ints({1, 2, 3, 4})};
	CHECK(net_out(rep.network, in) == SpikeTrain::from_ints({2}));
}

TEST_CASE("compositional compilation chains component networks") {
	CompositionalSpec comp{
	    1,
	    {{CompComponent{{0}, PeriodicSpec{1, {1}}},
	      CompComponent{{0}, PeriodicSpec{4, {2, 4}}}},
	     {CompComponent{{0, 1}, MarkovianSpec{2, 1, {HistoryPattern{3}}}}}}};
	auto rep = compile_compositional(comp, MemoryInfinite{});
	CHECK(all_bounds_pass(rep));
	CHECK(net_out(rep.network, {SpikeTrain::from_ints({1, 2, 3, 4, 5})}) ==
	      SpikeTrain::from_ints({2, 4}));
}

TEST_CASE("compile_spec dispatches on the variant") {
	auto rep = compile_spec(FunctionSpec{FiniteSpec{2, {1}}},
	                        MemoryFinite{Rat(1)});
	CHECK(rep.network.memory() == MemoryMode{MemoryFinite{Rat(1)}});
	auto j = nlohmann::json::parse(rep.report_json());
	CHECK(j.contains("stats"));
	CHECK(j.contains("bound_check"));
	CHECK(j.contains("construction_trace"));
}

TEST_CASE("fan out limiting preserves semantics and meets the cap") {
	for (std::size_t q : {4, 8}) {
		auto rep = compile_bounded_outdegree(FiniteSpec{3, {1, 3}}, q,
		                                     MemoryInfinite{});
		CHECK(all_bounds_pass(rep));
		CHECK(rep.arch_stats.max_out_degree <= q);
		std::mt19937_64 rng(q);
		for (int t = 0; t < 10; ++t) {
			std::vector<Time> times;
			for (long k = 1; k <= 10; ++k) {
				if (rng() % 2) times.push_back(Rat(k));
			}
			SpikeTrain in(times);
			CHECK(net_out(rep.network, {in}) ==
			      eval_oracle(FunctionSpec{FiniteSpec{3, {1, 3}}}, {in}));
		}
	}
	CHECK_THROWS_AS(
	    compile_bounded_outdegree(FiniteSpec{2, {1}}, 3, MemoryInfinite{}),
	    CompileError);
}

TEST_CASE("generic out degree rewriting caps every column") {
	// A wide fan-out layer: one input feeding ten neurons.
	std::vector<LayerEntry> entries;
	for (std::size_t o = 0; o < 10; ++o) entries.push_back({o, 0, Rat(2)});
	Network net({SparseLayer(10, 1, entries)}, MemoryInfinite{});
	Network capped = enforce_out_degree(net, 4);
	CHECK(stats(capped).max_out_degree <= 4);
	SpikeTrain in = SpikeTrain::from_ints({1, 3, 4});
	CHECK(simulate_network(capped, {in}) == simulate_network(net, {in}));
}

TEST_CASE("low negative compiler isolates spikes frugally") {
	for (std::size_t m : {2, 5, 8}) {
		auto rep = compile_low_negative(m);
		std::size_t lg = 0;
		while ((std::size_t{1} << lg) < m) ++lg;
		CHECK(rep.arch_stats.negative_weights <= 2 * lg);
		std::mt19937_64 rng(m);
		for (int t = 0; t < 10; ++t) {
			SpikeTrain in = random_rational_train(rng, m + 4);
			while (in.size() != m) in = random_rational_train(rng, m + 4);
			auto out = simulate_network(rep.network, {in});
			REQUIRE(out.size() == m);
			for (std::size_t j = 1; j <= m; ++j) {
				CHECK(out[j - 1] ==
				      SpikeTrain(std::vector<Time>{in.nth(j)}));
			}
		}
	}
}

TEST_CASE("shallow homogeneous compilation with constant gaps") {
	// Infinite memory, m = 3, select the first spike.
	auto rep = compile_shallow_homogeneous(3, {1}, {Rat(1), Rat(1)},
	                                       MemoryInfinite{});
	CHECK(rep.arch_stats.depth == 2);
	CHECK(rep.arch_stats.widths == std::vector<std::size_t>{1, 3, 1});
	SpikeTrain in = SpikeTrain::from_ints({4, 5, 6});
	CHECK(net_out(rep.network, {in}) == SpikeTrain::from_ints({4}));
	// Finite memory with growing potential: still exact on the declared gaps.
	auto rep2 = compile_shallow_homogeneous(3, {2, 3}, {Rat(1), Rat(1)},
	                                        MemoryFinite{Rat(4)});
	CHECK(net_out(rep2.network, {in}) == SpikeTrain::from_ints({5, 6}));
}

TEST_CASE("gap condition failures report both sides") {
	// Tiny memory and huge gaps starve the accumulation.
	try {
		compile_shallow_homogeneous(3, {1}, {Rat(40), Rat(40)},
		                            MemoryFinite{Rat(1, 10)});
		FAIL("expected a compile error");
	} catch (const CompileError& e) {
		CHECK(e.code == "gap-condition");
	}
}
