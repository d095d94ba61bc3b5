#include <doctest.h>

#include <snncore/expressivity.hpp>

#include <random>

using namespace snn;

TEST_CASE("potential vectors of the two spike train") {
	auto pv = potential_vectors({{SpikeTrain::from_ints({1, 2})}},
	                            MemoryInfinite{});
	REQUIRE(pv.size() == 2);
	CHECK(pv[0] == std::vector<Rat>{Rat(1)});
	CHECK(pv[1] == std::vector<Rat>{Rat(2)});
	CHECK_THROWS(potential_vectors({{SpikeTrain::from_ints({1})}},
	                               MemoryFinite{Rat(1)}));
}

TEST_CASE("potential vectors never vanish on spiking windows") {
	std::mt19937_64 rng(41);
	for (int trial = 0; trial < 20; ++trial) {
		std::vector<SpikeTrain> tuple;
		for (int i = 0; i < 2; ++i) {
			std::vector<Time> t;
			for (long k = 1; k <= 8; ++k) {
				if (rng() % 2) t.push_back(Rat(k));
			}
			tuple.emplace_back(std::move(t));
		}
		for (const auto& p : potential_vectors({tuple}, MemoryInfinite{})) {
			bool nonzero = false;
			for (const auto& x : p) nonzero = nonzero || x != 0;
			CHECK(nonzero);
		}
	}
}

TEST_CASE("single unit census on frozen instances") {
	auto c = enumerate_unit_functions(1, {{SpikeTrain::from_ints({1, 2})}},
	                                  MemoryInfinite{});
	CHECK(c.count == 3);  // empty, second spike only, both spikes
	CHECK(c.witnesses.size() == 3);
	auto c1 = enumerate_unit_functions(1, {{SpikeTrain::from_ints({1})}},
	                                   MemoryInfinite{});
	CHECK(c1.count == 2);
	CHECK_THROWS(enumerate_unit_functions(3, {}, MemoryInfinite{}));
}

TEST_CASE("census counts stay below the identifiability ceiling") {
	std::vector<std::vector<SpikeTrain>> in{
	    {SpikeTrain::from_ints({1, 3}), SpikeTrain::from_ints({2, 3})},
	    {SpikeTrain::from_ints({1}), SpikeTrain::from_ints({1, 2})}};
	auto pv = potential_vectors(in, MemoryInfinite{});
	auto c = enumerate_unit_functions(2, in, MemoryInfinite{});
	CHECK(c.count == 9);
	CHECK(pv.size() == 5);
	CHECK((double)c.count <= unit_count_upper(2, pv.size()));
}

TEST_CASE("weight grid census of a tiny architecture") {
	std::vector<std::vector<SpikeTrain>> in{{SpikeTrain::from_ints({1, 2})},
	                                        {SpikeTrain::from_ints({1})},
	                                        {SpikeTrain::from_ints({2})}};
	auto n = count_network_functions_grid(
	    {1, 2, 1}, {Rat(-1), Rat(0), Rat(1), Rat(2)}, in, MemoryInfinite{});
	CHECK(n == 4);
	CHECK((double)n <= network_count_upper(4, 4));
	CHECK_THROWS(count_network_functions_grid(
	    {1, 4, 4, 1}, {Rat(0), Rat(1), Rat(2)}, in, MemoryInfinite{}, 100));
}

TEST_CASE("exact target class counts") {
	CHECK(count_target_functions(TargetClass::finite, 3, 3) == 8);
	CHECK(count_target_functions(TargetClass::finite, 4, 1) == 5);
	CHECK(count_target_functions(TargetClass::periodic, 4, 4) == 16);
	CHECK(count_target_functions(TargetClass::markovian, 2, 3, 2) == 8);
	// Sparsity above the pattern budget saturates at 2^((2^d-1)^m).
	CHECK(count_target_functions(TargetClass::markovian, 1, 100, 1) == 2);
}

TEST_CASE("lower bound parameters on hand values") {
	auto lb = lower_bound_params(TargetClass::finite, 15, 15);
	CHECK(lb.weight_bound == Rat(3, 4));
	CHECK(lb.exact);
	CHECK(lb.neuron_bound ==
	      doctest::Approx(std::sqrt(2.0 * 0.75)));
	auto approx = lower_bound_params(TargetClass::finite, 10, 10);
	CHECK_FALSE(approx.exact);
	auto mm = lower_bound_params(TargetClass::markovian, 2, 100, 2);
	CHECK(mm.weight_bound == Rat(9, 20));
}

TEST_CASE("shallow obstruction checks pass for several decay factors") {
	for (const Rat& phi : {Rat(1, 2), Rat(1, 3), Rat(2, 3)}) {
		auto reports = shallow_counterexample_check(phi);
		REQUIRE(reports.size() == 3);
		for (const auto& r : reports) CHECK(r.pass);
	}
	CHECK_THROWS(shallow_counterexample_check(Rat(1)));
}

TEST_CASE("integer weights cannot replace real ones for spike isolation") {
	auto reports = integer_real_separation_check(7, 30);
	REQUIRE(reports.size() == 3);
	for (const auto& r : reports) CHECK(r.pass);
}

TEST_CASE("check reports serialize to a JSON array") {
	auto text = reports_to_json(integer_real_separation_check(7, 5));
	CHECK(text.find("\"claim\"") != std::string::npos);
	CHECK(text.find("\"pass\"") != std::string::npos);
}
