#include <doctest.h>

#include <snncore/network.hpp>
#include <snncore/spike_train.hpp>

#include <sstream>

using namespace snn;

TEST_CASE("spike trains are strictly increasing positive sequences") {
	SpikeTrain t = SpikeTrain::from_ints({1, 3, 7});
	CHECK(t.size() == 3);
	CHECK(t.nth(1) == Rat(1));
	CHECK(t.nth(3) == Rat(7));
	CHECK(t.contains(Rat(3)));
	CHECK_FALSE(t.contains(Rat(2)));
	CHECK_THROWS(SpikeTrain(std::vector<Time>{Rat(2), Rat(2)}));
	CHECK_THROWS(SpikeTrain(std::vector<Time>{Rat(0), Rat(1)}));
	CHECK_THROWS(SpikeTrain(std::vector<Time>{Rat(3), Rat(1)}));
}

TEST_CASE("union, domination, and window restriction") {
	SpikeTrain a = SpikeTrain::from_ints({1, 3});
	SpikeTrain b = SpikeTrain::from_ints({2, 3});
	CHECK(train_union({a, b}) == SpikeTrain::from_ints({1, 2, 3}));
	CHECK(dominates(a, train_union({a, b})));  // a is dominated by the union
	CHECK_FALSE(dominates(a, b));
	SpikeTrain u = SpikeTrain::from_ints({1, 2, 3, 4, 5});
	CHECK(restrict_open(u, Rat(1), Rat(4)) == SpikeTrain::from_ints({2, 3}));
	CHECK(restrict_halfopen(u, Rat(1), Rat(4)) ==
	      SpikeTrain::from_ints({2, 3, 4}));
	CHECK(truncate_at(u, Rat(3)) == SpikeTrain::from_ints({1, 2, 3}));
	auto rank = ordering_rank(u);
	CHECK(rank.at(Rat(1)) == 1);
	CHECK(rank.at(Rat(5)) == 5);
}

TEST_CASE("monotone maps are order preserving bijections with inverses") {
	MonotoneMap id;
	CHECK(id(Rat(7, 3)) == Rat(7, 3));
	MonotoneMap map({{Rat(2), Rat(1)}, {Rat(4), Rat(5)}});
	CHECK(map(Rat(1)) == Rat(1, 2));
	CHECK(map(Rat(2)) == Rat(1));
	CHECK(map(Rat(3)) == Rat(3));
	CHECK(map(Rat(4)) == Rat(5));
	CHECK(map(Rat(6)) == Rat(7));  // unit slope past the last knot
	MonotoneMap inv = map.inverse();
	for (long k = 1; k <= 12; ++k) {
		CHECK(inv(map(Rat(k, 2))) == Rat(k, 2));
	}
	SpikeTrain t = SpikeTrain::from_ints({1, 2, 4});
	CHECK(apply_monotone(t, map) ==
	      SpikeTrain(std::vector<Time>{Rat(1, 2), Rat(1), Rat(5)}));
}

TEST_CASE("train text format roundtrips") {
	std::vector<SpikeTrain> trains{
	    SpikeTrain(std::vector<Time>{Rat(1, 2), Rat(3)}), SpikeTrain{},
	    SpikeTrain::from_ints({2, 4, 6})};
	std::ostringstream out;
	write_trains(out, trains);
	std::istringstream in(out.str());
	CHECK(read_trains(in) == trains);
}

TEST_CASE("network structure, statistics, and validation") {
	SparseLayer l1(2, 1, {{0, 0, Rat(2)}, {1, 0, Rat(-1)}});
	SparseLayer l2(1, 2, {{0, 0, Rat(1)}, {0, 1, Rat(1)}});
	Network net({l1, l2}, MemoryInfinite{});
	auto s = stats(net);
	CHECK(s.depth == 2);
	CHECK(s.widths == std::vector<std::size_t>{1, 2, 1});
	CHECK(s.total_neurons == 4);
	CHECK(s.nonzero_weights == 4);
	CHECK(s.negative_weights == 1);
	CHECK(s.max_out_degree == 2);
	CHECK_THROWS(Network({l2, l2}, MemoryInfinite{}));  // width mismatch
	CHECK_THROWS(SparseLayer(1, 1, {{0, 0, Rat(0)}}));  // stored zero weight
	CHECK_THROWS(SparseLayer(1, 1, {{1, 0, Rat(1)}}));  // row out of range
}

TEST_CASE("compose, parallel, and skip padding combine widths") {
	SparseLayer a(2, 1, {{0, 0, Rat(2)}, {1, 0, Rat(2)}});
	SparseLayer b(1, 2, {{0, 0, Rat(1)}, {0, 1, Rat(1)}});
	Network first({a}, MemoryInfinite{});
	Network second({b}, MemoryInfinite{});
	Network chain = compose(first, second);
	CHECK(chain.depth() == 2);
	CHECK(chain.input_count() == 1);
	CHECK(chain.output_count() == 1);
	Network par = parallel(first, second);
	CHECK(par.input_count() == 3);
	CHECK(par.output_count() == 3);
	Network padded = pad_with_skip(first, 2);  // two identity layers appended
	CHECK(padded.depth() == first.depth() + 2);
	CHECK(padded.input_count() == 1);
	CHECK(padded.output_count() == 2);
	CHECK_THROWS(compose(second, second));  // arity mismatch
}

TEST_CASE("network serialization roundtrips and rejects junk") {
	SparseLayer l(1, 2, {{0, 0, Rat(3, 2)}, {0, 1, Rat(-2)}});
	Network net({l}, MemoryFinite{Rat(1, 10)});
	Network back = deserialize(serialize(net));
	CHECK(back == net);
	CHECK_THROWS(deserialize("not a network"));
	CHECK_THROWS(deserialize("{\"format\":\"something-else\"}"));
}

TEST_CASE("memory modes parse and print") {
	CHECK(memory_to_string(MemoryZero{}) == "zero");
	CHECK(memory_to_string(MemoryInfinite{}) == "infinite");
	CHECK(memory_to_string(MemoryFinite{Rat(1, 10)}) == "h=1/10");
	CHECK(memory_from_string("inf") == MemoryMode{MemoryInfinite{}});
	CHECK(memory_from_string("h=3/7") == MemoryMode{MemoryFinite{Rat(3, 7)}});
	CHECK(memory_from_string("2") == MemoryMode{MemoryFinite{Rat(2)}});
	CHECK_THROWS(memory_from_string("h=0"));
	CHECK_THROWS(memory_from_string("h=-1"));
}

TEST_CASE("rational parsing and printing") {
	CHECK(parse_rat("3/6") == Rat(1, 2));
	CHECK(rat_to_string(Rat(-4, 8)) == "-1/2");
	CHECK(rat_to_string(Rat(5)) == "5");
	CHECK_THROWS(parse_rat("1/0"));
	CHECK_THROWS(parse_rat("abc"));
}
