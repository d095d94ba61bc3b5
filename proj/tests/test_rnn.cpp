#include <doctest.h>

#include <snncore/rnn_bridge.hpp>
#include <snncore/simulator.hpp>

#include <random>

using namespace snn;

namespace {

Network leaky_unit(const Rat& w, MemoryMode m) {
	return Network({SparseLayer(1, 1, {{0, 0, w}})}, std::move(m));
}

BinaryStream bits(std::initializer_list<int> b) {
	BinaryStream s;
	s.width = 1;
	for (int x : b) s.steps.push_back({(std::uint8_t)x});
	return s;
}

std::vector<std::uint8_t> column(const BinaryStream& s) {
	std::vector<std::uint8_t> out;
	for (const auto& step : s.steps) out.push_back(step[0]);
	return out;
}

}  // namespace

TEST_CASE("state space blocks materialize the documented matrices") {
	StateSpaceBlock b;
	b.p_in = 1;
	b.p_out = 2;
	b.decay = 0.5;
	b.weights = {{Rat(1)}, {Rat(-2)}};
	auto wp = b.wp_matrix();
	REQUIRE(wp.size() == 4);  // Heaviside rows then ramp rows
	CHECK(wp[0] == wp[2]);
	CHECK(wp[1] == wp[3]);
	auto v = b.v_matrix();
	CHECK(v[0][2] == 0.5);  // every row reads the ramp coordinates
	CHECK(v[2][2] == 0.5);
	CHECK(v[0][0] == 0.0);
	auto u = b.u_matrix();
	CHECK(u[0][0] == 1.0);  // outputs expose only the Heaviside half
	CHECK(u[0][2] == 0.0);
}

TEST_CASE("grid decay follows the memory mode") {
	CHECK(grid_decay(MemoryInfinite{}, Rat(1)) == 1.0);
	CHECK(grid_decay(MemoryZero{}, Rat(1)) == 0.0);
	CHECK(grid_decay(MemoryFinite{Rat(1)}, Rat(1)) ==
	      doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("leaky unit on the grid: hand computed bits") {
	// w=1, h=1: potentials 1, e^{-1}+1 (spike), then 1 after the reset.
	StateSpaceNet rnn = snn_to_rnn(leaky_unit(Rat(1), MemoryFinite{Rat(1)}),
	                               Rat(1));
	CHECK(column(simulate_rnn(rnn, bits({1, 1, 1}))) ==
	      std::vector<std::uint8_t>{0, 1, 0});
	// w=2 forwards the stream unchanged.
	StateSpaceNet skip = snn_to_rnn(leaky_unit(Rat(2), MemoryInfinite{}),
	                                Rat(1));
	CHECK(column(simulate_rnn(skip, bits({1, 0, 1, 1}))) ==
	      std::vector<std::uint8_t>{1, 0, 1, 1});
}

TEST_CASE("hidden states carry spikes and clipped potentials") {
	StateSpaceNet rnn = snn_to_rnn(leaky_unit(Rat(1), MemoryInfinite{}),
	                               Rat(1));
	auto states = simulate_rnn_states(rnn, bits({1, 1, 0}));
	REQUIRE(states.size() == 3);
	CHECK(states[0][0] == std::vector<double>{0.0, 1.0});  // at threshold
	CHECK(states[1][0] == std::vector<double>{1.0, 0.0});  // spike, ramp cut
	CHECK(states[2][0] == std::vector<double>{0.0, 0.0});
}

TEST_CASE("grid encoding rejects off grid spikes and roundtrips") {
	std::vector<SpikeTrain> trains{
	    SpikeTrain(std::vector<Time>{Rat(1, 2), Rat(2)})};
	CHECK_THROWS(encode_grid(trains, Rat(1), 4));
	BinaryStream s = encode_grid(trains, Rat(1, 2), 4);
	CHECK(decode_grid(s) == trains);
	CHECK_THROWS(encode_grid(trains, Rat(1, 2), 2));  // horizon too short
}

TEST_CASE("event simulation equals grid lowering on sampled networks") {
	std::mt19937_64 rng(31);
	for (int trial = 0; trial < 100; ++trial) {
		const std::size_t depth = 1 + rng() % 3;
		std::vector<SparseLayer> layers;
		std::size_t prev = 1 + rng() % 3;
		const std::size_t inputs = prev;
		for (std::size_t l = 0; l < depth; ++l) {
			const std::size_t width = 1 + rng() % 4;
			std::vector<LayerEntry> entries;
			for (std::size_t o = 0; o < width; ++o) {
				for (std::size_t i = 0; i < prev; ++i) {
					const long w = (long)(rng() % 7) - 3;
					if (w != 0) entries.push_back({o, i, Rat(w)});
				}
			}
			layers.emplace_back(width, prev, std::move(entries));
			prev = width;
		}
		const MemoryMode memory =
		    trial % 2 ? MemoryMode{MemoryFinite{Rat(1)}}
		              : MemoryMode{MemoryInfinite{}};
		Network net(layers, memory);
		std::vector<SpikeTrain> in;
		for (std::size_t i = 0; i < inputs; ++i) {
			std::vector<Time> t;
			for (long k = 1; k <= 20; ++k) {
				if (rng() % 2) t.push_back(Rat(k));
			}
			in.emplace_back(std::move(t));
		}
		const BinaryStream stream = encode_grid(in, Rat(1), 20);
		const auto rnn_out =
		    decode_grid(simulate_rnn(snn_to_rnn(net, Rat(1)), stream));
		const auto grid_out = simulate_network_grid(
		    net, in, Rat(1), 20, grid_decay(memory, Rat(1)));
		CHECK(rnn_out == grid_out);
		if (is_infinite(memory)) {
			// With no decay the grid agrees with the event simulation.
			CHECK(rnn_out == simulate_network(net, in));
		}
	}
}

TEST_CASE("state space nets roundtrip through JSON") {
	Network net({SparseLayer(2, 1, {{0, 0, Rat(2)}, {1, 0, Rat(-3, 2)}}),
	             SparseLayer(1, 2, {{0, 0, Rat(1)}, {0, 1, Rat(1)}})},
	            MemoryFinite{Rat(2)});
	StateSpaceNet rnn = snn_to_rnn(net, Rat(1, 2));
	StateSpaceNet back = deserialize_rnn(serialize_rnn(rnn));
	CHECK(back.delta == rnn.delta);
	REQUIRE(back.blocks.size() == rnn.blocks.size());
	for (std::size_t i = 0; i < back.blocks.size(); ++i) {
		CHECK(back.blocks[i].weights == rnn.blocks[i].weights);
		CHECK(back.blocks[i].decay == rnn.blocks[i].decay);
	}
	CHECK_THROWS(deserialize_rnn("{}"));
}

TEST_CASE("streams print and parse as 0/1 lines") {
	BinaryStream s;
	s.width = 2;
	s.steps = {{1, 0}, {0, 0}, {1, 1}};
	const std::string text = stream_to_text(s);
	CHECK(text == "101\n001\n");
	BinaryStream back = stream_from_text(text, Rat(1));
	CHECK(back.steps == s.steps);
	CHECK_THROWS(stream_from_text("10x\n", Rat(1)));
}
