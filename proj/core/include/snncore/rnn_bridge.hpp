#pragma once

#include <snncore/network.hpp>
#include <snncore/spike_train.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace snn {

/*
 * Discrete-time lowering of a feedforward network on a regular grid. Each
 * layer becomes a state-space block h = sigma(W' x + V h_prev), o = U h with
 * state dimension 2 p_out: the first p_out coordinates pass through a strict
 * Heaviside step 1(x > 1) and carry the spike bits, the last p_out through a
 * clipped ramp x 1(0 <= x <= 1) and carry the membrane potentials.
 */
struct StateSpaceBlock {
	std::size_t p_in = 0;
	std::size_t p_out = 0;
	// Input matrix rows 0..p_out-1 (Heaviside part); the ramp part repeats
	// them, see wp_matrix().
	std::vector<std::vector<Rat>> weights;  // p_out x p_in
	double decay = 1.0;  // shared V entry: 1, e^{-delta/h}, or 0

	// Materialized matrices in the documented block structure.
	std::vector<std::vector<Rat>> wp_matrix() const;      // (W; W), 2p x p_in
	std::vector<std::vector<double>> v_matrix() const;    // (0 dI; 0 dI)
	std::vector<std::vector<double>> u_matrix() const;    // (I 0)
};

struct StateSpaceNet {
	std::vector<StateSpaceBlock> blocks;
	Rat delta = 1;
};

/* Grid samples: step t (starting at 1) is time t*delta. */
struct BinaryStream {
	std::size_t width = 0;
	Rat delta = 1;
	std::vector<std::vector<std::uint8_t>> steps;  // steps[t-1] has width bits
};

StateSpaceNet snn_to_rnn(const Network& net, const Rat& delta);

BinaryStream simulate_rnn(const StateSpaceNet& rnn, const BinaryStream& input);

// Hidden states after each step for one block chain; used to compare the
// ramp coordinates against membrane potentials. states[t-1][layer] holds the
// 2 p_out coordinates of that layer's block.
std::vector<std::vector<std::vector<double>>> simulate_rnn_states(
    const StateSpaceNet& rnn, const BinaryStream& input);

BinaryStream encode_grid(const std::vector<SpikeTrain>& trains,
                         const Rat& delta, std::size_t steps);
std::vector<SpikeTrain> decode_grid(const BinaryStream& stream);

// Matches the float grid semantics of simulate_network_grid for this memory
// mode: 1 for Infinite, 0 for Zero, e^{-delta/h} for Finite(h).
double grid_decay(const MemoryMode& memory, const Rat& delta);

std::string serialize_rnn(const StateSpaceNet& rnn);
StateSpaceNet deserialize_rnn(const std::string& text);

// One line of 0/1 characters per channel, one character per step.
std::string stream_to_text(const BinaryStream& stream);
BinaryStream stream_from_text(const std::string& text, const Rat& delta);

}  // namespace snn
