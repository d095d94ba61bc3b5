#pragma once

#include <snncore/network.hpp>

#include <map>
#include <vector>

namespace snn {

/*
 * Incremental assembly of a layered network from sub-networks. Wires name
 * neuron outputs (or primary inputs); instantiating a sub-network on wires of
 * unequal depth inserts weight-2 forwarding chains automatically, so callers
 * can wire by role without tracking layer indices.
 */
class CircuitBuilder {
 public:
	using Wire = std::size_t;

	explicit CircuitBuilder(std::size_t input_count);

	std::vector<Wire> inputs() const;
	std::size_t level_of(Wire w) const;

	// Instantiates the sub-network on the given wires; returns output wires.
	// The sub-network's memory mode is ignored (only weights are copied).
	std::vector<Wire> add(const Network& net, const std::vector<Wire>& in);

	// Forwards a wire to the given level through weight-2 chains (memoized).
	Wire forward_to(Wire w, std::size_t level);

	// Creates one neuron at the level after the deepest given wire, forwarding
	// inputs as needed; weights[i] applies to in[i].
	Wire add_neuron(const std::vector<Wire>& in, const std::vector<Rat>& weights);

	// Finalizes the network with the given output wires in order. Appends a
	// selection layer unless the outputs are exactly the deepest level in
	// order.
	Network build(const std::vector<Wire>& outputs, MemoryMode memory);

 private:
	struct Cell {
		std::vector<std::pair<std::size_t, Rat>> in;  // (pos at prev level, w)
	};
	struct WireInfo {
		std::size_t level;
		std::size_t pos;
	};

	Wire make_wire(std::size_t level, std::size_t pos);

	std::vector<std::vector<Cell>> levels_;  // level 0: inputs (cells empty)
	std::vector<WireInfo> wires_;
	std::map<std::pair<std::size_t, std::size_t>, Wire> forward_cache_;
};

}  // namespace snn
