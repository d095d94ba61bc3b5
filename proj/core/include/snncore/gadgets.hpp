#pragma once

#include <snncore/funcspec.hpp>
#include <snncore/network.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace snn {

/*
 * Parametric sub-network builders. All weights are integers and independent
 * of the memory mode; networks are returned with Infinite memory by default
 * and can be retargeted with Network::with_memory.
 */

Network skip_net();
Network or_net(std::size_t d);       // d >= 1 (d == 1 degrades to SKIP)
Network and_net(std::size_t d);      // d >= 1 (d == 1 degrades to SKIP)
Network minus_net();                 // inputs (I, J)
Network xor_net();                   // inputs (I, J)
Network is_equal_net();              // inputs (I, J, D)
Network translate_net();             // inputs (T, S, C), weights (1, 1, -1)
Network odd_even_net();              // outputs (ODD, EVEN)
Network odd_net();
Network even_net();
Network clock_net(std::size_t m);    // m = 2^q; outputs residues 1..m
Network spike_net(std::size_t m);    // output {I_(m)}
Network represent_net(const std::vector<bool>& r);
Network ceil_net(std::size_t m);     // inputs (I, D)
Network is_approx_equal_net(std::size_t m);  // inputs (I, J, D)
Network delay_net(std::size_t m);    // inputs (I, D)
Network repeat_net(std::size_t m);   // inputs (I, D)
Network if_then_net(const std::vector<bool>& r);  // inputs (I, D)
Network memory_net(std::size_t d, std::size_t m);  // outputs (i,j) i-major

// Four-layer memoryless network: spikes at t iff the active-input bitmask
// (bit i-1 = input i) is in the accepted set. Masks must be nonzero.
Network boolean_head_net(const std::vector<std::uint32_t>& accepted,
                         std::size_t d);

Network markovian_net(const MarkovianSpec& spec);

// Single-input representation pipeline (coarse split, fine split,
// finite/periodic block, representation block, delay block, output).
// For periodic specs m must be a power of four.
Network single_input_net(bool periodic, std::size_t m,
                         const std::set<std::size_t>& out,
                         std::vector<std::string>* trace = nullptr);

// Adds a reset input (last port); every spike of it zeroes all neuron
// potentials, so between resets the network acts on the open-window inputs.
Network wrap_with_reset(const Network& net);

struct Gadget {
	std::string kind;
	Network net = skip_net();
	std::vector<std::string> input_ports;
	std::vector<std::string> output_ports;
	std::string stats_note;
	std::size_t m = 0;
	std::size_t d = 0;
	std::vector<bool> r;
};

Gadget build_primitive(const std::string& kind, std::size_t d = 2);
Gadget build_periodic(const std::string& kind, std::size_t m = 1);
Gadget build_finite(const std::string& kind, std::size_t m,
                    const std::vector<bool>& r = {});
Gadget build_temporal(const std::string& kind, std::size_t m,
                      const std::vector<bool>& r = {});
Gadget build_memory_gadget(std::size_t d, std::size_t m);

// Evaluates the matching set-theoretic oracle for a built gadget.
SpikeTrain gadget_oracle(const Gadget& g, const std::vector<SpikeTrain>& in);
std::vector<SpikeTrain> gadget_oracle_all(const Gadget& g,
                                          const std::vector<SpikeTrain>& in);

std::string gadget_catalog_json();

}  // namespace snn
