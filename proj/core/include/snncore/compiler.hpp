#pragma once

#include <snncore/funcspec.hpp>
#include <snncore/network.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace snn {

/*
 * Network synthesis from declarative function specs. All compilers except
 * compile_shallow_homogeneous emit integer weights that do not depend on the
 * requested memory mode; the mode is only attached to the result.
 */

struct CompileError : std::runtime_error {
	CompileError(std::string code_, const std::string& what_)
	    : std::runtime_error(code_ + ": " + what_), code(std::move(code_)) {}
	std::string code;
};

/* One exact counted claim about the synthesized architecture. */
struct BoundCheck {
	std::string claim;
	long long expected = 0;  // exact count, or inclusive upper bound
	long long observed = 0;
	bool upper_bound = false;  // pass iff observed <= expected
	bool pass = false;
};

/*
 * construction_trace entries come from a fixed vocabulary:
 *   coarse-split, fine-split, finite-block, periodic-block,
 *   representation-block, delay-block, output, memory-block, boolean-head,
 *   window-gate, component, duplication, set-operations, shallow-layer
 */
struct CompileReport {
	Network network = Network({SparseLayer(1, 1, {{0, 0, Rat(2)}})},
	                          MemoryInfinite{});
	NetworkStats arch_stats;
	std::vector<BoundCheck> bound_check;
	std::vector<std::string> construction_trace;

	std::string report_json() const;
};

CompileReport compile_single_input(const FiniteSpec& spec, MemoryMode memory);
CompileReport compile_single_input(const PeriodicSpec& spec, MemoryMode memory);

// table has 2^d entries indexed by the input indicator bitmask (bit i-1 =
// input i); table[0] must be false.
CompileReport compile_boolean(const std::vector<bool>& table, std::size_t d);

CompileReport compile_markovian(const MarkovianSpec& spec, MemoryMode memory);
CompileReport compile_compositional(const CompositionalSpec& spec,
                                    MemoryMode memory);
CompileReport compile_classifier(const ClassifierSpec& spec, MemoryMode memory);

// Same function as compile_single_input, but every neuron (and every primary
// input) feeds at most q targets per layer; q >= 4.
CompileReport compile_bounded_outdegree(const FiniteSpec& spec, std::size_t q,
                                        MemoryMode memory);
CompileReport compile_bounded_outdegree(const PeriodicSpec& spec, std::size_t q,
                                        MemoryMode memory);

// m outputs; on any input with at least m spikes, output j carries exactly
// the j-th input spike. Uses at most 2*ceil(log2 m) negative weights.
CompileReport compile_low_negative(std::size_t m);

// One hidden layer of m neurons on a single input whose consecutive gaps are
// `gaps` (length m-1); hidden neuron k first crosses threshold at the k-th
// spike, and signed output weights select `out`. Real-valued weights.
CompileReport compile_shallow_homogeneous(std::size_t m,
                                          const std::set<std::size_t>& out,
                                          const std::vector<Rat>& gaps,
                                          MemoryMode memory);

// Dispatch on the spec variant (classifier/compositional included).
CompileReport compile_spec(const FunctionSpec& spec, MemoryMode memory);

// Fan-out limiting rewrite: inserts weight-2 duplication layers until every
// column of every layer has at most q outgoing weights. Semantics-preserving
// for every memory mode.
Network enforce_out_degree(const Network& net, std::size_t q);

}  // namespace snn
