#pragma once

#include <snncore/network.hpp>
#include <snncore/simulator.hpp>
#include <snncore/spike_train.hpp>

#include <string>
#include <vector>

namespace snn {

/*
 * Counting machinery and small-scale impossibility checks: window potential
 * vectors, unit/network distinct-function bounds, exact target-class counts,
 * and the shallow/integer-weight counterexample verifiers.
 */

struct CheckReport {
	std::string claim;
	std::string instance;
	std::string bound;
	std::string observed;
	bool pass = false;
};

std::string reports_to_json(const std::vector<CheckReport>& reports);

/* All vectors (p_i)_i with p_i = sum of decay(tau -> t) over tau in the i-th
 * train within [r, t], for event-window pairs r <= t of each tuple's union. */
std::vector<std::vector<Rat>> potential_vectors(
    const std::vector<std::vector<SpikeTrain>>& inputs,
    const MemoryMode& memory);

// Distinct-function ceiling for one unit with d inputs over H window
// vectors, and for a network with s weights and T_sum total input spikes.
double unit_count_upper(std::size_t d, std::size_t H);
double network_count_upper(std::size_t s, std::size_t T_sum);

struct UnitFunctionCensus {
	std::size_t count = 0;
	std::vector<std::vector<Rat>> witnesses;  // one weight vector per class
};

// Exact census of input->output maps of a single unit (d <= 2) over the
// given tuples: cell witnesses of the arrangement of <w,p> in {0,1}.
UnitFunctionCensus enumerate_unit_functions(
    std::size_t d, const std::vector<std::vector<SpikeTrain>>& inputs,
    const MemoryMode& memory, std::size_t budget = 200000);

// Exhaustive distinct-function count for a tiny dense architecture over a
// finite weight value set (lower estimate of the true count).
std::size_t count_network_functions_grid(
    const std::vector<std::size_t>& widths, const std::vector<Rat>& values,
    const std::vector<std::vector<SpikeTrain>>& inputs,
    const MemoryMode& memory, std::size_t budget = 2000000);

enum class TargetClass { finite, periodic, markovian };

// Exact class sizes: finite/periodic sparsity-r counts; for markovian the
// guaranteed lower bound 2^(r /\ (2^d-1)^m).
BigInt count_target_functions(TargetClass cls, std::size_t m, std::size_t r,
                              std::size_t d = 1);

struct LowerBoundInfo {
	Rat weight_bound;     // lower bound on the number of nonzero weights s
	double neuron_bound;  // > sqrt(2 s) when depth >= 3
	bool exact = true;    // false when log2(m+1) is not an integer
};

LowerBoundInfo lower_bound_params(TargetClass cls, std::size_t m,
                                  std::size_t r, std::size_t d = 1);

// Rational-decay instance of the three-spike obstruction: single hidden
// units only realize {}, {tau2} or the full train; nets with at most one
// negative weight cannot isolate the first spike; the deep construction with
// two or more negative weights can.
std::vector<CheckReport> shallow_counterexample_check(const Rat& phi1);

// Weights (1/2, 1) on one unit isolate the third spike of a three-spike
// train given a two-spike dominating companion; no integer pair in [-5,5]^2
// does. Includes the step-by-step integer contradiction.
std::vector<CheckReport> integer_real_separation_check(std::uint64_t seed,
                                                       std::size_t samples);

}  // namespace snn
