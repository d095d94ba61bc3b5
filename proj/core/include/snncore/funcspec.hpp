#pragma once

#include <snncore/spike_train.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace snn {

/* Output positions among the first m spikes; the rest of the train is empty. */
struct FiniteSpec {
	std::size_t m = 1;
	std::set<std::size_t> out;  // subset of [m]
	bool operator==(const FiniteSpec&) const = default;
};

/* Output positions repeat with period m in spike index. */
struct PeriodicSpec {
	std::size_t m = 1;
	std::set<std::size_t> out;  // subset of [m]
	bool operator==(const PeriodicSpec&) const = default;
};

/*
 * A history pattern is the sequence (oldest first) of the last m' union
 * events' input-indicator columns; column bit i (LSB = input 1) says whether
 * input i+1 spiked at that event. Columns are nonzero by construction.
 */
using HistoryPattern = std::vector<std::uint32_t>;

struct MarkovianSpec {
	std::size_t d = 1;
	std::size_t m = 1;
	std::set<HistoryPattern> accepted;
	bool operator==(const MarkovianSpec&) const = default;
};

/* Reference patterns over the last m dominating spikes; bit i-1 = position i
 * of the window (i=1 oldest). */
struct ClassifierSpec {
	std::size_t m = 1;
	std::set<std::uint32_t> patterns;
	bool operator==(const ClassifierSpec&) const = default;
};

using ComponentSpec = std::variant<FiniteSpec, PeriodicSpec, MarkovianSpec>;

struct CompComponent {
	std::vector<std::size_t> inputs;  // 0-based indices into previous layer
	ComponentSpec spec;
	bool operator==(const CompComponent&) const = default;
};

struct CompositionalSpec {
	std::size_t d0 = 1;  // arity of the whole function
	std::vector<std::vector<CompComponent>> layers;
	bool operator==(const CompositionalSpec&) const = default;
};

using FunctionSpec = std::variant<FiniteSpec, PeriodicSpec, MarkovianSpec,
                                  CompositionalSpec, ClassifierSpec>;

std::size_t spec_arity(const FunctionSpec& spec);
std::size_t spec_sparsity(const FunctionSpec& spec);  // |out| / |accepted| / |patterns|

SpikeTrain eval_oracle(const FunctionSpec& spec,
                       const std::vector<SpikeTrain>& inputs);
SpikeTrain eval_oracle(const ComponentSpec& spec,
                       const std::vector<SpikeTrain>& inputs);

// ---- set-theoretic definitions of the named gadget functions ----

SpikeTrain or_oracle(const std::vector<SpikeTrain>& in);
SpikeTrain and_oracle(const std::vector<SpikeTrain>& in);
SpikeTrain minus_oracle(const SpikeTrain& a, const SpikeTrain& b);
SpikeTrain xor_oracle(const SpikeTrain& a, const SpikeTrain& b);
SpikeTrain is_equal_oracle(const SpikeTrain& a, const SpikeTrain& b,
                           const SpikeTrain& dom);
SpikeTrain translate_oracle(const SpikeTrain& t, const SpikeTrain& s,
                            const SpikeTrain& c);
SpikeTrain odd_oracle(const SpikeTrain& in);
SpikeTrain even_oracle(const SpikeTrain& in);
// residue j ∈ [m]: every m-th spike starting at the j-th
SpikeTrain clock_oracle(std::size_t m, std::size_t j, const SpikeTrain& in);
SpikeTrain spike_oracle(std::size_t m, const SpikeTrain& in);
SpikeTrain represent_oracle(const std::vector<bool>& r, const SpikeTrain& in);
SpikeTrain ceil_oracle(std::size_t m, const SpikeTrain& in,
                       const SpikeTrain& dom);
SpikeTrain is_approx_equal_oracle(std::size_t m, const SpikeTrain& a,
                                  const SpikeTrain& b, const SpikeTrain& dom);
SpikeTrain delay_oracle(std::size_t m, const SpikeTrain& in,
                        const SpikeTrain& dom);
SpikeTrain repeat_oracle(std::size_t m, const SpikeTrain& in,
                         const SpikeTrain& dom);
SpikeTrain if_then_oracle(const std::vector<bool>& r, const SpikeTrain& in,
                          const SpikeTrain& dom);
// outputs ordered (i,j) lexicographically, i input index, j delay
std::vector<SpikeTrain> memory_oracle(std::size_t d, std::size_t m,
                                      const std::vector<SpikeTrain>& in);

// Memoryless Boolean table: output spikes at t iff table(indicator at t).
SpikeTrain boolean_oracle(const std::vector<bool>& table, std::size_t d,
                          const std::vector<SpikeTrain>& in);

// ---- canonical input enumeration and randomization ----

std::vector<std::vector<SpikeTrain>> enumerate_canonical_inputs(
    std::size_t d, std::size_t horizon, std::size_t budget = 200000);

FunctionSpec random_spec(const std::string& kind, std::size_t d, std::size_t m,
                         std::size_t r, std::uint64_t seed);

SpikeTrain random_integer_train(std::mt19937_64& rng, std::size_t horizon,
                                double density = 0.5);
SpikeTrain random_rational_train(std::mt19937_64& rng, std::size_t max_spikes,
                                 long max_num = 48, long max_den = 5);
MonotoneMap random_monotone_map(std::mt19937_64& rng);

struct StructuralReport {
	bool window_determinism = true;  // finite specs are (m+1)-window determined
	bool eventual_periodicity = true;
	std::string detail;
};

StructuralReport structural_checks(const FunctionSpec& spec,
                                   std::size_t horizon);

// ---- JSON spec format ----

std::string spec_to_json(const FunctionSpec& spec);
FunctionSpec spec_from_json(const std::string& text);

}  // namespace snn
