#pragma once

#include <snncore/rational.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace snn {

/* Memory coefficient h ∈ [0,∞]: Zero is memoryless, Infinite never decays. */
struct MemoryZero {
	bool operator==(const MemoryZero&) const = default;
};
struct MemoryInfinite {
	bool operator==(const MemoryInfinite&) const = default;
};
struct MemoryFinite {
	Rat h;  // > 0
	bool operator==(const MemoryFinite&) const = default;
};
using MemoryMode = std::variant<MemoryZero, MemoryFinite, MemoryInfinite>;

inline bool is_zero(const MemoryMode& m) {
	return std::holds_alternative<MemoryZero>(m);
}
inline bool is_infinite(const MemoryMode& m) {
	return std::holds_alternative<MemoryInfinite>(m);
}
inline bool is_finite(const MemoryMode& m) {
	return std::holds_alternative<MemoryFinite>(m);
}

struct LayerEntry {
	std::size_t out = 0;  // 0-based output neuron index
	std::size_t in = 0;   // 0-based input index
	Rat weight;
	bool operator==(const LayerEntry&) const = default;
};

/* Sparse weight matrix of one layer; stored entries are nonzero. */
class SparseLayer {
 public:
	SparseLayer(std::size_t rows, std::size_t cols,
	            std::vector<LayerEntry> entries);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	const std::vector<LayerEntry>& entries() const { return entries_; }

	// Nonzero incoming (in, weight) pairs of one output neuron.
	std::vector<std::pair<std::size_t, Rat>> row(std::size_t out) const;

	bool operator==(const SparseLayer&) const = default;

 private:
	std::size_t rows_, cols_;
	std::vector<LayerEntry> entries_;
};

/* Feedforward SNN: a chain of sparse layers plus a memory mode. */
class Network {
 public:
	Network(std::vector<SparseLayer> layers, MemoryMode memory);

	const std::vector<SparseLayer>& layers() const { return layers_; }
	const MemoryMode& memory() const { return memory_; }
	std::size_t depth() const { return layers_.size(); }
	std::size_t input_count() const { return layers_.front().cols(); }
	std::size_t output_count() const { return layers_.back().rows(); }

	Network with_memory(MemoryMode m) const { return Network(layers_, m); }

	bool operator==(const Network&) const = default;

 private:
	std::vector<SparseLayer> layers_;
	MemoryMode memory_;
};

struct NetworkStats {
	std::size_t depth = 0;
	std::vector<std::size_t> widths;  // (p_0, ..., p_L)
	std::size_t total_neurons = 0;    // ‖p‖₁ = Σ_{ℓ=0}^{L} p_ℓ
	std::size_t nonzero_weights = 0;
	std::size_t negative_weights = 0;
	std::size_t max_out_degree = 0;
	bool operator==(const NetworkStats&) const = default;
};

Network compose(const Network& first, const Network& second);
Network parallel(const Network& a, const Network& b);
Network pad_with_skip(const Network& net, std::size_t extra);
NetworkStats stats(const Network& net);

std::string serialize(const Network& net,
                      const std::string& meta_json = "{}",
                      const std::string& report_json = "");
Network deserialize(const std::string& bytes);

std::string memory_to_string(const MemoryMode& m);
MemoryMode memory_from_string(const std::string& s);

}  // namespace snn
