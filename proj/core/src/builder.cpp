#include <snncore/builder.hpp>

#include <algorithm>
#include <stdexcept>

namespace snn {

CircuitBuilder::CircuitBuilder(std::size_t input_count) {
	if (input_count == 0) {
		throw std::invalid_argument("builder needs at least one input");
	}
	levels_.emplace_back(input_count);
	for (std::size_t i = 0; i < input_count; ++i) {
		make_wire(0, i);
	}
}

CircuitBuilder::Wire CircuitBuilder::make_wire(std::size_t level,
                                               std::size_t pos) {
	wires_.push_back({level, pos});
	return wires_.size() - 1;
}

std::vector<CircuitBuilder::Wire> CircuitBuilder::inputs() const {
	std::vector<Wire> in(levels_[0].size());
	for (std::size_t i = 0; i < in.size(); ++i) in[i] = i;
	return in;
}

std::size_t CircuitBuilder::level_of(Wire w) const {
	return wires_.at(w).level;
}

CircuitBuilder::Wire CircuitBuilder::forward_to(Wire w, std::size_t level) {
	if (wires_.at(w).level > level) {
		throw std::invalid_argument("cannot forward a wire backwards");
	}
	while (wires_[w].level < level) {
		const auto key = std::make_pair(wires_[w].level, wires_[w].pos);
		auto it = forward_cache_.find(key);
		if (it != forward_cache_.end()) {
			w = it->second;
			continue;
		}
		const std::size_t next = wires_[w].level + 1;
		if (levels_.size() <= next) levels_.emplace_back();
		levels_[next].push_back({{{wires_[w].pos, Rat(2)}}});
		Wire fw = make_wire(next, levels_[next].size() - 1);
		forward_cache_.emplace(key, fw);
		w = fw;
	}
	return w;
}

std::vector<CircuitBuilder::Wire> CircuitBuilder::add(
    const Network& net, const std::vector<Wire>& in) {
	if (in.size() != net.input_count()) {
		throw std::invalid_argument("instance arity mismatch");
	}
	std::size_t start = 0;
	for (Wire w : in) start = std::max(start, wires_.at(w).level);
	std::vector<std::size_t> prev_pos;
	for (Wire w : in) prev_pos.push_back(wires_[forward_to(w, start)].pos);

	std::vector<Wire> out;
	for (std::size_t li = 0; li < net.depth(); ++li) {
		const auto& layer = net.layers()[li];
		const std::size_t lvl = start + li + 1;
		if (levels_.size() <= lvl) levels_.emplace_back();
		std::vector<std::size_t> cur_pos;
		std::vector<Wire> cur_wires;
		for (std::size_t o = 0; o < layer.rows(); ++o) {
			Cell cell;
			for (const auto& e : layer.entries()) {
				if (e.out == o) cell.in.emplace_back(prev_pos[e.in], e.weight);
			}
			levels_[lvl].push_back(std::move(cell));
			cur_pos.push_back(levels_[lvl].size() - 1);
			cur_wires.push_back(make_wire(lvl, cur_pos.back()));
		}
		prev_pos = std::move(cur_pos);
		out = std::move(cur_wires);
	}
	return out;
}

CircuitBuilder::Wire CircuitBuilder::add_neuron(
    const std::vector<Wire>& in, const std::vector<Rat>& weights) {
	if (in.size() != weights.size() || in.empty()) {
		throw std::invalid_argument("neuron wiring mismatch");
	}
	std::size_t start = 0;
	for (Wire w : in) start = std::max(start, wires_.at(w).level);
	Cell cell;
	for (std::size_t i = 0; i < in.size(); ++i) {
		if (weights[i] == 0) continue;
		cell.in.emplace_back(wires_[forward_to(in[i], start)].pos, weights[i]);
	}
	const std::size_t lvl = start + 1;
	if (levels_.size() <= lvl) levels_.emplace_back();
	levels_[lvl].push_back(std::move(cell));
	return make_wire(lvl, levels_[lvl].size() - 1);
}

Network CircuitBuilder::build(const std::vector<Wire>& outputs,
                              MemoryMode memory) {
	if (outputs.empty()) {
		throw std::invalid_argument("network needs at least one output");
	}
	std::size_t last = 1;
	for (Wire w : outputs) last = std::max(last, wires_.at(w).level);
	std::vector<std::size_t> out_pos;
	for (Wire w : outputs) out_pos.push_back(wires_[forward_to(w, last)].pos);

	bool identity =
	    levels_.size() == last + 1 && out_pos.size() == levels_[last].size();
	for (std::size_t i = 0; identity && i < out_pos.size(); ++i) {
		identity = out_pos[i] == i;
	}

	std::vector<SparseLayer> layers;
	for (std::size_t lvl = 1; lvl <= last; ++lvl) {
		std::vector<LayerEntry> entries;
		for (std::size_t o = 0; o < levels_[lvl].size(); ++o) {
			for (const auto& [in, w] : levels_[lvl][o].in) {
				entries.push_back({o, in, w});
			}
		}
		layers.emplace_back(levels_[lvl].size(), levels_[lvl - 1].size(),
		                    std::move(entries));
	}
	if (!identity) {
		std::vector<LayerEntry> entries;
		for (std::size_t i = 0; i < out_pos.size(); ++i) {
			entries.push_back({i, out_pos[i], Rat(2)});
		}
		layers.emplace_back(out_pos.size(), levels_[last].size(),
		                    std::move(entries));
	}
	return Network(std::move(layers), std::move(memory));
}

}  // namespace snn
