#include <snncore/network.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace snn {

using nlohmann::json;

SparseLayer::SparseLayer(std::size_t rows, std::size_t cols,
                         std::vector<LayerEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
	if (rows_ == 0 || cols_ == 0) {
		throw std::invalid_argument("layer dimensions must be positive");
	}
	std::set<std::pair<std::size_t, std::size_t>> seen;
	for (const auto& e : entries_) {
		if (e.out >= rows_ || e.in >= cols_) {
			throw std::invalid_argument("layer entry index out of range");
		}
		if (e.weight == 0) {
			throw std::invalid_argument("layer entries must be nonzero");
		}
		if (!seen.insert({e.out, e.in}).second) {
			throw std::invalid_argument("duplicate (out,in) layer entry");
		}
	}
}

std::vector<std::pair<std::size_t, Rat>> SparseLayer::row(
    std::size_t out) const {
	std::vector<std::pair<std::size_t, Rat>> r;
	for (const auto& e : entries_) {
		if (e.out == out) r.emplace_back(e.in, e.weight);
	}
	return r;
}

Network::Network(std::vector<SparseLayer> layers, MemoryMode memory)
    : layers_(std::move(layers)), memory_(std::move(memory)) {
	if (layers_.empty()) {
		throw std::invalid_argument("network needs at least one layer");
	}
	for (std::size_t i = 1; i < layers_.size(); ++i) {
		if (layers_[i].cols() != layers_[i - 1].rows()) {
			throw std::invalid_argument("adjacent layer dimensions mismatch");
		}
	}
	if (auto* f = std::get_if<MemoryFinite>(&memory_); f && f->h <= 0) {
		throw std::invalid_argument("finite memory coefficient must be positive");
	}
}

Network compose(const Network& first, const Network& second) {
	if (first.output_count() != second.input_count()) {
		throw std::invalid_argument("compose: width mismatch");
	}
	if (first.memory() != second.memory()) {
		throw std::invalid_argument("compose: memory mode mismatch");
	}
	std::vector<SparseLayer> layers = first.layers();
	layers.insert(layers.end(), second.layers().begin(), second.layers().end());
	return Network(std::move(layers), first.memory());
}

Network parallel(const Network& a, const Network& b) {
	if (a.depth() != b.depth()) {
		throw std::invalid_argument("parallel: depth mismatch");
	}
	if (a.memory() != b.memory()) {
		throw std::invalid_argument("parallel: memory mode mismatch");
	}
	std::vector<SparseLayer> layers;
	for (std::size_t i = 0; i < a.depth(); ++i) {
		const auto& la = a.layers()[i];
		const auto& lb = b.layers()[i];
		std::vector<LayerEntry> entries = la.entries();
		for (const auto& e : lb.entries()) {
			entries.push_back({e.out + la.rows(), e.in + la.cols(), e.weight});
		}
		layers.emplace_back(la.rows() + lb.rows(), la.cols() + lb.cols(),
		                    std::move(entries));
	}
	return Network(std::move(layers), a.memory());
}

Network pad_with_skip(const Network& net, std::size_t extra) {
	std::vector<SparseLayer> layers = net.layers();
	const std::size_t n = net.output_count();
	for (std::size_t e = 0; e < extra; ++e) {
		std::vector<LayerEntry> entries;
		for (std::size_t i = 0; i < n; ++i) {
			entries.push_back({i, i, Rat(2)});
		}
		layers.emplace_back(n, n, std::move(entries));
	}
	return Network(std::move(layers), net.memory());
}

NetworkStats stats(const Network& net) {
	NetworkStats st;
	st.depth = net.depth();
	st.widths.push_back(net.input_count());
	for (const auto& l : net.layers()) {
		st.widths.push_back(l.rows());
	}
	for (auto w : st.widths) st.total_neurons += w;
	for (std::size_t li = 0; li < net.depth(); ++li) {
		const auto& l = net.layers()[li];
		std::vector<std::size_t> outdeg(l.cols(), 0);
		for (const auto& e : l.entries()) {
			++st.nonzero_weights;
			if (e.weight < 0) ++st.negative_weights;
			++outdeg[e.in];
		}
		for (auto d : outdeg) st.max_out_degree = std::max(st.max_out_degree, d);
	}
	return st;
}

std::string memory_to_string(const MemoryMode& m) {
	if (is_zero(m)) return "zero";
	if (is_infinite(m)) return "infinite";
	return "h=" + rat_to_string(std::get<MemoryFinite>(m).h);
}

MemoryMode memory_from_string(const std::string& s) {
	if (s == "zero") return MemoryZero{};
	if (s == "infinite" || s == "inf") return MemoryInfinite{};
	std::string body = s;
	if (body.rfind("h=", 0) == 0) body = body.substr(2);
	Rat h = parse_rat(body);
	if (h <= 0) throw std::invalid_argument("finite memory must be positive");
	return MemoryFinite{h};
}

namespace {

json memory_to_json(const MemoryMode& m) {
	if (is_zero(m)) return "zero";
	if (is_infinite(m)) return "infinite";
	return json{{"finite", rat_to_string(std::get<MemoryFinite>(m).h)}};
}

MemoryMode memory_from_json(const json& j) {
	if (j.is_string()) {
		const std::string s = j.get<std::string>();
		if (s == "zero") return MemoryZero{};
		if (s == "infinite") return MemoryInfinite{};
		throw std::invalid_argument("unknown memory mode: " + s);
	}
	if (j.is_object() && j.contains("finite")) {
		Rat h = parse_rat(j.at("finite").get<std::string>());
		if (h <= 0) throw std::invalid_argument("finite memory must be positive");
		return MemoryFinite{h};
	}
	throw std::invalid_argument("malformed memory mode");
}

}  // namespace

std::string serialize(const Network& net, const std::string& meta_json,
                      const std::string& report_json) {
	json doc;
	doc["memory"] = memory_to_json(net.memory());
	doc["layers"] = json::array();
	for (const auto& l : net.layers()) {
		json jl;
		jl["rows"] = l.rows();
		jl["cols"] = l.cols();
		jl["entries"] = json::array();
		for (const auto& e : l.entries()) {
			// 1-based indices in the file format
			jl["entries"].push_back(
			    json::array({e.out + 1, e.in + 1, rat_to_string(e.weight)}));
		}
		doc["layers"].push_back(std::move(jl));
	}
	doc["meta"] = json::parse(meta_json);
	if (!report_json.empty()) {
		doc["report"] = json::parse(report_json);
	}
	return doc.dump(2);
}

Network deserialize(const std::string& bytes) {
	json doc;
	try {
		doc = json::parse(bytes);
	} catch (const json::parse_error& e) {
		throw std::invalid_argument(std::string("network parse error: ") +
		                            e.what());
	}
	MemoryMode memory = memory_from_json(doc.at("memory"));
	std::vector<SparseLayer> layers;
	for (const auto& jl : doc.at("layers")) {
		std::vector<LayerEntry> entries;
		for (const auto& je : jl.at("entries")) {
			const std::size_t out = je.at(0).get<std::size_t>();
			const std::size_t in = je.at(1).get<std::size_t>();
			if (out == 0 || in == 0) {
				throw std::invalid_argument("entry indices are 1-based");
			}
			entries.push_back(
			    {out - 1, in - 1, parse_rat(je.at(2).get<std::string>())});
		}
		layers.emplace_back(jl.at("rows").get<std::size_t>(),
		                    jl.at("cols").get<std::size_t>(), std::move(entries));
	}
	return Network(std::move(layers), memory);
}

}  // namespace snn
