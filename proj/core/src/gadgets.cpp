#include <snncore/gadgets.hpp>

#include <snncore/builder.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace snn {

namespace {

const MemoryMode kDefaultMemory = MemoryInfinite{};

Network from_layers(std::vector<SparseLayer> layers) {
	return Network(std::move(layers), kDefaultMemory);
}

bool is_pow2(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

std::size_t ceil_log2(std::size_t m) {
	std::size_t q = 0, v = 1;
	while (v < m) {
		v *= 2;
		++q;
	}
	return q;
}

// Smallest power of four >= m, returned as (power, exponent).
std::pair<std::size_t, std::size_t> ceil_pow4(std::size_t m) {
	std::size_t p = 0, v = 1;
	while (v < m) {
		v *= 4;
		++p;
	}
	return {v, p};
}

}  // namespace

Network skip_net() {
	return from_layers({SparseLayer(1, 1, {{0, 0, Rat(2)}})});
}

Network or_net(std::size_t d) {
	if (d == 0) throw std::invalid_argument("OR needs at least one input");
	std::vector<LayerEntry> e;
	for (std::size_t i = 0; i < d; ++i) e.push_back({0, i, Rat(2)});
	return from_layers({SparseLayer(1, d, std::move(e))});
}

Network and_net(std::size_t d) {
	if (d == 0) throw std::invalid_argument("AND needs at least one input");
	if (d == 1) return skip_net();
	std::vector<LayerEntry> l1{{0, 0, Rat(2)}, {1, 0, Rat(2 * (long)d - 2)}};
	for (std::size_t i = 1; i < d; ++i) l1.push_back({1, i, Rat(-2)});
	std::vector<LayerEntry> l2{{0, 0, Rat(2)}, {0, 1, Rat(-2)}};
	return from_layers(
	    {SparseLayer(2, d, std::move(l1)), SparseLayer(1, 2, std::move(l2))});
}

Network minus_net() {
	return from_layers({SparseLayer(1, 2, {{0, 0, Rat(2)}, {0, 1, Rat(-2)}})});
}

Network xor_net() {
	std::vector<LayerEntry> l1{{0, 0, Rat(2)},
	                           {0, 1, Rat(-2)},
	                           {1, 1, Rat(2)},
	                           {1, 0, Rat(-2)}};
	std::vector<LayerEntry> l2{{0, 0, Rat(2)}, {0, 1, Rat(2)}};
	return from_layers(
	    {SparseLayer(2, 2, std::move(l1)), SparseLayer(1, 2, std::move(l2))});
}

Network is_equal_net() {
	CircuitBuilder cb(3);
	auto in = cb.inputs();
	auto m1 = cb.add(minus_net(), {in[2], in[0]});
	auto m2 = cb.add(minus_net(), {in[2], in[1]});
	auto both_absent = cb.add(and_net(2), {m1[0], m2[0]});
	auto all_present = cb.add(and_net(3), {in[0], in[1], in[2]});
	auto out = cb.add_neuron({both_absent[0], all_present[0]}, {Rat(2), Rat(2)});
	return cb.build({out}, kDefaultMemory);
}

Network translate_net() {
	return from_layers(
	    {SparseLayer(1, 3, {{0, 0, Rat(1)}, {0, 1, Rat(1)}, {0, 2, Rat(-1)}})});
}

Network odd_even_net() {
	std::vector<LayerEntry> l1{{0, 0, Rat(2)}, {1, 0, Rat(1)}};
	std::vector<LayerEntry> l2{{0, 0, Rat(2)}, {0, 1, Rat(-2)}, {1, 1, Rat(2)}};
	return from_layers(
	    {SparseLayer(2, 1, std::move(l1)), SparseLayer(2, 2, std::move(l2))});
}

Network odd_net() {
	std::vector<LayerEntry> l1{{0, 0, Rat(2)}, {1, 0, Rat(1)}};
	std::vector<LayerEntry> l2{{0, 0, Rat(2)}, {0, 1, Rat(-2)}};
	return from_layers(
	    {SparseLayer(2, 1, std::move(l1)), SparseLayer(1, 2, std::move(l2))});
}

Network even_net() {
	return from_layers({SparseLayer(1, 1, {{0, 0, Rat(1)}}),
	                    SparseLayer(1, 1, {{0, 0, Rat(2)}})});
}

Network clock_net(std::size_t m) {
	if (!is_pow2(m)) {
		throw std::invalid_argument("CLOCK period must be a power of two");
	}
	if (m == 1) return skip_net();
	std::vector<SparseLayer> layers;
	for (std::size_t k = 1; k < m; k *= 2) {
		std::vector<LayerEntry> la;
		for (std::size_t i = 0; i < k; ++i) {
			la.push_back({2 * i, i, Rat(2)});
			la.push_back({2 * i + 1, i, Rat(1)});
		}
		layers.emplace_back(2 * k, k, std::move(la));
		std::vector<LayerEntry> lb;
		for (std::size_t i = 0; i < k; ++i) {
			lb.push_back({i, 2 * i, Rat(2)});
			lb.push_back({i, 2 * i + 1, Rat(-2)});
			lb.push_back({k + i, 2 * i + 1, Rat(2)});
		}
		layers.emplace_back(2 * k, 2 * k, std::move(lb));
	}
	return from_layers(std::move(layers));
}

namespace {

Network spike1_net() {
	std::vector<SparseLayer> layers = clock_net(4).layers();
	std::vector<LayerEntry> l5;
	for (std::size_t i = 0; i < 4; ++i) l5.push_back({0, i, Rat(2)});
	for (std::size_t i = 0; i < 4; ++i) {
		l5.push_back({1 + i, i, Rat(1)});
		l5.push_back({1 + i, (i + 1) % 4, Rat(1)});
		l5.push_back({1 + i, (i + 2) % 4, Rat(-1)});
	}
	layers.emplace_back(5, 4, std::move(l5));
	std::vector<LayerEntry> l6{{0, 0, Rat(2)}};
	for (std::size_t i = 0; i < 4; ++i) l6.push_back({0, 1 + i, Rat(-2)});
	layers.emplace_back(1, 5, std::move(l6));
	return from_layers(std::move(layers));
}

// History patterns accepted by the one-spike window counter: the dominating
// input fires and either fires together with the counted input or the
// previous joint event carried a counted spike without a dominating one.
// Column bits: 1 = counted input, 2 = dominating input.
std::set<HistoryPattern> ceil1_patterns() {
	std::set<HistoryPattern> acc;
	acc.insert({3});
	for (std::uint32_t p : {1u, 2u, 3u}) acc.insert({p, 3u});
	acc.insert({1u, 2u});
	return acc;
}

// Head of the m-spike window counter on inputs (T1, T2, T3, T4):
// accept the current event when T4 fires and either the previous event had
// T1, or it had T2 and the current event also has T3.
std::set<HistoryPattern> window_counter_head_patterns() {
	std::set<HistoryPattern> acc;
	for (std::uint32_t p = 1; p < 16; ++p) {
		for (std::uint32_t c = 1; c < 16; ++c) {
			const bool cur_t4 = (c & 8u) != 0;
			const bool cur_t3 = (c & 4u) != 0;
			const bool prev_t1 = (p & 1u) != 0;
			const bool prev_t2 = (p & 2u) != 0;
			if (cur_t4 && (prev_t1 || (prev_t2 && !prev_t1 && cur_t3))) {
				acc.insert({p, c});
			}
		}
	}
	return acc;
}

}  // namespace

Network boolean_head_net(const std::vector<std::uint32_t>& accepted,
                         std::size_t d) {
	if (d == 0 || d > 26) {
		throw std::invalid_argument("Boolean head arity out of range");
	}
	std::vector<std::uint32_t> rows = accepted;
	std::sort(rows.begin(), rows.end());
	rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
	for (auto y : rows) {
		if (y == 0 || y >= (1u << d)) {
			throw std::invalid_argument("accepted mask out of range");
		}
	}
	std::vector<LayerEntry> l1;
	for (std::size_t i = 0; i < d; ++i) {
		l1.push_back({i, i, Rat(2)});
		l1.push_back({d, i, Rat(2)});
	}
	std::vector<LayerEntry> l2;
	for (std::size_t i = 0; i < d; ++i) {
		l2.push_back({i, i, Rat(2)});
		l2.push_back({d + i, d, Rat(2)});
		l2.push_back({d + i, i, Rat(-2)});
	}
	l2.push_back({2 * d, d, Rat(2)});
	const std::size_t nrows = std::max<std::size_t>(rows.size(), 1);
	std::vector<LayerEntry> l3;
	for (std::size_t k = 0; k < rows.size(); ++k) {
		for (std::size_t i = 0; i < d; ++i) {
			if (rows[k] & (1u << i)) {
				l3.push_back({k, i, Rat(2)});
			} else {
				l3.push_back({k, d + i, Rat(2)});
			}
		}
		if (d > 1) l3.push_back({k, 2 * d, Rat(2 - 2 * (long)d)});
	}
	std::vector<LayerEntry> l4;
	for (std::size_t k = 0; k < rows.size(); ++k) l4.push_back({0, k, Rat(2)});
	return from_layers({SparseLayer(d + 1, d, std::move(l1)),
	                    SparseLayer(2 * d + 1, d + 1, std::move(l2)),
	                    SparseLayer(nrows, 2 * d + 1, std::move(l3)),
	                    SparseLayer(1, nrows, std::move(l4))});
}

Network memory_net(std::size_t d, std::size_t m) {
	if (d == 0 || m == 0) {
		throw std::invalid_argument("memory module needs d, m >= 1");
	}
	if (m == 1) {
		std::vector<LayerEntry> e;
		for (std::size_t i = 0; i < d; ++i) e.push_back({i, i, Rat(2)});
		return from_layers({SparseLayer(d, d, std::move(e))});
	}
	const std::size_t mbar = std::size_t{1} << (ceil_log2(m) + 2);
	CircuitBuilder cb(d);
	auto in = cb.inputs();
	std::vector<Rat> twos(d, Rat(2));
	auto un = cb.add_neuron(in, twos);
	auto clk = cb.add(clock_net(mbar), {un});
	std::vector<std::vector<CircuitBuilder::Wire>> gated(d);
	for (std::size_t i = 0; i < d; ++i) {
		for (std::size_t l = 0; l < mbar; ++l) {
			gated[i].push_back(cb.add(and_net(2), {in[i], clk[l]})[0]);
		}
	}
	std::vector<CircuitBuilder::Wire> outputs;
	for (std::size_t i = 0; i < d; ++i) {
		for (std::size_t j = 1; j <= m; ++j) {
			std::vector<CircuitBuilder::Wire> shifted;
			for (std::size_t l = 0; l < mbar; ++l) {
				auto w = cb.add_neuron({gated[i][l], clk[(l + j - 1) % mbar],
				                        clk[(l + j) % mbar]},
				                       {Rat(1), Rat(1), Rat(-1)});
				shifted.push_back(w);
			}
			outputs.push_back(
			    cb.add_neuron(shifted, std::vector<Rat>(mbar, Rat(2))));
		}
	}
	return cb.build(outputs, kDefaultMemory);
}

Network markovian_net(const MarkovianSpec& spec) {
	const std::size_t d = spec.d, m = spec.m;
	if (d == 0 || m == 0 || d * m > 26) {
		throw std::invalid_argument("Markovian spec dimensions out of range");
	}
	std::vector<std::uint32_t> accepted;
	for (const auto& pat : spec.accepted) {
		if (pat.empty() || pat.size() > m) {
			throw std::invalid_argument("history pattern length out of range");
		}
		std::uint32_t y = 0;
		const std::size_t len = pat.size();
		for (std::size_t j = 1; j <= len; ++j) {
			const std::uint32_t col = pat[len - j];
			if (col == 0 || col >= (1u << d)) {
				throw std::invalid_argument("history pattern column out of range");
			}
			for (std::size_t i = 1; i <= d; ++i) {
				if (col & (1u << (i - 1))) {
					y |= 1u << ((i - 1) * m + (j - 1));
				}
			}
		}
		accepted.push_back(y);
	}
	CircuitBuilder cb(d);
	auto mem = cb.add(memory_net(d, m), cb.inputs());
	auto head = cb.add(boolean_head_net(accepted, d * m), mem);
	return cb.build({head[0]}, kDefaultMemory);
}

Network spike_net(std::size_t m) {
	if (m == 0) throw std::invalid_argument("SPIKE needs m >= 1");
	if (m == 1) return spike1_net();
	return single_input_net(false, m, {m});
}

Network represent_net(const std::vector<bool>& r) {
	if (r.empty()) throw std::invalid_argument("REPRESENT needs a bit vector");
	std::set<std::size_t> out;
	for (std::size_t k = 0; k < r.size(); ++k) {
		if (r[k]) out.insert(k + 1);
	}
	return single_input_net(false, r.size(), out);
}

Network ceil_net(std::size_t m) {
	if (m == 0) throw std::invalid_argument("CEIL needs m >= 1");
	if (m == 1) {
		return markovian_net(MarkovianSpec{2, 2, ceil1_patterns()});
	}
	CircuitBuilder cb(2);
	auto in = cb.inputs();
	auto f1 = cb.add(wrap_with_reset(spike_net(m)), {in[0], in[1]});
	auto f2 = cb.add(wrap_with_reset(spike_net(m - 1)), {in[0], in[1]});
	auto f3 = cb.add(and_net(2), {in[0], in[1]});
	auto head =
	    cb.add(markovian_net(MarkovianSpec{4, 2, window_counter_head_patterns()}),
	           {f1[0], f2[0], f3[0], in[1]});
	return cb.build({head[0]}, kDefaultMemory);
}

Network is_approx_equal_net(std::size_t m) {
	if (m == 0) throw std::invalid_argument("IS_APPROX_EQUAL needs m >= 1");
	CircuitBuilder cb(3);
	auto in = cb.inputs();
	std::vector<CircuitBuilder::Wire> agree;
	for (std::size_t k = 1; k <= m; ++k) {
		auto ik = cb.add(ceil_net(k), {in[0], in[2]});
		auto jk = cb.add(ceil_net(k), {in[1], in[2]});
		agree.push_back(cb.add(is_equal_net(), {ik[0], jk[0], in[2]})[0]);
	}
	auto out = cb.add(and_net(m), agree);
	return cb.build({out[0]}, kDefaultMemory);
}

Network delay_net(std::size_t m) {
	if (m == 0) throw std::invalid_argument("DELAY needs m >= 1");
	CircuitBuilder cb(2);
	auto in = cb.inputs();
	if (m == 1) {
		auto o = cb.add(skip_net(), {in[0]});
		return cb.build({o[0]}, kDefaultMemory);
	}
	const std::size_t mbar = std::size_t{1} << (ceil_log2(m) + 2);
	auto un = cb.add_neuron({in[0], in[1]}, {Rat(2), Rat(2)});
	auto clk = cb.add(clock_net(mbar), {un});
	std::vector<CircuitBuilder::Wire> shifted;
	for (std::size_t i = 0; i < mbar; ++i) {
		auto gate = cb.add(and_net(2), {in[0], clk[i]});
		shifted.push_back(cb.add_neuron(
		    {gate[0], clk[(i + m - 1) % mbar], clk[(i + m) % mbar]},
		    {Rat(1), Rat(1), Rat(-1)}));
	}
	auto out = cb.add_neuron(shifted, std::vector<Rat>(mbar, Rat(2)));
	return cb.build({out}, kDefaultMemory);
}

Network repeat_net(std::size_t m) {
	if (m == 0) throw std::invalid_argument("REPEAT needs m >= 1");
	CircuitBuilder cb(2);
	auto in = cb.inputs();
	std::vector<CircuitBuilder::Wire> delayed;
	for (std::size_t k = 1; k <= m + 1; ++k) {
		delayed.push_back(cb.add(delay_net(k), {in[0], in[1]})[0]);
	}
	auto out = cb.add_neuron(delayed, std::vector<Rat>(m + 1, Rat(2)));
	return cb.build({out}, kDefaultMemory);
}

Network if_then_net(const std::vector<bool>& r) {
	if (r.empty()) throw std::invalid_argument("IF_THEN needs a bit vector");
	const std::size_t m = r.size();
	CircuitBuilder cb(2);
	auto in = cb.inputs();
	auto gated = cb.add(ceil_net(1), {in[0], in[1]});
	auto ref = cb.add(represent_net(r), {in[1]});
	auto frame = cb.add(represent_net(std::vector<bool>(m, true)), {in[1]});
	auto eq = cb.add(is_equal_net(), {gated[0], ref[0], frame[0]});
	auto out = cb.add(spike_net(m), {eq[0]});
	return cb.build({out[0]}, kDefaultMemory);
}

Network single_input_net(bool periodic, std::size_t m,
                         const std::set<std::size_t>& out,
                         std::vector<std::string>* trace) {
	if (m == 0) throw std::invalid_argument("spec length must be positive");
	for (auto k : out) {
		if (k == 0 || k > m) {
			throw std::invalid_argument("accepted position out of range");
		}
	}
	auto note = [trace](const char* s) {
		if (trace) trace->emplace_back(s);
	};
	const auto [mbar, p] = ceil_pow4(m);
	if (periodic && mbar != m) {
		throw std::invalid_argument(
		    "unsupported-period: periodic specs need a power-of-four period; "
		    "re-express the function with period 4^ceil(log4(m))");
	}
	if (periodic && m == 1) {
		note("output");
		std::vector<LayerEntry> e;
		if (out.count(1)) e.push_back({0, 0, Rat(2)});
		return from_layers({SparseLayer(1, 1, std::move(e))});
	}
	const std::size_t sbar = std::size_t{1} << p;  // sqrt(mbar)
	CircuitBuilder cb(1);
	auto input = cb.inputs()[0];
	note("coarse-split");
	auto coarse = input;
	for (std::size_t a = 0; a < p; ++a) {
		coarse = cb.add(odd_net(), {coarse})[0];
	}
	note("fine-split");
	auto leaves = cb.add(clock_net(sbar), {coarse});
	auto delays = cb.add(clock_net(sbar), {input});
	if (!periodic) {
		note("finite-block");
		for (auto& leaf : leaves) {
			leaf = cb.add(spike1_net(), {leaf})[0];
		}
	} else {
		note("periodic-block");
	}
	note("representation-block");
	std::vector<CircuitBuilder::Wire> rep(sbar);
	for (std::size_t j = 1; j <= sbar; ++j) {
		std::vector<Rat> w(sbar, Rat(0));
		for (std::size_t i = 1; i <= sbar; ++i) {
			if (out.count((i - 1) * sbar + j)) w[i - 1] = 2;
		}
		rep[j - 1] = cb.add_neuron(leaves, w);
	}
	note("delay-block");
	std::vector<CircuitBuilder::Wire> placed(sbar);
	for (std::size_t j = 0; j < sbar; ++j) {
		placed[j] = cb.add(ceil_net(1), {rep[j], delays[j]})[0];
	}
	note("output");
	auto o = cb.add_neuron(placed, std::vector<Rat>(sbar, Rat(2)));
	return cb.build({o}, kDefaultMemory);
}

Network wrap_with_reset(const Network& net) {
	const auto& layers = net.layers();
	const std::size_t depth = layers.size();
	std::vector<SparseLayer> out;
	for (std::size_t l = 0; l < depth; ++l) {
		const auto& layer = layers[l];
		const std::size_t reset_col = layer.cols();
		std::vector<LayerEntry> entries = layer.entries();
		for (std::size_t o = 0; o < layer.rows(); ++o) {
			Rat sum = 0;
			for (const auto& e : layer.entries()) {
				if (e.out == o) sum += abs(e.weight);
			}
			entries.push_back({o, reset_col, -sum - 1});
		}
		const bool forward_reset = l + 1 < depth;
		if (forward_reset) entries.push_back({layer.rows(), reset_col, Rat(2)});
		out.emplace_back(layer.rows() + (forward_reset ? 1 : 0),
		                 layer.cols() + 1, std::move(entries));
	}
	return Network(std::move(out), net.memory());
}

namespace {

std::vector<std::string> indexed(const std::string& base, std::size_t n) {
	std::vector<std::string> v;
	for (std::size_t i = 1; i <= n; ++i) v.push_back(base + std::to_string(i));
	return v;
}

}  // namespace

Gadget build_primitive(const std::string& kind, std::size_t d) {
	Gadget g;
	g.kind = kind;
	g.d = d;
	if (kind == "SKIP") {
		g.net = skip_net();
		g.input_ports = {"I"};
		g.d = 1;
		g.stats_note = "1 layer, 1 weight";
	} else if (kind == "OR") {
		if (d < 2) throw std::invalid_argument("OR needs d >= 2");
		g.net = or_net(d);
		g.input_ports = indexed("I", d);
		g.stats_note = "1 layer, d weights";
	} else if (kind == "AND") {
		if (d < 2) throw std::invalid_argument("AND needs d >= 2");
		g.net = and_net(d);
		g.input_ports = indexed("I", d);
		g.stats_note = "2 layers, widths (d,2,1), d+3 weights";
	} else if (kind == "MINUS") {
		g.net = minus_net();
		g.input_ports = {"I", "J"};
		g.d = 2;
		g.stats_note = "1 layer, weights (2,-2)";
	} else if (kind == "XOR") {
		g.net = xor_net();
		g.input_ports = {"I", "J"};
		g.d = 2;
		g.stats_note = "2 layers, widths (2,2,1), 6 weights";
	} else if (kind == "IS_EQUAL") {
		g.net = is_equal_net();
		g.input_ports = {"I", "J", "D"};
		g.d = 3;
		g.stats_note = "4 layers, widths (3,4,3,2,1), 18 weights";
	} else if (kind == "TRANSLATE") {
		g.net = translate_net();
		g.input_ports = {"T", "S", "C"};
		g.d = 3;
		g.stats_note = "1 layer, weights (1,1,-1)";
	} else {
		throw std::invalid_argument("unknown primitive gadget: " + kind);
	}
	g.output_ports = {"O"};
	return g;
}

Gadget build_periodic(const std::string& kind, std::size_t m) {
	Gadget g;
	g.kind = kind;
	g.m = m;
	g.d = 1;
	g.input_ports = {"I"};
	if (kind == "ODD_EVEN") {
		g.net = odd_even_net();
		g.output_ports = {"ODD", "EVEN"};
		g.stats_note = "2 layers, widths (1,2,2), 5 weights";
	} else if (kind == "CLOCK") {
		g.net = clock_net(m);
		g.output_ports = indexed("O", m);
		g.stats_note = "2 log2(m) layers, 5(m-1) weights";
	} else {
		throw std::invalid_argument("unknown periodic gadget: " + kind);
	}
	return g;
}

Gadget build_finite(const std::string& kind, std::size_t m,
                    const std::vector<bool>& r) {
	Gadget g;
	g.kind = kind;
	g.m = m;
	g.d = 1;
	g.r = r;
	g.input_ports = {"I"};
	g.output_ports = {"O"};
	if (kind == "SPIKE") {
		g.net = spike_net(m);
		g.stats_note = "O(1+log m) layers, O(sqrt(m)) neurons and weights";
	} else if (kind == "REPRESENT") {
		if (r.size() != m) {
			throw std::invalid_argument("REPRESENT needs |r| = m");
		}
		g.net = represent_net(r);
		g.stats_note = "O(1+log m) layers, O(sqrt(m)+|r|) weights";
	} else {
		throw std::invalid_argument("unknown finite gadget: " + kind);
	}
	return g;
}

Gadget build_temporal(const std::string& kind, std::size_t m,
                      const std::vector<bool>& r) {
	Gadget g;
	g.kind = kind;
	g.m = m;
	g.r = r;
	g.output_ports = {"O"};
	if (kind == "CEIL") {
		g.net = ceil_net(m);
		g.input_ports = {"I", "D"};
		g.d = 2;
	} else if (kind == "IS_APPROX_EQUAL") {
		g.net = is_approx_equal_net(m);
		g.input_ports = {"I", "J", "D"};
		g.d = 3;
	} else if (kind == "DELAY") {
		g.net = delay_net(m);
		g.input_ports = {"I", "D"};
		g.d = 2;
	} else if (kind == "REPEAT") {
		g.net = repeat_net(m);
		g.input_ports = {"I", "D"};
		g.d = 2;
	} else if (kind == "IF_THEN") {
		if (r.size() != m) {
			throw std::invalid_argument("IF_THEN needs |r| = m");
		}
		g.net = if_then_net(r);
		g.input_ports = {"I", "D"};
		g.d = 2;
	} else {
		throw std::invalid_argument("unknown temporal gadget: " + kind);
	}
	return g;
}

Gadget build_memory_gadget(std::size_t d, std::size_t m) {
	Gadget g;
	g.kind = "MEMORY";
	g.m = m;
	g.d = d;
	g.net = memory_net(d, m);
	g.input_ports = indexed("I", d);
	for (std::size_t i = 1; i <= d; ++i) {
		for (std::size_t j = 1; j <= m; ++j) {
			g.output_ports.push_back("O_" + std::to_string(i) + "_" +
			                         std::to_string(j));
		}
	}
	g.stats_note = "O(1+log m) layers, O(d m^2) neurons and weights";
	return g;
}

std::vector<SpikeTrain> gadget_oracle_all(const Gadget& g,
                                          const std::vector<SpikeTrain>& in) {
	const std::string& k = g.kind;
	if (k == "SKIP") return {in.at(0)};
	if (k == "OR") return {or_oracle(in)};
	if (k == "AND") return {and_oracle(in)};
	if (k == "MINUS") return {minus_oracle(in.at(0), in.at(1))};
	if (k == "XOR") return {xor_oracle(in.at(0), in.at(1))};
	if (k == "IS_EQUAL") return {is_equal_oracle(in.at(0), in.at(1), in.at(2))};
	if (k == "TRANSLATE") {
		return {translate_oracle(in.at(0), in.at(1), in.at(2))};
	}
	if (k == "ODD_EVEN") return {odd_oracle(in.at(0)), even_oracle(in.at(0))};
	if (k == "CLOCK") {
		std::vector<SpikeTrain> out;
		for (std::size_t j = 1; j <= g.m; ++j) {
			out.push_back(clock_oracle(g.m, j, in.at(0)));
		}
		return out;
	}
	if (k == "SPIKE") return {spike_oracle(g.m, in.at(0))};
	if (k == "REPRESENT") return {represent_oracle(g.r, in.at(0))};
	if (k == "CEIL") return {ceil_oracle(g.m, in.at(0), in.at(1))};
	if (k == "IS_APPROX_EQUAL") {
		return {is_approx_equal_oracle(g.m, in.at(0), in.at(1), in.at(2))};
	}
	if (k == "DELAY") return {delay_oracle(g.m, in.at(0), in.at(1))};
	if (k == "REPEAT") return {repeat_oracle(g.m, in.at(0), in.at(1))};
	if (k == "IF_THEN") return {if_then_oracle(g.r, in.at(0), in.at(1))};
	if (k == "MEMORY") return memory_oracle(g.d, g.m, in);
	throw std::invalid_argument("no oracle for gadget kind: " + k);
}

SpikeTrain gadget_oracle(const Gadget& g, const std::vector<SpikeTrain>& in) {
	auto all = gadget_oracle_all(g, in);
	if (all.size() != 1) {
		throw std::invalid_argument("gadget has multiple outputs");
	}
	return all.front();
}

std::string gadget_catalog_json() {
	using nlohmann::json;
	json doc = json::array();
	auto describe = [&doc](const Gadget& g, const json& params) {
		const NetworkStats st = stats(g.net);
		json item;
		item["kind"] = g.kind;
		item["params"] = params;
		item["input_ports"] = g.input_ports;
		item["output_ports"] = g.output_ports;
		item["stats_formula"] = g.stats_note;
		item["example_stats"] = {{"depth", st.depth},
		                         {"widths", st.widths},
		                         {"neurons", st.total_neurons},
		                         {"weights", st.nonzero_weights},
		                         {"negative_weights", st.negative_weights}};
		doc.push_back(std::move(item));
	};
	describe(build_primitive("SKIP"), json::object());
	for (const char* k : {"OR", "AND"}) {
		describe(build_primitive(k, 3), {{"d", 3}});
	}
	for (const char* k : {"MINUS", "XOR", "IS_EQUAL", "TRANSLATE"}) {
		describe(build_primitive(k), json::object());
	}
	describe(build_periodic("ODD_EVEN"), json::object());
	describe(build_periodic("CLOCK", 4), {{"m", 4}});
	describe(build_finite("SPIKE", 1), {{"m", 1}});
	describe(build_finite("REPRESENT", 3, {true, false, true}),
	         {{"m", 3}, {"r", "101"}});
	describe(build_temporal("CEIL", 1), {{"m", 1}});
	describe(build_temporal("DELAY", 2), {{"m", 2}});
	describe(build_temporal("REPEAT", 1), {{"m", 1}});
	describe(build_temporal("IS_APPROX_EQUAL", 1), {{"m", 1}});
	describe(build_temporal("IF_THEN", 2, {true, false}),
	         {{"m", 2}, {"r", "10"}});
	describe(build_memory_gadget(2, 2), {{"d", 2}, {"m", 2}});
	return doc.dump(2);
}

}  // namespace snn
