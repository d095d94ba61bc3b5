#include <snncore/rnn_bridge.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace snn {

std::vector<std::vector<Rat>> StateSpaceBlock::wp_matrix() const {
	std::vector<std::vector<Rat>> wp;
	for (int half = 0; half < 2; ++half) {
		for (const auto& row : weights) wp.push_back(row);
	}
	return wp;
}

std::vector<std::vector<double>> StateSpaceBlock::v_matrix() const {
	std::vector<std::vector<double>> v(
	    2 * p_out, std::vector<double>(2 * p_out, 0.0));
	for (std::size_t i = 0; i < 2 * p_out; ++i) {
		v[i][p_out + (i % p_out)] = decay;
	}
	return v;
}

std::vector<std::vector<double>> StateSpaceBlock::u_matrix() const {
	std::vector<std::vector<double>> u(p_out,
	                                   std::vector<double>(2 * p_out, 0.0));
	for (std::size_t i = 0; i < p_out; ++i) u[i][i] = 1.0;
	return u;
}

double grid_decay(const MemoryMode& memory, const Rat& delta) {
	if (is_infinite(memory)) return 1.0;
	if (is_zero(memory)) return 0.0;
	return std::exp(-rat_to_double(delta / std::get<MemoryFinite>(memory).h));
}

StateSpaceNet snn_to_rnn(const Network& net, const Rat& delta) {
	if (delta <= 0) {
		throw std::invalid_argument("grid spacing must be positive");
	}
	StateSpaceNet rnn;
	rnn.delta = delta;
	const double decay = grid_decay(net.memory(), delta);
	for (const auto& layer : net.layers()) {
		StateSpaceBlock block;
		block.p_in = layer.cols();
		block.p_out = layer.rows();
		block.decay = decay;
		block.weights.assign(layer.rows(),
		                     std::vector<Rat>(layer.cols(), Rat(0)));
		for (const auto& e : layer.entries()) {
			block.weights[e.out][e.in] = e.weight;
		}
		rnn.blocks.push_back(std::move(block));
	}
	return rnn;
}

namespace {

// Core update shared by both simulation entry points. Bit-compatible with
// the float grid path of the event simulator: the incoming sum accumulates
// in layer-entry order, then the decayed carry is added on the left.
void run_rnn(const StateSpaceNet& rnn, const BinaryStream& input,
             BinaryStream* out,
             std::vector<std::vector<std::vector<double>>>* states) {
	if (rnn.blocks.empty() ||
	    input.width != rnn.blocks.front().p_in) {
		throw std::invalid_argument("stream width must match the first block");
	}
	const std::size_t steps = input.steps.size();
	if (states) states->assign(steps, {});
	std::vector<std::vector<std::uint8_t>> current = input.steps;
	std::vector<std::vector<std::uint8_t>> next(steps);
	// Iterate layer-major so each block consumes the full spike stream of
	// the previous one; feedforward nets make this equivalent to time-major.
	for (std::size_t bi = 0; bi < rnn.blocks.size(); ++bi) {
		const auto& block = rnn.blocks[bi];
		std::vector<double> potential(block.p_out, 0.0);
		std::vector<bool> over(block.p_out, false);
		for (std::size_t t = 0; t < steps; ++t) {
			if (current[t].size() != block.p_in) {
				throw std::invalid_argument("stream width mismatch");
			}
			std::vector<std::uint8_t> bits(block.p_out, 0);
			std::vector<double> state(2 * block.p_out, 0.0);
			for (std::size_t o = 0; o < block.p_out; ++o) {
				double c = 0.0;
				for (std::size_t i = 0; i < block.p_in; ++i) {
					if (current[t][i] && block.weights[o][i] != 0) {
						c += rat_to_double(block.weights[o][i]);
					}
				}
				const double base =
				    over[o] ? 0.0 : potential[o] * block.decay;
				double p = base + c;
				if (p < 0) p = 0;
				potential[o] = p;
				over[o] = p > 1;
				bits[o] = over[o] ? 1 : 0;
				state[o] = bits[o];
				state[block.p_out + o] = (p > 1 || p < 0) ? 0.0 : p;
			}
			if (states) (*states)[t].push_back(std::move(state));
			next[t] = std::move(bits);
		}
		current = next;
		next.assign(steps, {});
	}
	if (out) {
		out->width = rnn.blocks.back().p_out;
		out->delta = input.delta;
		out->steps = std::move(current);
	}
}

}  // namespace

BinaryStream simulate_rnn(const StateSpaceNet& rnn, const BinaryStream& input) {
	BinaryStream out;
	run_rnn(rnn, input, &out, nullptr);
	return out;
}

std::vector<std::vector<std::vector<double>>> simulate_rnn_states(
    const StateSpaceNet& rnn, const BinaryStream& input) {
	std::vector<std::vector<std::vector<double>>> states;
	run_rnn(rnn, input, nullptr, &states);
	return states;
}

BinaryStream encode_grid(const std::vector<SpikeTrain>& trains,
                         const Rat& delta, std::size_t steps) {
	BinaryStream s;
	s.width = trains.size();
	s.delta = delta;
	s.steps.assign(steps, std::vector<std::uint8_t>(trains.size(), 0));
	for (std::size_t j = 0; j < trains.size(); ++j) {
		for (const auto& t : trains[j].times()) {
			const Rat q = t / delta;
			if (denominator(q) != 1 || q < 1 || q > Rat((long)steps)) {
				throw std::invalid_argument(
				    "spike time " + rat_to_string(t) +
				    " is not a positive grid multiple within the horizon");
			}
			s.steps[static_cast<std::size_t>(
			    numerator(q).convert_to<long>()) - 1][j] = 1;
		}
	}
	return s;
}

std::vector<SpikeTrain> decode_grid(const BinaryStream& stream) {
	std::vector<std::vector<Time>> times(stream.width);
	for (std::size_t t = 0; t < stream.steps.size(); ++t) {
		for (std::size_t j = 0; j < stream.width; ++j) {
			if (stream.steps[t][j]) {
				times[j].push_back(stream.delta * Rat((long)(t + 1)));
			}
		}
	}
	std::vector<SpikeTrain> trains;
	for (auto& v : times) trains.emplace_back(std::move(v));
	return trains;
}

std::string serialize_rnn(const StateSpaceNet& rnn) {
	nlohmann::json j;
	j["format"] = "state-space-net";
	j["delta"] = rat_to_string(rnn.delta);
	j["blocks"] = nlohmann::json::array();
	for (const auto& b : rnn.blocks) {
		nlohmann::json jb;
		jb["p_in"] = b.p_in;
		jb["p_out"] = b.p_out;
		jb["decay"] = b.decay;
		jb["weights"] = nlohmann::json::array();
		for (const auto& row : b.weights) {
			nlohmann::json jr = nlohmann::json::array();
			for (const auto& w : row) jr.push_back(rat_to_string(w));
			jb["weights"].push_back(std::move(jr));
		}
		j["blocks"].push_back(std::move(jb));
	}
	return j.dump(2);
}

StateSpaceNet deserialize_rnn(const std::string& text) {
	nlohmann::json j = nlohmann::json::parse(text);
	if (j.value("format", "") != "state-space-net") {
		throw std::invalid_argument("not a state-space net file");
	}
	StateSpaceNet rnn;
	rnn.delta = parse_rat(j.at("delta").get<std::string>());
	for (const auto& jb : j.at("blocks")) {
		StateSpaceBlock b;
		b.p_in = jb.at("p_in").get<std::size_t>();
		b.p_out = jb.at("p_out").get<std::size_t>();
		b.decay = jb.at("decay").get<double>();
		for (const auto& jr : jb.at("weights")) {
			std::vector<Rat> row;
			for (const auto& w : jr) {
				row.push_back(parse_rat(w.get<std::string>()));
			}
			if (row.size() != b.p_in) {
				throw std::invalid_argument("weight row width mismatch");
			}
			b.weights.push_back(std::move(row));
		}
		if (b.weights.size() != b.p_out) {
			throw std::invalid_argument("weight row count mismatch");
		}
		rnn.blocks.push_back(std::move(b));
	}
	return rnn;
}

std::string stream_to_text(const BinaryStream& stream) {
	std::ostringstream out;
	for (std::size_t j = 0; j < stream.width; ++j) {
		for (std::size_t t = 0; t < stream.steps.size(); ++t) {
			out << (stream.steps[t][j] ? '1' : '0');
		}
		out << '\n';
	}
	return out.str();
}

BinaryStream stream_from_text(const std::string& text, const Rat& delta) {
	BinaryStream s;
	s.delta = delta;
	std::istringstream in(text);
	std::string line;
	std::vector<std::string> lines;
	while (std::getline(in, line)) {
		if (!line.empty() && line.back() == '\r') line.pop_back();
		lines.push_back(line);
	}
	while (!lines.empty() && lines.back().empty()) lines.pop_back();
	s.width = lines.size();
	std::size_t steps = 0;
	for (const auto& l : lines) steps = std::max(steps, l.size());
	s.steps.assign(steps, std::vector<std::uint8_t>(s.width, 0));
	for (std::size_t j = 0; j < lines.size(); ++j) {
		for (std::size_t t = 0; t < lines[j].size(); ++t) {
			if (lines[j][t] == '1') {
				s.steps[t][j] = 1;
			} else if (lines[j][t] != '0') {
				throw std::invalid_argument("streams must be 0/1 lines");
			}
		}
	}
	return s;
}

}  // namespace snn
