#include <snncore/simulator.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>

namespace snn {

DecayModel decay_model(const MemoryMode& memory) {
	DecayModel m;
	if (is_infinite(memory)) {
		m.exact = true;
		m.unit = true;
		m.factor = [](const Time&, const Time&) { return Rat(1); };
	} else if (is_zero(memory)) {
		m.exact = true;
		m.factor = [](const Time& a, const Time& b) {
			return a == b ? Rat(1) : Rat(0);
		};
	} else {
		const double h = rat_to_double(std::get<MemoryFinite>(memory).h);
		m.exact = false;
		m.ffactor = [h](const Time& a, const Time& b) {
			return std::exp(-rat_to_double(b - a) / h);
		};
	}
	return m;
}

DecayModel profile_decay_model(std::function<Rat(const Time&)> phi) {
	DecayModel m;
	m.exact = true;
	m.factor = [phi = std::move(phi)](const Time& a, const Time& b) {
		return phi(b) / phi(a);
	};
	return m;
}

DecayModel power_decay_model(unsigned k) {
	return profile_decay_model([k](const Time& t) {
		Rat base = Rat(1) / (1 + t);
		Rat out = 1;
		for (unsigned i = 0; i < k; ++i) out *= base;
		return out;
	});
}

namespace {

std::vector<StreamEvent> merged_events(const std::vector<SpikeTrain>& inputs) {
	std::map<Time, std::vector<std::size_t>> at;
	for (std::size_t i = 0; i < inputs.size(); ++i) {
		for (const auto& t : inputs[i].times()) {
			at[t].push_back(i);
		}
	}
	std::vector<StreamEvent> events;
	events.reserve(at.size());
	for (auto& [t, active] : at) {
		StreamEvent e;
		e.label = t;
		e.active = std::move(active);
		events.push_back(std::move(e));
	}
	return events;
}

}  // namespace

DecayStream decay_stream(const std::vector<SpikeTrain>& inputs,
                         const DecayModel& model) {
	DecayStream s;
	s.input_count = inputs.size();
	s.exact = model.exact;
	s.events = merged_events(inputs);
	for (std::size_t k = 1; k < s.events.size(); ++k) {
		const Time& a = s.events[k - 1].label;
		const Time& b = s.events[k].label;
		if (model.exact) {
			s.events[k].factor = model.factor(a, b);
		} else {
			s.events[k].ffactor = model.ffactor(a, b);
		}
	}
	return s;
}

DecayStream decay_stream(const std::vector<SpikeTrain>& inputs,
                         const MemoryMode& memory) {
	return decay_stream(inputs, decay_model(memory));
}

DecayStream decay_stream_with_factors(const std::vector<SpikeTrain>& inputs,
                                      const std::vector<Rat>& factors) {
	DecayStream s;
	s.input_count = inputs.size();
	s.exact = true;
	s.events = merged_events(inputs);
	if (factors.size() != s.events.size()) {
		throw std::invalid_argument("need one decay factor per union event");
	}
	for (std::size_t k = 0; k < s.events.size(); ++k) {
		if (factors[k] < 0 || factors[k] > 1) {
			throw std::invalid_argument("decay factors must lie in [0,1]");
		}
		s.events[k].factor = factors[k];
	}
	return s;
}

std::pair<SpikeTrain, PotentialTrace> simulate_unit(
    const std::vector<Rat>& weights, const DecayStream& stream) {
	if (weights.size() != stream.input_count) {
		throw std::invalid_argument("weight count must match stream input count");
	}
	PotentialTrace trace;
	trace.exact = stream.exact;
	std::vector<Time> spikes;
	Rat p = 0;
	double fp = 0;
	bool prev_spiked_or_zeroed = false;  // tracks 1{P(prev) > 1}
	for (const auto& ev : stream.events) {
		TracePoint tp;
		tp.label = ev.label;
		if (stream.exact) {
			Rat c = 0;
			for (auto j : ev.active) c += weights[j];
			Rat base = prev_spiked_or_zeroed ? Rat(0) : p * ev.factor;
			p = base + c;
			if (p < 0) p = 0;
			tp.potential = p;
			tp.spiked = p > 1;
			prev_spiked_or_zeroed = tp.spiked;
		} else {
			double c = 0;
			for (auto j : ev.active) c += rat_to_double(weights[j]);
			double base = prev_spiked_or_zeroed ? 0.0 : fp * ev.ffactor;
			fp = base + c;
			if (fp < 0) fp = 0;
			tp.fpotential = fp;
			tp.spiked = fp > 1;
			prev_spiked_or_zeroed = tp.spiked;
		}
		if (tp.spiked) spikes.push_back(ev.label);
		trace.points.push_back(std::move(tp));
	}
	return {SpikeTrain(std::move(spikes)), std::move(trace)};
}

namespace {

std::vector<SpikeTrain> run_layers(
    const Network& net, const std::vector<SpikeTrain>& inputs,
    const DecayModel& model, std::vector<TraceRow>* trace_rows) {
	if (inputs.size() != net.input_count()) {
		throw std::invalid_argument("input count must match network arity");
	}
	std::vector<SpikeTrain> current = inputs;
	for (std::size_t li = 0; li < net.depth(); ++li) {
		const auto& layer = net.layers()[li];
		// One shared event stream per layer; each unit walks only the events
		// where one of its own inputs is active, computing decay over its own
		// gaps. Events with no active presynaptic input never spike and leave
		// the decayed potential unchanged, so skipping them is neutral.
		DecayStream full = decay_stream(current, model);
		// Event-by-input activity table so each unit probes only its own
		// incoming entries instead of scanning the layer-wide active lists.
		std::vector<char> act(full.events.size() * layer.cols(), 0);
		for (std::size_t e = 0; e < full.events.size(); ++e) {
			for (auto j : full.events[e].active) {
				act[e * layer.cols() + j] = 1;
			}
		}
		// Incoming entries bucketed by output neuron, weights predecoded for
		// the float path.
		std::vector<std::vector<std::pair<std::size_t, const Rat*>>> rows(
		    layer.rows());
		std::vector<std::vector<double>> frows(
		    model.exact ? 0 : layer.rows());
		for (const auto& e : layer.entries()) {
			rows[e.out].emplace_back(e.in, &e.weight);
			if (!model.exact) frows[e.out].push_back(rat_to_double(e.weight));
		}
		// Pairwise gap factors shared by all units of the layer, so the float
		// path pays one factor evaluation per event pair instead of one per
		// neuron and event.
		const std::size_t ec = full.events.size();
		std::vector<double> pairf;
		if (!model.exact && ec > 0 && ec <= 512) {
			pairf.assign(ec * ec, 0.0);
			for (std::size_t a = 0; a + 1 < ec; ++a) {
				for (std::size_t b = a + 1; b < ec; ++b) {
					pairf[a * ec + b] = model.ffactor(
					    full.events[a].label, full.events[b].label);
				}
			}
		}
		std::vector<SpikeTrain> next(layer.rows());
		for (std::size_t o = 0; o < layer.rows(); ++o) {
			const auto& row = rows[o];
			// No-decay fast path: potentials live on the lattice spanned by
			// the row's weight denominators, so int64 arithmetic scaled by
			// their lcm is exact. Falls back to rationals when the scaled
			// values could grow large.
			if (model.exact && model.unit && !trace_rows) {
				long long den = 1;
				std::vector<long long> iw(row.size());
				bool fits = true;
				for (std::size_t ri = 0; ri < row.size() && fits; ++ri) {
					const Rat& w = *row[ri].second;
					const BigInt d = boost::multiprecision::denominator(w);
					if (d > 100000) {
						fits = false;
						break;
					}
					const long long dv = d.convert_to<long long>();
					den = std::lcm(den, dv);
					fits = den <= 1000000;
				}
				for (std::size_t ri = 0; ri < row.size() && fits; ++ri) {
					const Rat& w = *row[ri].second;
					const BigInt n = boost::multiprecision::numerator(w);
					const BigInt d = boost::multiprecision::denominator(w);
					const BigInt scaled = n * (den / d.convert_to<long long>());
					if (scaled > 1000000000 || scaled < -1000000000) {
						fits = false;
						break;
					}
					iw[ri] = scaled.convert_to<long long>();
				}
				if (fits) {
					std::vector<Time> spikes;
					long long ip = 0;
					bool prev_spiked = false;
					for (std::size_t e = 0; e < full.events.size(); ++e) {
						const char* active = act.data() + e * layer.cols();
						bool any = false;
						long long c = 0;
						for (std::size_t ri = 0; ri < row.size(); ++ri) {
							if (!active[row[ri].first]) continue;
							any = true;
							c += iw[ri];
						}
						if (!any) continue;
						ip = (prev_spiked ? 0 : ip) + c;
						if (ip < 0) ip = 0;
						prev_spiked = ip > den;
						if (prev_spiked) {
							spikes.push_back(full.events[e].label);
						}
					}
					next[o] = SpikeTrain(std::move(spikes));
					continue;
				}
			}
			std::vector<Time> spikes;
			Rat p = 0;
			double fp = 0;
			bool prev_spiked = false;
			const Time* last = nullptr;
			std::size_t last_idx = 0;
			for (std::size_t e = 0; e < full.events.size(); ++e) {
				const auto& ev = full.events[e];
				const char* active = act.data() + e * layer.cols();
				bool any = false;
				Rat c = 0;
				double fc = 0;
				for (std::size_t ri = 0; ri < row.size(); ++ri) {
					if (!active[row[ri].first]) continue;
					any = true;
					if (model.exact) {
						c += *row[ri].second;
					} else {
						fc += frows[o][ri];
					}
				}
				if (!any) continue;
				bool spiked;
				if (model.exact) {
					if (prev_spiked || !last) {
						p = std::move(c);
					} else if (model.unit) {
						p += c;
					} else {
						p = p * model.factor(*last, ev.label) + c;
					}
					if (p < 0) p = 0;
					spiked = p > 1;
				} else {
					double base = 0.0;
					if (!prev_spiked && last) {
						const double f =
						    pairf.empty()
						        ? model.ffactor(*last, ev.label)
						        : pairf[last_idx * ec + e];
						base = fp * f;
					}
					fp = base + fc;
					if (fp < 0) fp = 0;
					spiked = fp > 1;
				}
				prev_spiked = spiked;
				last = &ev.label;
				last_idx = e;
				if (spiked) spikes.push_back(ev.label);
				if (trace_rows) {
					TraceRow r;
					r.layer = li + 1;
					r.neuron = o + 1;
					r.event_time = ev.label;
					r.potential = model.exact ? rat_to_string(p)
					                          : std::to_string(fp);
					r.spiked = spiked;
					trace_rows->push_back(std::move(r));
				}
			}
			next[o] = SpikeTrain(std::move(spikes));
		}
		current = std::move(next);
	}
	return current;
}

}  // namespace

std::vector<SpikeTrain> simulate_network(
    const Network& net, const std::vector<SpikeTrain>& inputs,
    std::optional<MemoryMode> override_memory) {
	const MemoryMode mode = override_memory.value_or(net.memory());
	return run_layers(net, inputs, decay_model(mode), nullptr);
}

std::vector<SpikeTrain> simulate_network(const Network& net,
                                         const std::vector<SpikeTrain>& inputs,
                                         const DecayModel& model) {
	return run_layers(net, inputs, model, nullptr);
}

std::vector<SpikeTrain> simulate_network_grid(
    const Network& net, const std::vector<SpikeTrain>& inputs,
    const Rat& delta, std::size_t steps, double step_factor) {
	if (inputs.size() != net.input_count()) {
		throw std::invalid_argument("input count must match network arity");
	}
	std::vector<SpikeTrain> current = inputs;
	for (const auto& layer : net.layers()) {
		std::vector<SpikeTrain> next(layer.rows());
		for (std::size_t o = 0; o < layer.rows(); ++o) {
			auto row = layer.row(o);
			std::vector<Time> spikes;
			double p = 0;
			bool prev_over = false;
			for (std::size_t t = 1; t <= steps; ++t) {
				const Time label = delta * Rat(static_cast<long>(t));
				double c = 0;
				for (auto& [in, weight] : row) {
					if (current[in].contains(label)) c += rat_to_double(weight);
				}
				double base = prev_over ? 0.0 : p * step_factor;
				p = base + c;
				if (p < 0) p = 0;
				prev_over = p > 1;
				if (prev_over) spikes.push_back(label);
			}
			next[o] = SpikeTrain(std::move(spikes));
		}
		current = std::move(next);
	}
	return current;
}

std::vector<TraceRow> simulate_network_trace(
    const Network& net, const std::vector<SpikeTrain>& inputs,
    std::optional<MemoryMode> override_memory) {
	const MemoryMode mode = override_memory.value_or(net.memory());
	std::vector<TraceRow> rows;
	run_layers(net, inputs, decay_model(mode), &rows);
	return rows;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows) {
	out << "layer,neuron,event_time,potential,spiked\n";
	for (const auto& r : rows) {
		out << r.layer << ',' << r.neuron << ',' << rat_to_string(r.event_time)
		    << ',' << r.potential << ',' << (r.spiked ? 1 : 0) << '\n';
	}
}

Rat unfolded_potential(const std::vector<Rat>& weights,
                       const DecayStream& stream, std::size_t r,
                       std::size_t j) {
	if (!stream.exact) {
		throw std::invalid_argument("unfolded potential requires exact mode");
	}
	if (r < 1 || r > stream.events.size() || j >= r) {
		throw std::out_of_range("unfolded potential: bad event indices");
	}
	Rat total = 0;
	for (std::size_t k = j + 1; k <= r; ++k) {
		Rat contrib = 0;
		for (auto l : stream.events[k - 1].active) contrib += weights[l];
		Rat decay = 1;
		for (std::size_t i = k + 1; i <= r; ++i) {
			decay *= stream.events[i - 1].factor;
		}
		total += contrib * decay;
	}
	if (total < 0) total = 0;
	return total;
}

}  // namespace snn
