#include <snncore/funcspec.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace snn {

using nlohmann::json;

std::size_t spec_arity(const FunctionSpec& spec) {
	return std::visit(
	    [](const auto& s) -> std::size_t {
		    using T = std::decay_t<decltype(s)>;
		    if constexpr (std::is_same_v<T, MarkovianSpec>) {
			    return s.d;
		    } else if constexpr (std::is_same_v<T, CompositionalSpec>) {
			    return s.d0;
		    } else if constexpr (std::is_same_v<T, ClassifierSpec>) {
			    return 2;
		    } else {
			    return 1;
		    }
	    },
	    spec);
}

std::size_t spec_sparsity(const FunctionSpec& spec) {
	return std::visit(
	    [](const auto& s) -> std::size_t {
		    using T = std::decay_t<decltype(s)>;
		    if constexpr (std::is_same_v<T, MarkovianSpec>) {
			    return s.accepted.size();
		    } else if constexpr (std::is_same_v<T, ClassifierSpec>) {
			    return s.patterns.size();
		    } else if constexpr (std::is_same_v<T, CompositionalSpec>) {
			    std::size_t r = 0;
			    for (const auto& layer : s.layers) {
				    for (const auto& c : layer) {
					    r += std::visit(
					        [](const auto& cs) -> std::size_t {
						        using U = std::decay_t<decltype(cs)>;
						        if constexpr (std::is_same_v<U, MarkovianSpec>) {
							        return cs.accepted.size();
						        } else {
							        return cs.out.size();
						        }
					        },
					        c.spec);
				    }
			    }
			    return r;
		    } else {
			    return s.out.size();
		    }
	    },
	    spec);
}

namespace {

SpikeTrain positions(const SpikeTrain& in, const std::set<std::size_t>& keep) {
	std::vector<Time> out;
	for (std::size_t k = 1; k <= in.size(); ++k) {
		if (keep.count(k)) out.push_back(in.nth(k));
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain eval_finite(const FiniteSpec& s, const SpikeTrain& in) {
	return positions(in, s.out);
}

SpikeTrain eval_periodic(const PeriodicSpec& s, const SpikeTrain& in) {
	std::vector<Time> out;
	for (std::size_t k = 1; k <= in.size(); ++k) {
		std::size_t residue = ((k - 1) % s.m) + 1;
		if (s.out.count(residue)) out.push_back(in.nth(k));
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain eval_markovian(const MarkovianSpec& s,
                          const std::vector<SpikeTrain>& inputs) {
	if (inputs.size() != s.d) {
		throw std::invalid_argument("markovian arity mismatch");
	}
	SpikeTrain uni = train_union(inputs);
	std::vector<std::uint32_t> columns;
	columns.reserve(uni.size());
	for (const auto& t : uni.times()) {
		std::uint32_t mask = 0;
		for (std::size_t i = 0; i < inputs.size(); ++i) {
			if (inputs[i].contains(t)) mask |= (1u << i);
		}
		columns.push_back(mask);
	}
	std::vector<Time> out;
	for (std::size_t n = 1; n <= columns.size(); ++n) {
		const std::size_t len = std::min<std::size_t>(n, s.m);
		HistoryPattern window(columns.begin() + (n - len), columns.begin() + n);
		if (s.accepted.count(window)) out.push_back(uni.nth(n));
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain eval_classifier(const ClassifierSpec& s, const SpikeTrain& in,
                           const SpikeTrain& dom) {
	SpikeTrain gated = ceil_oracle(1, in, dom);
	std::vector<Time> out;
	for (std::size_t n = s.m; n <= dom.size(); ++n) {
		std::uint32_t mask = 0;
		for (std::size_t i = 1; i <= s.m; ++i) {
			if (gated.contains(dom.nth(n - s.m + i))) mask |= (1u << (i - 1));
		}
		if (s.patterns.count(mask)) out.push_back(dom.nth(n));
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain eval_compositional(const CompositionalSpec& s,
                              const std::vector<SpikeTrain>& inputs) {
	if (inputs.size() != s.d0) {
		throw std::invalid_argument("compositional arity mismatch");
	}
	std::vector<SpikeTrain> current = inputs;
	for (const auto& layer : s.layers) {
		std::vector<SpikeTrain> next;
		for (const auto& comp : layer) {
			std::vector<SpikeTrain> args;
			for (auto idx : comp.inputs) {
				if (idx >= current.size()) {
					throw std::invalid_argument("compositional wiring out of range");
				}
				args.push_back(current[idx]);
			}
			next.push_back(eval_oracle(comp.spec, args));
		}
		current = std::move(next);
	}
	if (current.size() != 1) {
		throw std::invalid_argument("compositional spec must end in one output");
	}
	return current[0];
}

}  // namespace

SpikeTrain eval_oracle(const ComponentSpec& spec,
                       const std::vector<SpikeTrain>& inputs) {
	return std::visit(
	    [&](const auto& s) -> SpikeTrain {
		    using T = std::decay_t<decltype(s)>;
		    if constexpr (std::is_same_v<T, MarkovianSpec>) {
			    return eval_markovian(s, inputs);
		    } else {
			    if (inputs.size() != 1) {
				    throw std::invalid_argument("single-input spec arity mismatch");
			    }
			    if constexpr (std::is_same_v<T, FiniteSpec>) {
				    return eval_finite(s, inputs[0]);
			    } else {
				    return eval_periodic(s, inputs[0]);
			    }
		    }
	    },
	    spec);
}

SpikeTrain eval_oracle(const FunctionSpec& spec,
                       const std::vector<SpikeTrain>& inputs) {
	return std::visit(
	    [&](const auto& s) -> SpikeTrain {
		    using T = std::decay_t<decltype(s)>;
		    if constexpr (std::is_same_v<T, FiniteSpec>) {
			    if (inputs.size() != 1) {
				    throw std::invalid_argument("finite spec arity mismatch");
			    }
			    return eval_finite(s, inputs[0]);
		    } else if constexpr (std::is_same_v<T, PeriodicSpec>) {
			    if (inputs.size() != 1) {
				    throw std::invalid_argument("periodic spec arity mismatch");
			    }
			    return eval_periodic(s, inputs[0]);
		    } else if constexpr (std::is_same_v<T, MarkovianSpec>) {
			    return eval_markovian(s, inputs);
		    } else if constexpr (std::is_same_v<T, ClassifierSpec>) {
			    if (inputs.size() != 2) {
				    throw std::invalid_argument("classifier takes (train, dominator)");
			    }
			    return eval_classifier(s, inputs[0], inputs[1]);
		    } else {
			    return eval_compositional(s, inputs);
		    }
	    },
	    spec);
}

// ---- gadget set definitions ----

SpikeTrain or_oracle(const std::vector<SpikeTrain>& in) {
	return train_union(in);
}

SpikeTrain and_oracle(const std::vector<SpikeTrain>& in) {
	if (in.empty()) return SpikeTrain();
	std::vector<Time> out;
	for (const auto& t : in[0].times()) {
		bool all = true;
		for (std::size_t i = 1; i < in.size(); ++i) {
			if (!in[i].contains(t)) {
				all = false;
				break;
			}
		}
		if (all) out.push_back(t);
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain minus_oracle(const SpikeTrain& a, const SpikeTrain& b) {
	std::vector<Time> out;
	for (const auto& t : a.times()) {
		if (!b.contains(t)) out.push_back(t);
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain xor_oracle(const SpikeTrain& a, const SpikeTrain& b) {
	return train_union({minus_oracle(a, b), minus_oracle(b, a)});
}

SpikeTrain is_equal_oracle(const SpikeTrain& a, const SpikeTrain& b,
                           const SpikeTrain& dom) {
	std::vector<Time> out;
	for (const auto& t : dom.times()) {
		if (a.contains(t) == b.contains(t)) out.push_back(t);
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain translate_oracle(const SpikeTrain& t, const SpikeTrain& s,
                            const SpikeTrain& c) {
	(void)c;  // the clear train shapes the construction, not the set formula
	std::vector<Time> out;
	Time prev = 0;
	for (std::size_t j = 1; j <= s.size(); ++j) {
		const Time& cur = s.nth(j);
		if (restrict_open(t, prev, cur).size() == 1) out.push_back(cur);
		prev = cur;
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain odd_oracle(const SpikeTrain& in) { return clock_oracle(2, 1, in); }
SpikeTrain even_oracle(const SpikeTrain& in) { return clock_oracle(2, 2, in); }

SpikeTrain clock_oracle(std::size_t m, std::size_t j, const SpikeTrain& in) {
	std::vector<Time> out;
	for (std::size_t k = 1; k <= in.size(); ++k) {
		if ((k - 1) % m == j - 1) out.push_back(in.nth(k));
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain spike_oracle(std::size_t m, const SpikeTrain& in) {
	if (in.size() < m) return SpikeTrain();
	return SpikeTrain({in.nth(m)});
}

SpikeTrain represent_oracle(const std::vector<bool>& r, const SpikeTrain& in) {
	std::vector<Time> out;
	for (std::size_t k = 1; k <= std::min(r.size(), in.size()); ++k) {
		if (r[k - 1]) out.push_back(in.nth(k));
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain ceil_oracle(std::size_t m, const SpikeTrain& in,
                       const SpikeTrain& dom) {
	std::vector<Time> out;
	Time prev = 0;
	for (std::size_t n = 1; n <= dom.size(); ++n) {
		const Time& cur = dom.nth(n);
		if (restrict_halfopen(in, prev, cur).size() >= m) out.push_back(cur);
		prev = cur;
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain is_approx_equal_oracle(std::size_t m, const SpikeTrain& a,
                                  const SpikeTrain& b, const SpikeTrain& dom) {
	std::vector<Time> out;
	Time prev = 0;
	for (std::size_t n = 1; n <= dom.size(); ++n) {
		const Time& cur = dom.nth(n);
		const std::size_t ca =
		    std::min<std::size_t>(restrict_halfopen(a, prev, cur).size(), m);
		const std::size_t cb =
		    std::min<std::size_t>(restrict_halfopen(b, prev, cur).size(), m);
		if (ca == cb) out.push_back(cur);
		prev = cur;
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain delay_oracle(std::size_t m, const SpikeTrain& in,
                        const SpikeTrain& dom) {
	SpikeTrain j = train_union({in, dom});
	std::vector<Time> out;
	for (std::size_t n = 1; n <= j.size(); ++n) {
		if (in.contains(j.nth(n)) && n + m - 1 <= j.size()) {
			out.push_back(j.nth(n + m - 1));
		}
	}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return SpikeTrain(std::move(out));
}

SpikeTrain repeat_oracle(std::size_t m, const SpikeTrain& in,
                         const SpikeTrain& dom) {
	std::vector<SpikeTrain> parts;
	for (std::size_t k = 1; k <= m + 1; ++k) {
		parts.push_back(delay_oracle(k, in, dom));
	}
	return train_union(parts);
}

SpikeTrain if_then_oracle(const std::vector<bool>& r, const SpikeTrain& in,
                          const SpikeTrain& dom) {
	const std::size_t m = r.size();
	SpikeTrain gated = ceil_oracle(1, in, dom);
	SpikeTrain ref = represent_oracle(r, dom);
	SpikeTrain first_m = represent_oracle(std::vector<bool>(m, true), dom);
	SpikeTrain agree = is_equal_oracle(gated, ref, first_m);
	return spike_oracle(m, agree);
}

std::vector<SpikeTrain> memory_oracle(std::size_t d, std::size_t m,
                                      const std::vector<SpikeTrain>& in) {
	if (in.size() != d) throw std::invalid_argument("memory arity mismatch");
	SpikeTrain uni = train_union(in);
	std::vector<SpikeTrain> out;
	for (std::size_t i = 0; i < d; ++i) {
		for (std::size_t j = 1; j <= m; ++j) {
			out.push_back(delay_oracle(j, in[i], uni));
		}
	}
	return out;
}

SpikeTrain boolean_oracle(const std::vector<bool>& table, std::size_t d,
                          const std::vector<SpikeTrain>& in) {
	if (table.size() != (std::size_t{1} << d) || in.size() != d) {
		throw std::invalid_argument("boolean table arity mismatch");
	}
	SpikeTrain uni = train_union(in);
	std::vector<Time> out;
	for (const auto& t : uni.times()) {
		std::size_t mask = 0;
		for (std::size_t i = 0; i < d; ++i) {
			if (in[i].contains(t)) mask |= (std::size_t{1} << i);
		}
		if (table[mask]) out.push_back(t);
	}
	return SpikeTrain(std::move(out));
}

// ---- enumeration and randomization ----

std::vector<std::vector<SpikeTrain>> enumerate_canonical_inputs(
    std::size_t d, std::size_t horizon, std::size_t budget) {
	const std::size_t base = (std::size_t{1} << d) - 1;
	std::size_t count = 1;
	for (std::size_t i = 0; i < horizon; ++i) {
		if (count > budget / base + 1) {
			throw std::invalid_argument("canonical enumeration budget exceeded");
		}
		count *= base;
	}
	if (count > budget) {
		throw std::invalid_argument("canonical enumeration budget exceeded");
	}
	std::vector<std::vector<SpikeTrain>> tuples;
	tuples.reserve(count);
	for (std::size_t idx = 0; idx < count; ++idx) {
		std::vector<std::vector<Time>> per_input(d);
		std::size_t x = idx;
		for (std::size_t step = 1; step <= horizon; ++step) {
			const std::size_t mask = (x % base) + 1;
			x /= base;
			for (std::size_t i = 0; i < d; ++i) {
				if (mask & (std::size_t{1} << i)) {
					per_input[i].push_back(Time(static_cast<long>(step)));
				}
			}
		}
		std::vector<SpikeTrain> tuple;
		tuple.reserve(d);
		for (auto& times : per_input) {
			tuple.emplace_back(std::move(times));
		}
		tuples.push_back(std::move(tuple));
	}
	return tuples;
}

FunctionSpec random_spec(const std::string& kind, std::size_t d, std::size_t m,
                         std::size_t r, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	if (kind == "finite" || kind == "periodic") {
		std::set<std::size_t> out;
		std::uniform_int_distribution<std::size_t> pos(1, m);
		for (std::size_t i = 0; i < r; ++i) out.insert(pos(rng));
		if (kind == "finite") return FiniteSpec{m, std::move(out)};
		return PeriodicSpec{m, std::move(out)};
	}
	if (kind == "markovian") {
		std::set<HistoryPattern> accepted;
		std::uniform_int_distribution<std::size_t> len(1, m);
		std::uniform_int_distribution<std::uint32_t> col(1, (1u << d) - 1);
		for (std::size_t i = 0; i < r; ++i) {
			HistoryPattern p(len(rng));
			for (auto& c : p) c = col(rng);
			accepted.insert(std::move(p));
		}
		return MarkovianSpec{d, m, std::move(accepted)};
	}
	if (kind == "classifier") {
		std::set<std::uint32_t> patterns;
		std::uniform_int_distribution<std::uint32_t> pat(0, (1u << m) - 1);
		for (std::size_t i = 0; i < r; ++i) patterns.insert(pat(rng));
		return ClassifierSpec{m, std::move(patterns)};
	}
	throw std::invalid_argument("unknown random spec kind: " + kind);
}

SpikeTrain random_integer_train(std::mt19937_64& rng, std::size_t horizon,
                                double density) {
	std::bernoulli_distribution flip(density);
	std::vector<Time> out;
	for (std::size_t t = 1; t <= horizon; ++t) {
		if (flip(rng)) out.push_back(Time(static_cast<long>(t)));
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain random_rational_train(std::mt19937_64& rng, std::size_t max_spikes,
                                 long max_num, long max_den) {
	std::uniform_int_distribution<long> num(1, max_num);
	std::uniform_int_distribution<long> den(1, max_den);
	std::set<Rat> picked;
	for (std::size_t i = 0; i < max_spikes; ++i) {
		picked.insert(Rat(num(rng), den(rng)));
	}
	return SpikeTrain(std::vector<Time>(picked.begin(), picked.end()));
}

MonotoneMap random_monotone_map(std::mt19937_64& rng) {
	std::uniform_int_distribution<int> n_knots(0, 3);
	std::uniform_int_distribution<long> step_num(1, 8);
	std::uniform_int_distribution<long> step_den(1, 4);
	std::vector<std::pair<Time, Time>> knots;
	Time x = 0, y = 0;
	const int k = n_knots(rng);
	for (int i = 0; i < k; ++i) {
		x += Rat(step_num(rng), step_den(rng));
		y += Rat(step_num(rng), step_den(rng));
		knots.emplace_back(x, y);
	}
	Rat slope(step_num(rng), step_den(rng));
	return MonotoneMap(std::move(knots), slope);
}

StructuralReport structural_checks(const FunctionSpec& spec,
                                   std::size_t horizon) {
	StructuralReport rep;
	std::vector<Time> line;
	for (std::size_t t = 1; t <= horizon; ++t) {
		line.push_back(Time(static_cast<long>(t)));
	}
	SpikeTrain nat(line);
	if (const auto* fin = std::get_if<FiniteSpec>(&spec)) {
		// Window determinism: viewed through windows of length m+1, two times
		// with equal window lengths must agree on membership.
		SpikeTrain out = eval_finite(*fin, nat);
		const std::size_t w = fin->m + 1;
		std::map<std::size_t, bool> by_len;
		for (std::size_t t = 1; t <= horizon; ++t) {
			const std::size_t len = std::min(t, w);
			const bool member = out.contains(nat.nth(t));
			if (len < w) continue;  // shorter windows occur once each
			auto [it, inserted] = by_len.emplace(len, member);
			if (!inserted && it->second != member) {
				rep.window_determinism = false;
				rep.detail = "finite spec not window determined at t=" +
				             std::to_string(t);
			}
		}
		return rep;
	}
	if (const auto* comp = std::get_if<CompositionalSpec>(&spec)) {
		// Eventual periodicity of a Markovian head fed by a periodic component.
		std::size_t m_markov = 0, m_period = 0;
		if (!comp->layers.empty()) {
			for (const auto& c : comp->layers.front()) {
				if (const auto* p = std::get_if<PeriodicSpec>(&c.spec)) {
					m_period = std::max(m_period, p->m);
				}
			}
			for (const auto& c : comp->layers.back()) {
				if (const auto* mk = std::get_if<MarkovianSpec>(&c.spec)) {
					m_markov = std::max(m_markov, mk->m);
				}
			}
		}
		if (m_markov > 0 && m_period > 0 && comp->d0 == 1) {
			SpikeTrain out = eval_compositional(*comp, {nat});
			// The head needs m_markov earlier events before its output can
			// settle into the period; one event arrives per period.
			const std::size_t burn_in = m_markov * m_period;
			for (std::size_t t = burn_in + 1; t + m_period <= horizon; ++t) {
				const bool a = out.contains(Time(static_cast<long>(t)));
				const bool b =
				    out.contains(Time(static_cast<long>(t + m_period)));
				if (a != b) {
					rep.eventual_periodicity = false;
					rep.detail = "periodicity broken at t=" + std::to_string(t);
					break;
				}
			}
		}
		return rep;
	}
	return rep;
}

// ---- JSON ----

namespace {

std::string mask_to_bits(std::uint32_t mask, std::size_t width) {
	std::string s(width, '0');
	for (std::size_t i = 0; i < width; ++i) {
		if (mask & (1u << i)) s[i] = '1';
	}
	return s;
}

std::uint32_t bits_to_mask(const std::string& bits) {
	std::uint32_t mask = 0;
	for (std::size_t i = 0; i < bits.size(); ++i) {
		if (bits[i] == '1') {
			mask |= (1u << i);
		} else if (bits[i] != '0') {
			throw std::invalid_argument("bit string must be 0/1");
		}
	}
	return mask;
}

json component_to_json(const ComponentSpec& spec);
ComponentSpec component_from_json(const json& j);

json spec_to_json_impl(const FunctionSpec& spec) {
	json j;
	std::visit(
	    [&](const auto& s) {
		    using T = std::decay_t<decltype(s)>;
		    if constexpr (std::is_same_v<T, FiniteSpec> ||
		                  std::is_same_v<T, PeriodicSpec>) {
			    j["kind"] =
			        std::is_same_v<T, FiniteSpec> ? "finite" : "periodic";
			    j["m"] = s.m;
			    j["out"] = json::array();
			    for (auto k : s.out) j["out"].push_back(k);
		    } else if constexpr (std::is_same_v<T, MarkovianSpec>) {
			    j["kind"] = "markovian";
			    j["d"] = s.d;
			    j["m"] = s.m;
			    j["accepted"] = json::array();
			    for (const auto& pat : s.accepted) {
				    json jp = json::array();
				    for (auto col : pat) jp.push_back(mask_to_bits(col, s.d));
				    j["accepted"].push_back(std::move(jp));
			    }
		    } else if constexpr (std::is_same_v<T, ClassifierSpec>) {
			    j["kind"] = "classifier";
			    j["m"] = s.m;
			    j["patterns"] = json::array();
			    for (auto p : s.patterns) {
				    j["patterns"].push_back(mask_to_bits(p, s.m));
			    }
		    } else {
			    j["kind"] = "compositional";
			    j["d"] = s.d0;
			    j["layers"] = json::array();
			    for (const auto& layer : s.layers) {
				    json jl = json::array();
				    for (const auto& c : layer) {
					    json jc;
					    jc["inputs"] = json::array();
					    for (auto idx : c.inputs) jc["inputs"].push_back(idx + 1);
					    jc["spec"] = component_to_json(c.spec);
					    jl.push_back(std::move(jc));
				    }
				    j["layers"].push_back(std::move(jl));
			    }
		    }
	    },
	    spec);
	return j;
}

json component_to_json(const ComponentSpec& spec) {
	return std::visit(
	    [](const auto& s) {
		    return spec_to_json_impl(FunctionSpec(s));
	    },
	    spec);
}

FunctionSpec spec_from_json_impl(const json& j) {
	const std::string kind = j.at("kind").get<std::string>();
	if (kind == "finite" || kind == "periodic") {
		std::size_t m = j.at("m").get<std::size_t>();
		std::set<std::size_t> out;
		for (const auto& k : j.at("out")) {
			std::size_t v = k.get<std::size_t>();
			if (v < 1 || v > m) {
				throw std::invalid_argument("out position outside [m]");
			}
			out.insert(v);
		}
		if (kind == "finite") return FiniteSpec{m, std::move(out)};
		return PeriodicSpec{m, std::move(out)};
	}
	if (kind == "markovian") {
		MarkovianSpec s;
		s.d = j.at("d").get<std::size_t>();
		s.m = j.at("m").get<std::size_t>();
		for (const auto& jp : j.at("accepted")) {
			HistoryPattern p;
			for (const auto& col : jp) {
				std::uint32_t mask = bits_to_mask(col.get<std::string>());
				if (mask == 0) {
					throw std::invalid_argument("pattern columns must be nonzero");
				}
				p.push_back(mask);
			}
			if (p.empty() || p.size() > s.m) {
				throw std::invalid_argument("pattern length outside [m]");
			}
			s.accepted.insert(std::move(p));
		}
		return s;
	}
	if (kind == "classifier") {
		ClassifierSpec s;
		s.m = j.at("m").get<std::size_t>();
		for (const auto& jp : j.at("patterns")) {
			s.patterns.insert(bits_to_mask(jp.get<std::string>()));
		}
		return s;
	}
	if (kind == "compositional") {
		CompositionalSpec s;
		s.d0 = j.at("d").get<std::size_t>();
		for (const auto& jl : j.at("layers")) {
			std::vector<CompComponent> layer;
			for (const auto& jc : jl) {
				CompComponent c;
				for (const auto& idx : jc.at("inputs")) {
					std::size_t v = idx.get<std::size_t>();
					if (v == 0) {
						throw std::invalid_argument("wiring indices are 1-based");
					}
					c.inputs.push_back(v - 1);
				}
				c.spec = component_from_json(jc.at("spec"));
				layer.push_back(std::move(c));
			}
			s.layers.push_back(std::move(layer));
		}
		return s;
	}
	throw std::invalid_argument("unknown spec kind: " + kind);
}

ComponentSpec component_from_json(const json& j) {
	FunctionSpec full = spec_from_json_impl(j);
	return std::visit(
	    [](auto&& s) -> ComponentSpec {
		    using T = std::decay_t<decltype(s)>;
		    if constexpr (std::is_same_v<T, FiniteSpec> ||
		                  std::is_same_v<T, PeriodicSpec> ||
		                  std::is_same_v<T, MarkovianSpec>) {
			    return ComponentSpec(std::move(s));
		    } else {
			    throw std::invalid_argument(
			        "compositional components must be finite/periodic/markovian");
		    }
	    },
	    std::move(full));
}

}  // namespace

std::string spec_to_json(const FunctionSpec& spec) {
	return spec_to_json_impl(spec).dump(2);
}

FunctionSpec spec_from_json(const std::string& text) {
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error& e) {
		throw std::invalid_argument(std::string("spec parse error: ") + e.what());
	}
	return spec_from_json_impl(j);
}

}  // namespace snn
