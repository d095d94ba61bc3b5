#include <snncore/expressivity.hpp>

#include <snncore/compiler.hpp>
#include <snncore/funcspec.hpp>
#include <snncore/gadgets.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace snn {

namespace {

void require_exact(const MemoryMode& memory, const char* what) {
	if (is_finite(memory)) {
		throw std::invalid_argument(
		    std::string(what) +
		    " needs an exact decay (zero or infinite memory, or a rational "
		    "profile surrogate)");
	}
}

std::set<std::vector<Rat>> window_vectors(
    const std::vector<std::vector<SpikeTrain>>& inputs,
    const DecayModel& model) {
	std::set<std::vector<Rat>> vectors;
	for (const auto& tuple : inputs) {
		const DecayStream ds = decay_stream(tuple, model);
		const std::size_t n = ds.events.size();
		for (std::size_t k = 0; k < n; ++k) {
			// Grow the window [r, t_k] backwards, accumulating the decayed
			// contribution of every event in it.
			std::vector<Rat> p(tuple.size(), Rat(0));
			Rat scale = 1;
			for (std::size_t j = k + 1; j-- > 0;) {
				if (j < k) scale *= ds.events[j + 1].factor;
				for (auto i : ds.events[j].active) p[i] += scale;
				vectors.insert(p);
			}
		}
	}
	return vectors;
}

}  // namespace

std::vector<std::vector<Rat>> potential_vectors(
    const std::vector<std::vector<SpikeTrain>>& inputs,
    const MemoryMode& memory) {
	require_exact(memory, "potential-vector enumeration");
	auto set = window_vectors(inputs, decay_model(memory));
	return {set.begin(), set.end()};
}

double unit_count_upper(std::size_t d, std::size_t H) {
	return std::pow(8.0 * std::exp(1.0) * (double)H, (double)d);
}

double network_count_upper(std::size_t s, std::size_t T_sum) {
	return std::pow(8.0 * std::exp(1.0) * (double)s * (double)s * (double)T_sum,
	                (double)s);
}

namespace {

std::vector<Rat> candidate_coords(const std::set<Rat>& breaks) {
	std::vector<Rat> cands;
	if (breaks.empty()) {
		cands.push_back(0);
		return cands;
	}
	std::vector<Rat> b(breaks.begin(), breaks.end());
	cands.push_back(b.front() - 1);
	for (std::size_t i = 0; i < b.size(); ++i) {
		cands.push_back(b[i]);
		if (i + 1 < b.size()) cands.push_back((b[i] + b[i + 1]) / 2);
	}
	cands.push_back(b.back() + 1);
	return cands;
}

std::string signature_of(const std::vector<Rat>& w,
                         const std::vector<std::vector<SpikeTrain>>& inputs,
                         const DecayModel& model) {
	std::string sig;
	for (const auto& tuple : inputs) {
		auto [train, trace] = simulate_unit(w, decay_stream(tuple, model));
		(void)trace;
		for (const auto& t : train.times()) sig += rat_to_string(t) + ",";
		sig += ";";
	}
	return sig;
}

}  // namespace

UnitFunctionCensus enumerate_unit_functions(
    std::size_t d, const std::vector<std::vector<SpikeTrain>>& inputs,
    const MemoryMode& memory, std::size_t budget) {
	if (d == 0 || d > 2) {
		throw std::invalid_argument("unit census supports d in {1, 2}");
	}
	for (const auto& tuple : inputs) {
		if (tuple.size() != d) {
			throw std::invalid_argument("input tuple arity mismatch");
		}
	}
	require_exact(memory, "the unit census");
	const DecayModel model = decay_model(memory);
	const auto vectors = window_vectors(inputs, model);
	std::vector<std::vector<Rat>> cands;
	if (d == 1) {
		std::set<Rat> breaks;
		for (const auto& p : vectors) {
			if (p[0] != 0) {
				breaks.insert(0);
				breaks.insert(Rat(1) / p[0]);
			}
		}
		for (const auto& x : candidate_coords(breaks)) cands.push_back({x});
	} else {
		// Lines a w1 + b w2 = c with (a, b) a window vector, c in {0, 1}.
		struct Line {
			Rat a, b, c;
		};
		std::vector<Line> lines;
		for (const auto& p : vectors) {
			for (int c = 0; c <= 1; ++c) {
				if (p[0] != 0 || p[1] != 0) {
					lines.push_back({p[0], p[1], Rat(c)});
				}
			}
		}
		std::set<Rat> xs;
		for (std::size_t i = 0; i < lines.size(); ++i) {
			if (lines[i].b == 0 && lines[i].a != 0) {
				xs.insert(lines[i].c / lines[i].a);
			}
			for (std::size_t j = i + 1; j < lines.size(); ++j) {
				const Rat det =
				    lines[i].a * lines[j].b - lines[j].a * lines[i].b;
				if (det != 0) {
					xs.insert((lines[i].c * lines[j].b -
					           lines[j].c * lines[i].b) /
					          det);
				}
			}
		}
		for (const auto& x : candidate_coords(xs)) {
			std::set<Rat> ys;
			for (const auto& l : lines) {
				if (l.b != 0) ys.insert((l.c - l.a * x) / l.b);
			}
			for (const auto& y : candidate_coords(ys)) {
				cands.push_back({x, y});
			}
		}
	}
	if (cands.size() * inputs.size() > budget) {
		throw std::runtime_error("unit census budget exceeded");
	}
	UnitFunctionCensus census;
	std::map<std::string, std::vector<Rat>> classes;
	for (const auto& w : cands) {
		classes.emplace(signature_of(w, inputs, model), w);
	}
	census.count = classes.size();
	for (auto& [sig, w] : classes) census.witnesses.push_back(w);
	return census;
}

std::size_t count_network_functions_grid(
    const std::vector<std::size_t>& widths, const std::vector<Rat>& values,
    const std::vector<std::vector<SpikeTrain>>& inputs,
    const MemoryMode& memory, std::size_t budget) {
	if (widths.size() < 2 || values.empty()) {
		throw std::invalid_argument("need at least one layer and one value");
	}
	std::size_t s = 0;
	for (std::size_t l = 1; l < widths.size(); ++l) {
		s += widths[l - 1] * widths[l];
	}
	double combos = std::pow((double)values.size(), (double)s);
	if (combos > (double)budget) {
		throw std::runtime_error("grid census budget exceeded");
	}
	std::vector<std::size_t> idx(s, 0);
	std::set<std::string> sigs;
	for (;;) {
		std::vector<SparseLayer> layers;
		std::size_t pos = 0;
		for (std::size_t l = 1; l < widths.size(); ++l) {
			std::vector<LayerEntry> e;
			for (std::size_t o = 0; o < widths[l]; ++o) {
				for (std::size_t i = 0; i < widths[l - 1]; ++i) {
					const Rat& w = values[idx[pos++]];
					if (w != 0) e.push_back({o, i, w});
				}
			}
			layers.emplace_back(widths[l], widths[l - 1], std::move(e));
		}
		Network net(std::move(layers), memory);
		std::string sig;
		for (const auto& tuple : inputs) {
			for (const auto& train : simulate_network(net, tuple)) {
				for (const auto& t : train.times()) {
					sig += rat_to_string(t) + ",";
				}
				sig += "|";
			}
			sig += ";";
		}
		sigs.insert(std::move(sig));
		std::size_t carry = 0;
		while (carry < s && ++idx[carry] == values.size()) {
			idx[carry++] = 0;
		}
		if (carry == s) break;
	}
	return sigs.size();
}

BigInt count_target_functions(TargetClass cls, std::size_t m, std::size_t r,
                              std::size_t d) {
	if (m == 0) throw std::invalid_argument("m must be positive");
	if (cls == TargetClass::markovian) {
		BigInt patterns = 1;
		const BigInt cols = (BigInt(1) << d) - 1;
		for (std::size_t i = 0; i < m; ++i) patterns *= cols;
		const BigInt exp =
		    patterns < BigInt((unsigned long long)r) ? patterns : BigInt((unsigned long long)r);
		return BigInt(1) << exp.convert_to<unsigned>();
	}
	BigInt total = 0, binom = 1;
	for (std::size_t k = 0; k <= std::min(r, m); ++k) {
		total += binom;
		binom = binom * BigInt((unsigned long long)(m - k)) /
		        BigInt((unsigned long long)(k + 1));
	}
	return total;
}

LowerBoundInfo lower_bound_params(TargetClass cls, std::size_t m,
                                  std::size_t r, std::size_t d) {
	if (m == 0 || d == 0) throw std::invalid_argument("bad parameters");
	LowerBoundInfo info;
	if (cls == TargetClass::markovian) {
		BigInt patterns = 1;
		const BigInt cols = (BigInt(1) << d) - 1;
		for (std::size_t i = 0; i < m; ++i) patterns *= cols;
		const BigInt top = patterns < BigInt((unsigned long long)r)
		                       ? patterns
		                       : BigInt((unsigned long long)r);
		info.weight_bound = Rat(top) / Rat(5 * (long)(m * d));
	} else {
		std::size_t lg = 0, v = 1;
		while (v < m + 1) {
			v *= 2;
			++lg;
		}
		if (v == m + 1) {
			info.weight_bound = Rat((long)r) / Rat(5 * (long)lg);
		} else {
			info.exact = false;
			info.weight_bound =
			    Rat((double)r / (5.0 * std::log2((double)m + 1.0)));
		}
	}
	info.neuron_bound = std::sqrt(2.0 * rat_to_double(info.weight_bound));
	return info;
}

namespace {

DecayModel three_event_model(const Rat& phi1, const Rat& phi2) {
	std::map<Time, Rat> profile{
	    {Rat(1), Rat(1)}, {Rat(2), phi1}, {Rat(3), phi1 * phi2}};
	return profile_decay_model([profile](const Time& t) {
		auto it = profile.find(t);
		if (it == profile.end()) {
			throw std::invalid_argument("profile queried off the instance");
		}
		return it->second;
	});
}

std::string train_str(const SpikeTrain& t) {
	std::string s = "{";
	for (const auto& x : t.times()) {
		if (s.size() > 1) s += ",";
		s += rat_to_string(x);
	}
	return s + "}";
}

/* Canonical tuple of behaviors: the trains visible to the next layer. */
using Behavior = std::vector<Time>;
using LayerState = std::vector<Behavior>;

}  // namespace

std::vector<CheckReport> shallow_counterexample_check(const Rat& phi1) {
	if (phi1 <= 0 || phi1 >= 1) {
		throw std::invalid_argument("the decay factor must lie in (0, 1)");
	}
	const Rat phi2 = phi1 / (1 + phi1);
	const DecayModel model = three_event_model(phi1, phi2);
	const SpikeTrain train(std::vector<Time>{1, 2, 3});
	const std::string instance = "three spikes with consecutive decay factors " +
	                             rat_to_string(phi1) + ", " +
	                             rat_to_string(phi2);
	std::vector<CheckReport> reports;

	// (a) Trichotomy of single hidden units across all weight regions.
	{
		const Rat b1 = Rat(1) / (1 + phi1);
		const std::vector<Rat> sweep{Rat(-1), Rat(0),      b1 / 2, b1,
		                             (b1 + 1) / 2, Rat(1), Rat(2)};
		const std::set<std::vector<Time>> allowed{
		    {}, {Rat(2)}, {Rat(1), Rat(2), Rat(3)}};
		bool ok = true;
		std::string seen;
		for (const auto& w : sweep) {
			auto out = simulate_unit({w}, decay_stream({train}, model)).first;
			seen += rat_to_string(w) + "->" + train_str(out) + " ";
			ok = ok && allowed.count(out.times()) != 0;
		}
		// The regions themselves, with breakpoints 1/(1+phi1) and 1.
		ok = ok &&
		     simulate_unit({b1}, decay_stream({train}, model)).first.empty() &&
		     simulate_unit({(b1 + 1) / 2}, decay_stream({train}, model))
		             .first.times() == std::vector<Time>{Rat(2)} &&
		     simulate_unit({Rat(2)}, decay_stream({train}, model))
		             .first.size() == 3;
		reports.push_back({"every single hidden unit yields {}, {second "
		                   "spike}, or the whole train",
		                   instance, "outputs within the three-element family",
		                   seen, ok});
	}

	// (b) No network with depth <= 3, widths <= 3, integer weights in
	// [-3,3] and at most one negative weight isolates the first spike.
	{
		const Behavior goal{Rat(1)};
		bool found = false;
		std::set<std::pair<LayerState, int>> frontier{
		    {LayerState{train.times()}, 0}};
		for (int depth = 1; depth <= 3 && !found; ++depth) {
			std::set<std::pair<LayerState, int>> next;
			for (const auto& [state, negs] : frontier) {
				std::vector<SpikeTrain> ins;
				for (const auto& b : state) ins.emplace_back(b);
				const DecayStream ds = decay_stream(ins, model);
				// All rows over this tuple, keyed by behavior and cost.
				std::set<std::pair<Behavior, int>> rows;
				std::vector<std::size_t> wi(state.size(), 0);
				for (;;) {
					std::vector<Rat> w;
					int cost = 0;
					for (auto i : wi) {
						const long v = (long)i - 3;
						w.push_back(Rat(v));
						if (v < 0) ++cost;
					}
					if (negs + cost <= 1) {
						rows.insert({simulate_unit(w, ds).first.times(), cost});
					}
					std::size_t carry = 0;
					while (carry < wi.size() && ++wi[carry] == 7) {
						wi[carry++] = 0;
					}
					if (carry == wi.size()) break;
				}
				for (const auto& [beh, cost] : rows) {
					if (beh == goal) found = true;
				}
				if (depth == 3) continue;
				// Multisets of up to three rows form the next layer.
				std::vector<std::pair<Behavior, int>> rv(rows.begin(),
				                                         rows.end());
				for (std::size_t a = 0; a < rv.size(); ++a) {
					for (std::size_t b = a; b <= rv.size(); ++b) {
						for (std::size_t c = b; c <= rv.size(); ++c) {
							LayerState st{rv[a].first};
							int cost = rv[a].second;
							if (b < rv.size()) {
								st.push_back(rv[b].first);
								cost += rv[b].second;
							}
							if (c < rv.size() && b < rv.size()) {
								st.push_back(rv[c].first);
								cost += rv[c].second;
							}
							if (negs + cost <= 1) {
								std::sort(st.begin(), st.end());
								next.insert({st, negs + cost});
							}
						}
					}
				}
			}
			frontier = std::move(next);
		}
		reports.push_back(
		    {"no depth<=3, width<=3, weights in [-3,3] network with at most "
		     "one negative weight isolates the first spike",
		     instance, "no witness", found ? "witness found" : "no witness",
		     !found});
	}

	// (c) The deep construction, which spends two or more negative weights,
	// does isolate the first spike.
	{
		const Network net =
		    compile_single_input(FiniteSpec{3, {1}}, MemoryInfinite{}).network;
		auto out = simulate_network(net, {train},
		                            decay_model(MemoryInfinite{}));
		auto out2 = simulate_network(net, {train}, model);
		const bool ok = out[0].times() == std::vector<Time>{Rat(1)} &&
		                out2[0].times() == std::vector<Time>{Rat(1)} &&
		                stats(net).negative_weights >= 2;
		reports.push_back({"the deep construction with >= 2 negative weights "
		                   "isolates the first spike",
		                   instance, "{1}",
		                   train_str(out2[0]) + " using " +
		                       std::to_string(stats(net).negative_weights) +
		                       " negative weights",
		                   ok});
	}
	return reports;
}

std::vector<CheckReport> integer_real_separation_check(std::uint64_t seed,
                                                       std::size_t samples) {
	std::mt19937_64 rng(seed);
	std::vector<std::vector<SpikeTrain>> cases;
	while (cases.size() < samples) {
		SpikeTrain s = random_rational_train(rng, 6);
		if (s.size() < 4) continue;
		const auto& t = s.times();
		cases.push_back({SpikeTrain({t[0], t[1], t[2]}),
		                 SpikeTrain({t[2], t[3]})});
	}
	const DecayModel model = decay_model(MemoryInfinite{});
	auto realizes = [&](const std::vector<Rat>& w) {
		for (const auto& tuple : cases) {
			auto out = simulate_unit(w, decay_stream(tuple, model)).first;
			if (out.times() != std::vector<Time>{tuple[0].nth(3)}) {
				return false;
			}
		}
		return true;
	};
	std::vector<CheckReport> reports;
	const std::string instance =
	    std::to_string(samples) +
	    " random tuples (|I|=3, |J|=2, third of I = first of J)";
	reports.push_back({"weights (1/2, 1) isolate the third spike of I",
	                   instance, "all samples match",
	                   realizes({Rat(1, 2), Rat(1)}) ? "all match"
	                                                 : "mismatch",
	                   realizes({Rat(1, 2), Rat(1)})});
	bool integer_found = false;
	for (long v1 = -5; v1 <= 5 && !integer_found; ++v1) {
		for (long v2 = -5; v2 <= 5 && !integer_found; ++v2) {
			integer_found = realizes({Rat(v1), Rat(v2)});
		}
	}
	reports.push_back({"no integer weight pair in [-5,5]^2 isolates it",
	                   instance, "no witness",
	                   integer_found ? "witness found" : "no witness",
	                   !integer_found});
	// The contradiction chain on the canonical instance {1,2,3,4}:
	// silence before the third spike forces v1 <= 0, the spike there then
	// forces v2 > 1, and silence at the fourth forces v2 <= 1.
	{
		std::vector<SpikeTrain> canon{SpikeTrain::from_ints({1, 2, 3}),
		                              SpikeTrain::from_ints({3, 4})};
		auto run = [&](long v1, long v2) {
			return simulate_unit({Rat(v1), Rat(v2)},
			                     decay_stream(canon, model))
			    .first;
		};
		const bool ok = run(1, 1).contains(Rat(2)) &&   // v1 >= 1 fires early
		                !run(0, 1).contains(Rat(3)) &&  // v2 <= 1 misses I_(3)
		                run(0, 2).contains(Rat(3)) &&   // v2 > 1 hits I_(3)
		                run(0, 2).contains(Rat(4));     // but also J_(2)
		reports.push_back(
		    {"integer contradiction chain: v1 <= 0, then v2 > 1, then v2 <= 1",
		     "canonical instance I={1,2,3}, J={3,4}",
		     "early spike for (1,1); no spike at 3 for (0,1); spikes at both "
		     "3 and 4 for (0,2)",
		     train_str(run(1, 1)) + " / " + train_str(run(0, 1)) + " / " +
		         train_str(run(0, 2)),
		     ok});
	}
	return reports;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
	nlohmann::json j = nlohmann::json::array();
	for (const auto& r : reports) {
		j.push_back({{"claim", r.claim},
		             {"instance", r.instance},
		             {"bound", r.bound},
		             {"observed", r.observed},
		             {"pass", r.pass}});
	}
	return j.dump(2);
}

}  // namespace snn
