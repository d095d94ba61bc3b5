#include <snncore/compiler.hpp>

#include <snncore/builder.hpp>
#include <snncore/gadgets.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace snn {

namespace {

std::size_t ceil_log2(std::size_t m) {
	std::size_t q = 0, v = 1;
	while (v < m) {
		v *= 2;
		++q;
	}
	return q;
}

std::pair<std::size_t, std::size_t> ceil_pow4(std::size_t m) {
	std::size_t p = 0, v = 1;
	while (v < m) {
		v *= 4;
		++p;
	}
	return {v, p};
}

long long ll(std::size_t v) { return static_cast<long long>(v); }

BoundCheck exact_check(std::string claim, long long expected,
                       long long observed) {
	return {std::move(claim), expected, observed, false, expected == observed};
}

BoundCheck upper_check(std::string claim, long long expected,
                       long long observed) {
	return {std::move(claim), expected, observed, true, observed <= expected};
}

void require_positive_memory(const MemoryMode& memory, const char* what) {
	if (is_zero(memory)) {
		throw CompileError("unsupported-memory",
		                   std::string(what) + " needs a positive memory "
		                   "coefficient (zero memory erases the needed state)");
	}
}

void validate_out(std::size_t m, const std::set<std::size_t>& out) {
	if (m == 0) throw CompileError("invalid-spec", "m must be positive");
	for (auto k : out) {
		if (k == 0 || k > m) {
			throw CompileError("invalid-spec",
			                   "accepted position " + std::to_string(k) +
			                       " outside [1, " + std::to_string(m) + "]");
		}
	}
}

CompileReport single_input_report(bool periodic, std::size_t m,
                                  const std::set<std::size_t>& out,
                                  MemoryMode memory) {
	validate_out(m, out);
	if (periodic) {
		const auto [mbar, p] = ceil_pow4(m);
		(void)p;
		if (mbar != m) {
			throw CompileError(
			    "unsupported-period",
			    "periodic specs need a power-of-four period; re-express the "
			    "function with period " + std::to_string(mbar));
		}
	}
	if (is_zero(memory) && !(periodic && m == 1)) {
		throw CompileError("unsupported-memory",
		                   "zero memory only supports the period-one case");
	}
	CompileReport rep;
	rep.network = single_input_net(periodic, m, out, &rep.construction_trace)
	                  .with_memory(memory);
	rep.arch_stats = stats(rep.network);
	const NetworkStats ref = stats(single_input_net(periodic, m, {}));
	rep.bound_check.push_back(exact_check(
	    "depth matches the shared architecture for this period class",
	    ll(ref.depth), ll(rep.arch_stats.depth)));
	rep.bound_check.push_back(exact_check(
	    "neuron count matches the shared architecture (independent of the "
	    "accepted set)",
	    ll(ref.total_neurons), ll(rep.arch_stats.total_neurons)));
	rep.bound_check.push_back(exact_check(
	    "weight count = shared architecture + one weight per accepted position",
	    ll(ref.nonzero_weights + out.size()),
	    ll(rep.arch_stats.nonzero_weights)));
	return rep;
}

Network component_network(const ComponentSpec& spec) {
	if (const auto* f = std::get_if<FiniteSpec>(&spec)) {
		validate_out(f->m, f->out);
		return single_input_net(false, f->m, f->out);
	}
	if (const auto* p = std::get_if<PeriodicSpec>(&spec)) {
		validate_out(p->m, p->out);
		const auto [mbar, q] = ceil_pow4(p->m);
		(void)q;
		if (mbar != p->m) {
			throw CompileError("unsupported-period",
			                   "periodic component period must be a power of "
			                   "four; re-express with period " +
			                       std::to_string(mbar));
		}
		return single_input_net(true, p->m, p->out);
	}
	return markovian_net(std::get<MarkovianSpec>(spec));
}

bool component_allows_zero(const ComponentSpec& spec) {
	const auto* p = std::get_if<PeriodicSpec>(&spec);
	return p != nullptr && p->m == 1;
}

}  // namespace

CompileReport compile_single_input(const FiniteSpec& spec, MemoryMode memory) {
	return single_input_report(false, spec.m, spec.out, std::move(memory));
}

CompileReport compile_single_input(const PeriodicSpec& spec,
                                   MemoryMode memory) {
	return single_input_report(true, spec.m, spec.out, std::move(memory));
}

CompileReport compile_boolean(const std::vector<bool>& table, std::size_t d) {
	if (d == 0 || d > 26 || table.size() != (std::size_t{1} << d)) {
		throw CompileError("invalid-table",
		                   "table must list all 2^d values for d in [1,26]");
	}
	if (table[0]) {
		throw CompileError("invalid-table",
		                   "the all-silent input must map to no spike");
	}
	std::vector<std::uint32_t> accepted;
	for (std::size_t x = 1; x < table.size(); ++x) {
		if (table[x]) accepted.push_back(static_cast<std::uint32_t>(x));
	}
	CompileReport rep;
	rep.network = boolean_head_net(accepted, d);
	rep.arch_stats = stats(rep.network);
	rep.construction_trace = {"boolean-head"};
	const std::size_t r = accepted.size();
	const std::size_t neurons =
	    d + (d + 1) + (2 * d + 1) + std::max<std::size_t>(r, 1) + 1;
	const std::size_t weights =
	    2 * d + (3 * d + 1) + r * (d + (d > 1 ? 1 : 0)) + r;
	rep.bound_check.push_back(exact_check("four-layer sum-of-products shape", 4,
	                                      ll(rep.arch_stats.depth)));
	rep.bound_check.push_back(
	    exact_check("neurons = 4d + 3 + max(r,1) - d", ll(neurons),
	                ll(rep.arch_stats.total_neurons)));
	rep.bound_check.push_back(
	    exact_check("weights = 5d + 1 + r(d + 1{d>1} + 1)", ll(weights),
	                ll(rep.arch_stats.nonzero_weights)));
	return rep;
}

CompileReport compile_markovian(const MarkovianSpec& spec, MemoryMode memory) {
	if (is_zero(memory) && spec.m != 1) {
		throw CompileError("unsupported-memory",
		                   "zero memory only supports window length one");
	}
	CompileReport rep;
	rep.network = markovian_net(spec).with_memory(memory);
	rep.arch_stats = stats(rep.network);
	rep.construction_trace = {"memory-block", "boolean-head"};
	const NetworkStats ref =
	    stats(markovian_net(MarkovianSpec{spec.d, spec.m, {}}));
	const std::size_t r = spec.accepted.size();
	const std::size_t dm = spec.d * spec.m;
	rep.bound_check.push_back(exact_check(
	    "depth matches the shared memory+head architecture", ll(ref.depth),
	    ll(rep.arch_stats.depth)));
	rep.bound_check.push_back(exact_check(
	    "neurons = shared architecture + one per accepted pattern",
	    ll(ref.total_neurons - 1 + std::max<std::size_t>(r, 1)),
	    ll(rep.arch_stats.total_neurons)));
	rep.bound_check.push_back(exact_check(
	    "weights = shared architecture + (dm + 1{dm>1} + 1) per pattern",
	    ll(ref.nonzero_weights + r * (dm + (dm > 1 ? 1 : 0) + 1)),
	    ll(rep.arch_stats.nonzero_weights)));
	return rep;
}

CompileReport compile_compositional(const CompositionalSpec& spec,
                                    MemoryMode memory) {
	if (spec.d0 == 0 || spec.layers.empty()) {
		throw CompileError("invalid-wiring",
		                   "composition needs inputs and at least one layer");
	}
	bool zero_ok = true;
	CircuitBuilder cb(spec.d0);
	std::vector<CircuitBuilder::Wire> wires = cb.inputs();
	CompileReport rep;
	for (const auto& layer : spec.layers) {
		if (layer.empty()) {
			throw CompileError("invalid-wiring", "empty composition layer");
		}
		std::vector<CircuitBuilder::Wire> next;
		for (const auto& comp : layer) {
			const Network sub = component_network(comp.spec);
			zero_ok = zero_ok && component_allows_zero(comp.spec);
			if (comp.inputs.size() != sub.input_count()) {
				throw CompileError("invalid-wiring",
				                   "component arity mismatch");
			}
			std::vector<CircuitBuilder::Wire> in;
			for (auto idx : comp.inputs) {
				if (idx >= wires.size()) {
					throw CompileError("invalid-wiring",
					                   "component input index out of range");
				}
				in.push_back(wires[idx]);
			}
			next.push_back(cb.add(sub, in)[0]);
			rep.construction_trace.push_back("component");
		}
		wires = std::move(next);
	}
	if (is_zero(memory) && !zero_ok) {
		throw CompileError("unsupported-memory",
		                   "zero memory only supports period-one components");
	}
	rep.network = cb.build(wires, std::move(memory));
	rep.arch_stats = stats(rep.network);
	rep.bound_check.push_back(exact_check(
	    "one output per top-layer component", ll(spec.layers.back().size()),
	    ll(rep.network.output_count())));
	return rep;
}

CompileReport compile_classifier(const ClassifierSpec& spec,
                                 MemoryMode memory) {
	const std::size_t m = spec.m;
	if (m == 0 || m > 26) {
		throw CompileError("invalid-patterns", "window length out of range");
	}
	for (auto pat : spec.patterns) {
		if (pat >= (1u << m)) {
			throw CompileError("invalid-patterns",
			                   "reference pattern wider than the window");
		}
	}
	require_positive_memory(memory, "the classifier window counter");
	CircuitBuilder cb(2);
	auto in = cb.inputs();
	auto hit = cb.add(ceil_net(1), {in[0], in[1]});
	auto mem = cb.add(memory_net(2, m), {hit[0], in[1]});
	std::vector<std::uint32_t> masks;
	std::uint32_t gate = 0;  // all m dominating-delay bits must be active
	for (std::size_t j = 1; j <= m; ++j) gate |= 1u << (m + (j - 1));
	for (auto pat : spec.patterns) {
		std::uint32_t y = gate;
		for (std::size_t i = 1; i <= m; ++i) {
			if (pat & (1u << (i - 1))) {
				const std::size_t j = m - i + 1;  // window position -> delay
				y |= 1u << (j - 1);
			}
		}
		masks.push_back(y);
	}
	auto head = cb.add(boolean_head_net(masks, 2 * m), mem);
	CompileReport rep;
	rep.network = cb.build({head[0]}, std::move(memory));
	rep.arch_stats = stats(rep.network);
	rep.construction_trace = {"window-gate", "memory-block", "boolean-head"};
	CircuitBuilder rb(2);
	auto rhit = rb.add(ceil_net(1), {rb.inputs()[0], rb.inputs()[1]});
	auto rmem = rb.add(memory_net(2, m), {rhit[0], rb.inputs()[1]});
	auto rhead = rb.add(boolean_head_net({}, 2 * m), rmem);
	const NetworkStats ref = stats(rb.build({rhead[0]}, MemoryInfinite{}));
	const std::size_t r = spec.patterns.size();
	rep.bound_check.push_back(exact_check(
	    "depth matches the shared window-counter architecture", ll(ref.depth),
	    ll(rep.arch_stats.depth)));
	rep.bound_check.push_back(exact_check(
	    "neurons = shared architecture + one per reference pattern",
	    ll(ref.total_neurons - 1 + std::max<std::size_t>(r, 1)),
	    ll(rep.arch_stats.total_neurons)));
	rep.bound_check.push_back(exact_check(
	    "weights = shared architecture + (2m + 2) per reference pattern",
	    ll(ref.nonzero_weights + r * (2 * m + 2)),
	    ll(rep.arch_stats.nonzero_weights)));
	return rep;
}

Network enforce_out_degree(const Network& net, std::size_t q) {
	if (q < 2) throw CompileError("invalid-out-degree", "q must be at least 2");
	std::vector<SparseLayer> layers = net.layers();
	for (std::size_t li = 0; li < layers.size();) {
		const SparseLayer& layer = layers[li];
		std::vector<std::size_t> outdeg(layer.cols(), 0);
		for (const auto& e : layer.entries()) ++outdeg[e.in];
		if (*std::max_element(outdeg.begin(), outdeg.end()) <= q) {
			++li;
			continue;
		}
		// Duplication layer: weight-2 copies of every column, enough copies
		// that each can serve at most q of the column's targets.
		std::vector<std::size_t> copies(layer.cols()), base(layer.cols());
		std::size_t total = 0;
		for (std::size_t c = 0; c < layer.cols(); ++c) {
			copies[c] = std::max<std::size_t>(1, (outdeg[c] + q - 1) / q);
			base[c] = total;
			total += copies[c];
		}
		std::vector<LayerEntry> dup;
		for (std::size_t c = 0; c < layer.cols(); ++c) {
			for (std::size_t k = 0; k < copies[c]; ++k) {
				dup.push_back({base[c] + k, c, Rat(2)});
			}
		}
		std::vector<LayerEntry> rewired = layer.entries();
		std::vector<std::size_t> used(layer.cols(), 0);
		for (auto& e : rewired) {
			const std::size_t c = e.in;
			e.in = base[c] + used[c] / q;
			++used[c];
		}
		SparseLayer rewritten(layer.rows(), total, std::move(rewired));
		layers[li] = SparseLayer(total, layer.cols(), std::move(dup));
		layers.insert(layers.begin() + static_cast<std::ptrdiff_t>(li) + 1,
		              std::move(rewritten));
		// Re-examine the duplication layer itself on the next pass.
	}
	return Network(std::move(layers), net.memory());
}

namespace {

CompileReport bounded_report(bool periodic, std::size_t m,
                             const std::set<std::size_t>& out, std::size_t q,
                             MemoryMode memory) {
	if (q < 4) {
		throw CompileError("invalid-out-degree", "q must be at least 4");
	}
	CompileReport rep = single_input_report(periodic, m, out, memory);
	const NetworkStats base = rep.arch_stats;
	rep.network = enforce_out_degree(rep.network, q);
	rep.arch_stats = stats(rep.network);
	if (rep.arch_stats.total_neurons != base.total_neurons) {
		rep.construction_trace.push_back("duplication");
	}
	std::size_t qprime = 1;
	while (qprime * 2 <= q) qprime *= 2;
	rep.bound_check.clear();
	rep.bound_check.push_back(upper_check("max out-degree at most q", ll(q),
	                                      ll(rep.arch_stats.max_out_degree)));
	// Each duplication round inserts, per rewritten layer, at most one copy
	// per column plus one per q weights; at most two rounds are ever needed
	// for these architectures.
	rep.bound_check.push_back(upper_check(
	    "duplication overhead at most 2 (neurons + weights / q')",
	    ll(3 * base.total_neurons + 2 * (base.nonzero_weights / qprime + 1)),
	    ll(rep.arch_stats.total_neurons)));
	return rep;
}

}  // namespace

CompileReport compile_bounded_outdegree(const FiniteSpec& spec, std::size_t q,
                                        MemoryMode memory) {
	return bounded_report(false, spec.m, spec.out, q, std::move(memory));
}

CompileReport compile_bounded_outdegree(const PeriodicSpec& spec,
                                        std::size_t q, MemoryMode memory) {
	return bounded_report(true, spec.m, spec.out, q, std::move(memory));
}

namespace {

using PosSet = std::vector<std::size_t>;  // sorted spike positions

PosSet even_positions(const PosSet& s) {
	PosSet r;
	for (std::size_t i = 1; i < s.size(); i += 2) r.push_back(s[i]);
	return r;
}

PosSet union_positions(const PosSet& a, const PosSet& b) {
	PosSet r;
	std::set_union(a.begin(), a.end(), b.begin(), b.end(),
	               std::back_inserter(r));
	return r;
}

PosSet minus_positions(const PosSet& a, const PosSet& b) {
	PosSet r;
	std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
	                    std::back_inserter(r));
	return r;
}

std::size_t rank_of(const PosSet& s, std::size_t p) {
	auto it = std::lower_bound(s.begin(), s.end(), p);
	if (it == s.end() || *it != p) return 0;
	return static_cast<std::size_t>(it - s.begin()) + 1;  // 1-based
}

/* Pool of already-realized position sets; wires are builder handles. */
struct SetPool {
	CircuitBuilder& cb;
	std::map<PosSet, CircuitBuilder::Wire> wires;
	std::vector<PosSet> order;
	std::size_t negatives = 0;

	CircuitBuilder::Wire get(const PosSet& s) const { return wires.at(s); }
	bool has(const PosSet& s) const { return wires.count(s) != 0; }
	void put(const PosSet& s, CircuitBuilder::Wire w) {
		if (wires.emplace(s, w).second) order.push_back(s);
	}
	PosSet keep_even(const PosSet& s) {
		PosSet r = even_positions(s);
		if (!has(r)) put(r, cb.add(even_net(), {get(s)})[0]);
		return r;
	}
	PosSet join(const PosSet& a, const PosSet& b) {
		PosSet r = union_positions(a, b);
		if (!has(r)) put(r, cb.add(or_net(2), {get(a), get(b)})[0]);
		return r;
	}
	PosSet subtract(const PosSet& a, const PosSet& b) {
		PosSet r = minus_positions(a, b);
		if (!has(r)) {
			put(r, cb.add(minus_net(), {get(a), get(b)})[0]);
			++negatives;
		}
		return r;
	}
};

bool subset_of(const PosSet& a, const PosSet& b) {
	return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Isolates {p} from the smallest realized subset of `active` containing it,
// using only even-position halving and unions with realized helper sets.
// Sets leaking positions already split off in earlier rounds are excluded;
// they would trap the halving in two-element cycles.
bool isolate_position(SetPool& pool, std::size_t p, const PosSet& active) {
	for (std::size_t guard = 0; guard < 64; ++guard) {
		PosSet cur;
		for (const auto& s : pool.order) {
			if (rank_of(s, p) != 0 && subset_of(s, active) &&
			    (cur.empty() || s.size() < cur.size())) {
				cur = s;
			}
		}
		if (cur.empty()) return false;
		if (cur.size() == 1) return true;
		const std::size_t r = rank_of(cur, p);
		if (r % 2 == 0) {
			pool.keep_even(cur);
			continue;
		}
		bool advanced = false;
		for (const auto& h : pool.order) {
			if (!subset_of(h, active)) continue;
			PosSet merged = union_positions(cur, h);
			if (merged.size() > cur.size() && merged.size() <= cur.size() + 2 &&
			    rank_of(merged, p) % 2 == 0) {
				pool.keep_even(pool.join(cur, h));
				advanced = true;
				break;
			}
		}
		if (!advanced) return false;
	}
	return false;
}

}  // namespace

CompileReport compile_low_negative(std::size_t m) {
	if (m == 0) throw CompileError("invalid-spec", "m must be positive");
	CircuitBuilder cb(1);
	SetPool pool{cb};
	PosSet all(m);
	for (std::size_t i = 0; i < m; ++i) all[i] = i + 1;
	pool.put(all, cb.inputs()[0]);
	CompileReport rep;
	PosSet active = all;
	while (active.size() > 1) {
		const std::size_t n = active.size();
		const std::size_t half = std::size_t{1} << (ceil_log2(n) - 1);
		// Pre-split chains shared by all extractions of this round.
		PosSet chain = active;
		while (chain.size() > 1) chain = pool.keep_even(chain);
		std::vector<std::size_t> uppers(active.begin() + half, active.end());
		bool need_odd_part = false;
		for (auto p : uppers) {
			if (!isolate_position(pool, p, active)) need_odd_part = true;
		}
		if (need_odd_part) {
			PosSet odd = pool.subtract(active, pool.keep_even(active));
			PosSet ochain = odd;
			while (ochain.size() > 1) ochain = pool.keep_even(ochain);
			for (auto p : uppers) {
				if (!isolate_position(pool, p, active)) {
					throw CompileError("internal",
					                   "position isolation failed for m=" +
					                       std::to_string(m));
				}
			}
		}
		PosSet removed{uppers.front()};
		for (std::size_t i = 1; i < uppers.size(); ++i) {
			removed = pool.join(removed, PosSet{uppers[i]});
		}
		active = pool.subtract(active, removed);
		rep.construction_trace.push_back("set-operations");
	}
	std::vector<CircuitBuilder::Wire> outputs;
	for (std::size_t p = 1; p <= m; ++p) {
		if (m == 1) {
			outputs.push_back(cb.inputs()[0]);
		} else {
			outputs.push_back(pool.get(PosSet{p}));
		}
	}
	rep.network = cb.build(outputs, MemoryInfinite{});
	rep.arch_stats = stats(rep.network);
	const std::size_t budget = 2 * ceil_log2(m);
	rep.bound_check.push_back(
	    upper_check("negative weights at most 2 ceil(log2 m)", ll(budget),
	                ll(rep.arch_stats.negative_weights)));
	const std::size_t lg = ceil_log2(m);
	rep.bound_check.push_back(upper_check(
	    "depth at most 4(1+log2 m)^2 + 4", ll(4 * (lg + 1) * (lg + 1) + 4),
	    ll(rep.arch_stats.depth)));
	return rep;
}

CompileReport compile_shallow_homogeneous(std::size_t m,
                                          const std::set<std::size_t>& out,
                                          const std::vector<Rat>& gaps,
                                          MemoryMode memory) {
	validate_out(m, out);
	if (gaps.size() + 1 != m) {
		throw CompileError("invalid-spec",
		                   "need exactly m-1 gaps between the m spikes");
	}
	require_positive_memory(memory, "the shallow construction");
	for (const auto& g : gaps) {
		if (g <= 0) throw CompileError("invalid-spec", "gaps must be positive");
	}
	// Accumulated factors: c_1 = 1, c_k = 1 + phi_k c_{k-1}; the hidden
	// weight interval for neuron k is (1/c_k, 1/c_{k-1}), nonempty exactly
	// when c is strictly increasing.
	std::vector<double> c(m + 1, 0.0);
	const bool infinite = is_infinite(memory);
	double h = 0.0;
	if (!infinite) h = rat_to_double(std::get<MemoryFinite>(memory).h);
	if (m >= 1) c[1] = 1.0;
	for (std::size_t k = 2; k <= m; ++k) {
		const double phi =
		    infinite ? 1.0 : std::exp(-rat_to_double(gaps[k - 2]) / h);
		c[k] = 1.0 + phi * c[k - 1];
		if (!(c[k] > c[k - 1])) {
			double dmin = rat_to_double(gaps[0]), dmax = dmin;
			for (const auto& g : gaps) {
				dmin = std::min(dmin, rat_to_double(g));
				dmax = std::max(dmax, rat_to_double(g));
			}
			const double qq = infinite ? 1.0 : std::exp(-dmin / h);
			const double rhs =
			    infinite ? 1e300
			             : h * std::log((1.0 - std::pow(qq, (double)m)) /
			                            (1.0 - std::pow(qq, (double)m - 1)));
			throw CompileError(
			    "gap-condition",
			    "accumulated factor stalls at position " + std::to_string(k) +
			        ": c_k = " + std::to_string(c[k]) + " <= c_{k-1} = " +
			        std::to_string(c[k - 1]) + "; gap spread " +
			        std::to_string(dmax - dmin) +
			        " is not below the admissible bound " +
			        std::to_string(rhs));
		}
	}
	std::vector<Rat> w(m + 1);
	if (infinite) {
		// c_k = k exactly; any weight in (1/k, 1/(k-1)) works.
		w[1] = 2;
		for (std::size_t k = 2; k <= m; ++k) w[k] = Rat(2) / Rat(2 * (long)k - 1);
	} else {
		// Bisection on the monotone accumulated response w * c_k = 1.
		auto root = [&](std::size_t k) {
			double lo = 0.0, hi = 2.0;
			for (int it = 0; it < 80; ++it) {
				const double mid = (lo + hi) / 2;
				(mid * c[k] > 1.0 ? hi : lo) = mid;
			}
			return (lo + hi) / 2;
		};
		double prev = 2.0;
		for (std::size_t k = 1; k <= m; ++k) {
			const double rk = root(k);
			w[k] = k == 1 ? Rat(2) : Rat((rk + prev) / 2);
			prev = rk;
		}
	}
	std::vector<LayerEntry> l1, l2;
	for (std::size_t k = 1; k <= m; ++k) {
		l1.push_back({k - 1, 0, w[k]});
		Rat sign = out.count(k) ? Rat(1) : Rat(-1);
		Rat mag = 1;
		for (std::size_t i = 0; i < k; ++i) mag *= 2;
		l2.push_back({0, k - 1, sign * mag});
	}
	CompileReport rep;
	rep.network = Network({SparseLayer(m, 1, std::move(l1)),
	                       SparseLayer(1, m, std::move(l2))},
	                      std::move(memory));
	rep.arch_stats = stats(rep.network);
	rep.construction_trace = {"shallow-layer", "output"};
	rep.bound_check.push_back(
	    exact_check("two layers", 2, ll(rep.arch_stats.depth)));
	rep.bound_check.push_back(exact_check("widths (1, m, 1)", ll(m + 2),
	                                      ll(rep.arch_stats.total_neurons)));
	rep.bound_check.push_back(exact_check(
	    "2m weights", ll(2 * m), ll(rep.arch_stats.nonzero_weights)));
	return rep;
}

CompileReport compile_spec(const FunctionSpec& spec, MemoryMode memory) {
	if (const auto* f = std::get_if<FiniteSpec>(&spec)) {
		return compile_single_input(*f, std::move(memory));
	}
	if (const auto* p = std::get_if<PeriodicSpec>(&spec)) {
		return compile_single_input(*p, std::move(memory));
	}
	if (const auto* mk = std::get_if<MarkovianSpec>(&spec)) {
		return compile_markovian(*mk, std::move(memory));
	}
	if (const auto* cp = std::get_if<CompositionalSpec>(&spec)) {
		return compile_compositional(*cp, std::move(memory));
	}
	return compile_classifier(std::get<ClassifierSpec>(spec),
	                          std::move(memory));
}

std::string CompileReport::report_json() const {
	nlohmann::json j;
	j["stats"] = {{"depth", arch_stats.depth},
	              {"widths", arch_stats.widths},
	              {"neurons", arch_stats.total_neurons},
	              {"weights", arch_stats.nonzero_weights},
	              {"negative_weights", arch_stats.negative_weights},
	              {"max_out_degree", arch_stats.max_out_degree}};
	j["bound_check"] = nlohmann::json::array();
	for (const auto& b : bound_check) {
		j["bound_check"].push_back({{"claim", b.claim},
		                            {"expected", b.expected},
		                            {"observed", b.observed},
		                            {"upper_bound", b.upper_bound},
		                            {"pass", b.pass}});
	}
	j["construction_trace"] = construction_trace;
	return j.dump();
}

}  // namespace snn
