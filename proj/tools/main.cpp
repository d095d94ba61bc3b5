#include <snncore/compiler.hpp>
#include <snncore/expressivity.hpp>
#include <snncore/funcspec.hpp>
#include <snncore/gadgets.hpp>
#include <snncore/network.hpp>
#include <snncore/rnn_bridge.hpp>
#include <snncore/simulator.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace snn;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
	if (out_path.empty()) {
		std::cout << text;
		if (!text.empty() && text.back() != '\n') std::cout << '\n';
		return;
	}
	std::ofstream out(out_path);
	if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
	out << text;
}

std::vector<SpikeTrain> load_trains(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open '" + path + "'");
	return read_trains(in);
}

std::string trains_text(const std::vector<SpikeTrain>& trains) {
	std::ostringstream out;
	write_trains(out, trains);
	return out.str();
}

int run_compile(const std::string& spec_path, const std::string& memory_str,
                std::size_t outdegree, const std::string& out_path) {
	const FunctionSpec spec = spec_from_json(slurp(spec_path));
	const MemoryMode memory = memory_from_string(memory_str);
	CompileReport report;
	if (outdegree > 0) {
		if (const auto* f = std::get_if<FiniteSpec>(&spec)) {
			report = compile_bounded_outdegree(*f, outdegree, memory);
		} else if (const auto* p = std::get_if<PeriodicSpec>(&spec)) {
			report = compile_bounded_outdegree(*p, outdegree, memory);
		} else {
			throw CompileError("unsupported-spec",
			                   "--outdegree needs a single-input spec");
		}
	} else {
		report = compile_spec(spec, memory);
	}
	const std::string rep = report.report_json();
	if (!out_path.empty()) {
		emit(out_path, serialize(report.network, "{}", rep));
	}
	std::cout << rep << "\n";
	for (const auto& b : report.bound_check) {
		if (!b.pass) return kExitFail;
	}
	return kExitPass;
}

int run_simulate(const std::string& net_path, const std::string& in_path,
                 const std::string& memory_str, const std::string& out_path,
                 const std::string& trace_path) {
	Network net = deserialize(slurp(net_path));
	if (!memory_str.empty()) {
		net = net.with_memory(memory_from_string(memory_str));
	}
	const auto inputs = load_trains(in_path);
	if (inputs.size() != net.input_count()) {
		throw std::invalid_argument("network expects " +
		                            std::to_string(net.input_count()) +
		                            " input trains, file has " +
		                            std::to_string(inputs.size()));
	}
	emit(out_path, trains_text(simulate_network(net, inputs)));
	if (!trace_path.empty()) {
		std::ofstream tr(trace_path);
		if (!tr) {
			throw std::invalid_argument("cannot write '" + trace_path + "'");
		}
		write_trace_csv(tr, simulate_network_trace(net, inputs));
	}
	return kExitPass;
}

int run_verify(const std::string& net_path, const std::string& spec_path,
               std::size_t horizon, std::uint64_t seed, std::size_t trials,
               std::size_t budget, const std::string& out_path) {
	const Network net = deserialize(slurp(net_path));
	const FunctionSpec spec = spec_from_json(slurp(spec_path));
	const std::size_t d = spec_arity(spec);
	if (net.input_count() != d) {
		throw std::invalid_argument("arity mismatch: network takes " +
		                            std::to_string(net.input_count()) +
		                            " inputs, spec takes " + std::to_string(d));
	}
	nlohmann::json j;
	j["claim"] = "network output equals the declared function";
	j["horizon"] = horizon;
	j["seed"] = seed;
	if (horizon == 0) {
		j["mode"] = "vacuous";
		j["warning"] = "horizon 0 checks nothing";
		j["pass"] = true;
		emit(out_path, j.dump(2));
		return kExitPass;
	}
	std::vector<std::vector<SpikeTrain>> cases;
	double combos = 1;
	for (std::size_t t = 0; t < horizon; ++t) {
		combos *= (double)((1u << d) - 1);
	}
	if (combos <= (double)budget) {
		j["mode"] = "exhaustive+random";
		cases = enumerate_canonical_inputs(d, horizon, budget);
	} else {
		j["mode"] = "random";
	}
	std::mt19937_64 rng(seed);
	for (std::size_t t = 0; t < trials; ++t) {
		std::vector<SpikeTrain> tuple;
		for (std::size_t i = 0; i < d; ++i) {
			tuple.push_back(random_integer_train(rng, horizon));
		}
		const MonotoneMap map = random_monotone_map(rng);
		for (auto& train : tuple) train = apply_monotone(train, map);
		cases.push_back(std::move(tuple));
	}
	j["cases"] = cases.size();
	for (const auto& tuple : cases) {
		const SpikeTrain want = eval_oracle(spec, tuple);
		const SpikeTrain got = simulate_network(net, tuple)[0];
		if (got != want) {
			nlohmann::json cx;
			cx["inputs"] = nlohmann::json::array();
			for (const auto& t : tuple) {
				nlohmann::json jt = nlohmann::json::array();
				for (const auto& x : t.times()) jt.push_back(rat_to_string(x));
				cx["inputs"].push_back(std::move(jt));
			}
			auto dump = [](const SpikeTrain& t) {
				nlohmann::json a = nlohmann::json::array();
				for (const auto& x : t.times()) a.push_back(rat_to_string(x));
				return a;
			};
			cx["expected"] = dump(want);
			cx["observed"] = dump(got);
			j["counterexample"] = std::move(cx);
			j["pass"] = false;
			emit(out_path, j.dump(2));
			return kExitFail;
		}
	}
	j["pass"] = true;
	emit(out_path, j.dump(2));
	return kExitPass;
}

int run_convert(const std::string& net_path, const std::string& delta_str,
                const std::string& in_path, std::size_t horizon,
                const std::string& out_path) {
	const Network net = deserialize(slurp(net_path));
	const Rat delta = parse_rat(delta_str);
	const StateSpaceNet rnn = snn_to_rnn(net, delta);
	emit(out_path, serialize_rnn(rnn));
	if (!in_path.empty()) {
		const auto trains = load_trains(in_path);
		const BinaryStream input = encode_grid(trains, delta, horizon);
		const BinaryStream output = simulate_rnn(rnn, input);
		std::cout << "# input stream\n"
		          << stream_to_text(input) << "# output stream\n"
		          << stream_to_text(output);
	}
	return kExitPass;
}

int run_count(const std::string& family, std::size_t m, std::size_t r,
              std::size_t d, const std::string& in_path,
              const std::string& memory_str, std::size_t budget,
              const std::string& out_path) {
	nlohmann::json j;
	if (!in_path.empty()) {
		// Unit census over tuples read as consecutive groups of d trains.
		const auto trains = load_trains(in_path);
		if (d == 0 || trains.size() % d != 0) {
			throw std::invalid_argument(
			    "the train count must be a positive multiple of --d");
		}
		std::vector<std::vector<SpikeTrain>> tuples;
		for (std::size_t i = 0; i < trains.size(); i += d) {
			tuples.emplace_back(trains.begin() + i, trains.begin() + i + d);
		}
		const MemoryMode memory = memory_from_string(memory_str);
		const auto pv = potential_vectors(tuples, memory);
		const auto census = enumerate_unit_functions(d, tuples, memory, budget);
		j["mode"] = "unit-census";
		j["window_vectors"] = pv.size();
		j["distinct_functions"] = census.count;
		j["upper_bound"] = unit_count_upper(d, pv.size());
		j["pass"] = (double)census.count <= unit_count_upper(d, pv.size());
		j["witnesses"] = nlohmann::json::array();
		for (const auto& w : census.witnesses) {
			nlohmann::json jw = nlohmann::json::array();
			for (const auto& x : w) jw.push_back(rat_to_string(x));
			j["witnesses"].push_back(std::move(jw));
		}
	} else {
		TargetClass cls;
		if (family == "fin") {
			cls = TargetClass::finite;
		} else if (family == "per") {
			cls = TargetClass::periodic;
		} else if (family == "mm") {
			cls = TargetClass::markovian;
		} else {
			throw std::invalid_argument("--family must be fin, per, or mm");
		}
		const auto lb = lower_bound_params(cls, m, r, d);
		j["mode"] = "target-class";
		j["family"] = family;
		j["m"] = m;
		j["r"] = r;
		j["d"] = d;
		j["count"] = count_target_functions(cls, m, r, d).str();
		j["weight_lower_bound"] = rat_to_string(lb.weight_bound);
		j["neuron_lower_bound"] = lb.neuron_bound;
		j["exact"] = lb.exact;
		j["pass"] = true;
	}
	emit(out_path, j.dump(2));
	return j["pass"].get<bool>() ? kExitPass : kExitFail;
}

int run_check(const std::string& which, const std::string& phi_str,
              std::uint64_t seed, std::size_t trials,
              const std::string& out_path) {
	std::vector<CheckReport> reports;
	if (which == "shallow" || which == "all") {
		for (const auto& r : shallow_counterexample_check(parse_rat(phi_str))) {
			reports.push_back(r);
		}
	}
	if (which == "integer" || which == "all") {
		for (const auto& r : integer_real_separation_check(seed, trials)) {
			reports.push_back(r);
		}
	}
	if (reports.empty()) {
		throw std::invalid_argument("--which must be shallow, integer, or all");
	}
	emit(out_path, reports_to_json(reports));
	for (const auto& r : reports) {
		if (!r.pass) return kExitFail;
	}
	return kExitPass;
}

std::set<std::uint32_t> load_patterns(const std::string& path, std::size_t m) {
	std::set<std::uint32_t> patterns;
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open '" + path + "'");
	std::string line;
	while (std::getline(in, line)) {
		if (!line.empty() && line.back() == '\r') line.pop_back();
		const auto hash = line.find('#');
		if (hash != std::string::npos) line = line.substr(0, hash);
		while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
			line.pop_back();
		}
		while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
			line.erase(line.begin());
		}
		if (line.empty()) continue;
		std::uint32_t mask = 0;
		if (line.size() == m &&
		    line.find_first_not_of("01") == std::string::npos) {
			// m characters, oldest window position first
			for (std::size_t i = 0; i < m; ++i) {
				if (line[i] == '1') mask |= 1u << i;
			}
		} else {
			mask = (std::uint32_t)std::stoul(line);
		}
		if (mask >= (1u << m)) {
			throw std::invalid_argument("pattern '" + line +
			                            "' does not fit in " +
			                            std::to_string(m) + " bits");
		}
		patterns.insert(mask);
	}
	return patterns;
}

int run_demo(std::size_t m, const std::string& patterns_path,
             std::uint64_t seed, std::size_t length,
             const std::string& theta_str, bool complement,
             const std::string& memory_str, const std::string& out_path) {
	if (m == 0 || m > 16) throw std::invalid_argument("need 1 <= m <= 16");
	const std::set<std::uint32_t> patterns =
	    patterns_path.empty() ? std::set<std::uint32_t>{}
	                          : load_patterns(patterns_path, m);
	const MemoryMode memory = memory_from_string(memory_str);
	const Rat theta = parse_rat(theta_str);
	if (theta < 0 || theta > 1) {
		throw std::invalid_argument("--theta must lie in [0, 1]");
	}

	// Synthetic input: Bernoulli(theta) spikes on the grid 1..length.
	std::mt19937_64 rng(seed);
	std::vector<Time> grid, spikes;
	for (std::size_t t = 1; t <= length; ++t) {
		grid.push_back(Rat((long)t));
		if (Rat((long)(rng() % 1000000), 1000000) < theta) {
			spikes.push_back(Rat((long)t));
		}
	}
	const SpikeTrain D{grid}, I{spikes};

	const ClassifierSpec spec{m, patterns};
	const Network net = compile_classifier(spec, memory).network;
	SpikeTrain out = simulate_network(net, {I, D})[0];
	SpikeTrain want = eval_oracle(FunctionSpec{spec}, {I, D});
	if (complement) {
		// Spike exactly on the non-matches: subtract the matches from an
		// always-accepting classifier through a two-input difference stage.
		std::set<std::uint32_t> all, rest;
		for (std::uint32_t p = 0; p < (1u << m); ++p) all.insert(p);
		const Network full =
		    compile_classifier(ClassifierSpec{m, all}, memory).network;
		const SpikeTrain gate = simulate_network(full, {I, D})[0];
		out = simulate_network(minus_net().with_memory(memory),
		                       {gate, out})[0];
		for (std::uint32_t p : all) {
			if (!patterns.count(p)) rest.insert(p);
		}
		want = eval_oracle(FunctionSpec{ClassifierSpec{m, rest}}, {I, D});
	}

	std::ostringstream report;
	report << "# t  input  network  oracle\n";
	bool match = true;
	for (std::size_t t = 1; t <= length; ++t) {
		const Rat rt((long)t);
		const bool a = I.contains(rt), b = out.contains(rt),
		           c = want.contains(rt);
		match = match && b == c;
		report << t << "  " << (a ? 1 : 0) << "  " << (b ? 1 : 0) << "  "
		       << (c ? 1 : 0) << "\n";
	}
	report << (match ? "# MATCH\n" : "# MISMATCH\n");
	emit(out_path, report.str());
	return match ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{
	    "snn: compile declarative spike-train functions to feedforward "
	    "spiking networks, simulate them exactly, and verify the results.\n"
	    "Exit codes: 0 pass, 1 verification or bound failure, 2 usage error."};
	app.require_subcommand(1);

	std::string spec_path, net_path, in_path, out_path, trace_path;
	std::string memory_str = "infinite";
	std::string delta_str = "1", family = "fin", which = "all";
	std::string phi_str = "1/2", theta_str = "1/2", patterns_path;
	std::size_t horizon = 8, trials = 100, budget = 200000;
	std::size_t outdegree = 0, m = 1, r = 1, d = 1, length = 50;
	std::uint64_t seed = 1;
	bool complement = false;

	auto* compile = app.add_subcommand(
	    "compile", "Synthesize a network from a declarative spec (JSON)");
	compile->add_option("--spec", spec_path, "spec JSON file")->required();
	compile->add_option("--memory", memory_str, "zero | inf | h=P/Q");
	compile->add_option("--outdegree", outdegree,
	                    "limit fan-out to q >= 4 (single-input specs)");
	compile->add_option("--out", out_path, "write the network file here");

	auto* simulate =
	    app.add_subcommand("simulate", "Run a network on input trains");
	simulate->add_option("--net", net_path, "network file")->required();
	simulate->add_option("--inputs", in_path, "train file")->required();
	simulate->add_option("--memory", memory_str, "override the memory mode")
	    ->default_str("");
	simulate->add_option("--out", out_path, "write output trains here");
	simulate->add_option("--trace", trace_path, "write a potential trace CSV");

	auto* verify = app.add_subcommand(
	    "verify", "Differential-test a network against a spec");
	verify->add_option("--net", net_path, "network file")->required();
	verify->add_option("--spec", spec_path, "spec JSON file")->required();
	verify->add_option("--horizon", horizon, "time horizon");
	verify->add_option("--seed", seed, "random seed");
	verify->add_option("--trials", trials, "random trials");
	verify->add_option("--budget", budget, "exhaustive-case ceiling");
	verify->add_option("--out", out_path, "write the report here");

	auto* convert = app.add_subcommand(
	    "convert", "Lower a network to a discrete-time state-space net");
	convert->add_option("--net", net_path, "network file")->required();
	convert->add_option("--delta", delta_str, "grid spacing P/Q");
	convert->add_option("--inputs", in_path, "also run these trains");
	convert->add_option("--horizon", horizon, "grid steps for --inputs");
	convert->add_option("--out", out_path, "write the state-space net here");

	auto* count = app.add_subcommand(
	    "count", "Exact function counts and distinct-function censuses");
	count->add_option("--family", family, "fin | per | mm");
	count->add_option("--m", m, "window length");
	count->add_option("--r", r, "sparsity");
	count->add_option("--d", d, "arity");
	count->add_option("--inputs", in_path,
	                  "census mode: train file, tuples of d lines");
	count->add_option("--memory", memory_str, "zero | inf");
	count->add_option("--budget", budget, "census candidate ceiling");
	count->add_option("--out", out_path, "write the report here");

	auto* check = app.add_subcommand(
	    "check", "Run the impossibility and separation checkers");
	check->add_option("--which", which, "shallow | integer | all");
	check->add_option("--phi", phi_str, "first decay factor, in (0,1)");
	check->add_option("--seed", seed, "random seed");
	check->add_option("--trials", trials, "separation sample count");
	check->add_option("--out", out_path, "write the report here");

	auto* demo = app.add_subcommand(
	    "demo", "Pattern classifier on a synthetic binary stream");
	demo->add_option("--m", m, "window length")->required();
	demo->add_option("--patterns", patterns_path,
	                 "pattern file: integer masks or m-character 0/1 lines");
	demo->add_option("--seed", seed, "stream seed")->required();
	demo->add_option("--length", length, "stream length");
	demo->add_option("--theta", theta_str, "spike probability P/Q");
	demo->add_flag("--complement", complement,
	               "spike on non-matches via a difference stage");
	demo->add_option("--memory", memory_str, "zero | inf | h=P/Q");
	demo->add_option("--out", out_path, "write the trace here");

	auto* catalog = app.add_subcommand(
	    "catalog", "Emit the building-block catalog as JSON");
	catalog->add_option("--out", out_path, "write the catalog here");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
	}

	try {
		if (compile->parsed()) {
			return run_compile(spec_path, memory_str, outdegree, out_path);
		}
		if (simulate->parsed()) {
			const bool overridden = simulate->count("--memory") > 0;
			return run_simulate(net_path, in_path,
			                    overridden ? memory_str : std::string(),
			                    out_path, trace_path);
		}
		if (verify->parsed()) {
			return run_verify(net_path, spec_path, horizon, seed, trials,
			                  budget, out_path);
		}
		if (convert->parsed()) {
			return run_convert(net_path, delta_str, in_path, horizon,
			                   out_path);
		}
		if (count->parsed()) {
			const bool census = count->count("--inputs") > 0;
			return run_count(family, m, r, d, census ? in_path : "",
			                 memory_str, budget, out_path);
		}
		if (check->parsed()) {
			return run_check(which, phi_str, seed, trials, out_path);
		}
		if (demo->parsed()) {
			return run_demo(m, patterns_path, seed, length, theta_str,
			                complement, memory_str, out_path);
		}
		if (catalog->parsed()) {
			emit(out_path, gadget_catalog_json());
			return kExitPass;
		}
	} catch (const CompileError& e) {
		std::cerr << "compile error: " << e.what() << "\n";
		return kExitFail;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitUsage;
}
