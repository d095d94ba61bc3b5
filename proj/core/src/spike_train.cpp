#include <snncore/spike_train.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace snn {

SpikeTrain::SpikeTrain(std::vector<Time> times) : times_(std::move(times)) {
	for (std::size_t i = 0; i < times_.size(); ++i) {
		if (times_[i] <= 0) {
			throw std::invalid_argument("spike times must be positive");
		}
		if (i > 0 && times_[i - 1] >= times_[i]) {
			throw std::invalid_argument("spike times must be strictly increasing");
		}
	}
}

SpikeTrain SpikeTrain::from_ints(const std::vector<long>& times) {
	std::vector<Time> ts(times.begin(), times.end());
	return SpikeTrain(std::move(ts));
}

bool SpikeTrain::contains(const Time& t) const {
	return std::binary_search(times_.begin(), times_.end(), t);
}

const Time& SpikeTrain::nth(std::size_t j) const {
	if (j < 1 || j > times_.size()) {
		throw std::out_of_range("spike index out of range");
	}
	return times_[j - 1];
}

bool dominates(const SpikeTrain& a, const SpikeTrain& b) {
	return std::includes(b.times().begin(), b.times().end(), a.times().begin(),
	                     a.times().end());
}

std::map<Time, std::size_t> ordering_rank(const SpikeTrain& train) {
	std::map<Time, std::size_t> rank;
	for (std::size_t i = 0; i < train.size(); ++i) {
		rank[train.times()[i]] = i + 1;
	}
	return rank;
}

SpikeTrain train_union(const std::vector<SpikeTrain>& trains) {
	std::set<Time> all;
	for (const auto& t : trains) {
		all.insert(t.times().begin(), t.times().end());
	}
	return SpikeTrain(std::vector<Time>(all.begin(), all.end()));
}

SpikeTrain restrict_open(const SpikeTrain& a, const Time& lo, const Time& hi) {
	std::vector<Time> out;
	for (const auto& t : a.times()) {
		if (t > lo && t < hi) out.push_back(t);
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain restrict_halfopen(const SpikeTrain& a, const Time& lo,
                             const Time& hi) {
	std::vector<Time> out;
	for (const auto& t : a.times()) {
		if (t > lo && t <= hi) out.push_back(t);
	}
	return SpikeTrain(std::move(out));
}

SpikeTrain truncate_at(const SpikeTrain& a, const Time& t) {
	std::vector<Time> out;
	for (const auto& x : a.times()) {
		if (x <= t) out.push_back(x);
	}
	return SpikeTrain(std::move(out));
}

MonotoneMap::MonotoneMap(std::vector<std::pair<Time, Time>> knots,
                         Rat final_slope)
    : knots_(std::move(knots)), final_slope_(std::move(final_slope)) {
	if (final_slope_ <= 0) {
		throw std::invalid_argument("monotone map needs positive slope");
	}
	Time px = 0, py = 0;
	for (const auto& [x, y] : knots_) {
		if (x <= px || y <= py) {
			throw std::invalid_argument("monotone map knots must strictly increase");
		}
		px = x;
		py = y;
	}
}

Time MonotoneMap::operator()(const Time& t) const {
	Time px = 0, py = 0;
	for (const auto& [x, y] : knots_) {
		if (t <= x) {
			return py + (y - py) / (x - px) * (t - px);
		}
		px = x;
		py = y;
	}
	return py + final_slope_ * (t - px);
}

MonotoneMap MonotoneMap::inverse() const {
	std::vector<std::pair<Time, Time>> inv;
	inv.reserve(knots_.size());
	for (const auto& [x, y] : knots_) {
		inv.emplace_back(y, x);
	}
	return MonotoneMap(std::move(inv), Rat(1) / final_slope_);
}

SpikeTrain apply_monotone(const SpikeTrain& train, const MonotoneMap& map) {
	std::vector<Time> out;
	out.reserve(train.size());
	for (const auto& t : train.times()) {
		out.push_back(map(t));
	}
	return SpikeTrain(std::move(out));
}

std::vector<SpikeTrain> read_trains(std::istream& in) {
	std::vector<SpikeTrain> trains;
	std::string line;
	while (std::getline(in, line)) {
		bool had_comment = false;
		if (auto hash = line.find('#'); hash != std::string::npos) {
			line.erase(hash);
			had_comment = true;
		}
		std::istringstream ls(line);
		std::vector<Time> times;
		std::string tok;
		while (ls >> tok) {
			times.push_back(parse_rat(tok));
		}
		if (times.empty() && had_comment) {
			continue;  // comment-only line, not an empty train
		}
		trains.emplace_back(std::move(times));
	}
	return trains;
}

void write_trains(std::ostream& out, const std::vector<SpikeTrain>& trains) {
	for (const auto& tr : trains) {
		for (std::size_t i = 0; i < tr.size(); ++i) {
			if (i) out << ' ';
			out << rat_to_string(tr.times()[i]);
		}
		out << '\n';
	}
}

}  // namespace snn
