#pragma once

#include <snncore/rational.hpp>

#include <iosfwd>
#include <map>
#include <vector>

namespace snn {

using Time = Rat;

/*
 * A finite, strictly increasing sequence of positive rational time labels.
 * Conceptually a prefix of an infinite train; every predicate on prefixes is
 * sound because outputs up to time t depend only on inputs up to t.
 */
class SpikeTrain {
 public:
	SpikeTrain() = default;
	explicit SpikeTrain(std::vector<Time> times);

	static SpikeTrain from_ints(const std::vector<long>& times);

	const std::vector<Time>& times() const { return times_; }
	std::size_t size() const { return times_.size(); }
	bool empty() const { return times_.empty(); }
	bool contains(const Time& t) const;

	// 1-based index of the j-th spike.
	const Time& nth(std::size_t j) const;

	bool operator==(const SpikeTrain& o) const = default;

 private:
	std::vector<Time> times_;
};

bool dominates(const SpikeTrain& a, const SpikeTrain& b);

std::map<Time, std::size_t> ordering_rank(const SpikeTrain& train);

SpikeTrain train_union(const std::vector<SpikeTrain>& trains);

// Spikes of `a` strictly inside / within (lo, hi] style windows.
SpikeTrain restrict_open(const SpikeTrain& a, const Time& lo, const Time& hi);
SpikeTrain restrict_halfopen(const SpikeTrain& a, const Time& lo, const Time& hi);
SpikeTrain truncate_at(const SpikeTrain& a, const Time& t);  // keep times ≤ t

/*
 * Strictly increasing piecewise-linear bijection of (0,∞) with rational
 * knots. The map interpolates (0,0) -> knots in order; past the last knot it
 * continues with `final_slope` (slope 1 by default, i.e. a shifted identity;
 * with no knots and slope 1 it is the identity).
 */
class MonotoneMap {
 public:
	MonotoneMap() = default;
	MonotoneMap(std::vector<std::pair<Time, Time>> knots, Rat final_slope = 1);

	Time operator()(const Time& t) const;
	MonotoneMap inverse() const;

	const std::vector<std::pair<Time, Time>>& knots() const { return knots_; }
	const Rat& final_slope() const { return final_slope_; }

 private:
	std::vector<std::pair<Time, Time>> knots_;
	Rat final_slope_ = 1;
};

SpikeTrain apply_monotone(const SpikeTrain& train, const MonotoneMap& map);

/*
 * Text format: one train per line, times as `p/q` or integers, ascending,
 * space separated; `#` starts a comment; an empty line is an empty train.
 */
std::vector<SpikeTrain> read_trains(std::istream& in);
void write_trains(std::ostream& out, const std::vector<SpikeTrain>& trains);

}  // namespace snn
