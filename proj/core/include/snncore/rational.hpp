#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace snn {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* Parses "p/q" or a plain integer string into an exact rational. */
inline Rat parse_rat(const std::string& s) {
	auto slash = s.find('/');
	try {
		if (slash == std::string::npos) {
			return Rat(BigInt(s));
		}
		BigInt num(s.substr(0, slash));
		BigInt den(s.substr(slash + 1));
		if (den == 0) {
			throw std::invalid_argument("zero denominator");
		}
		return Rat(num, den);
	} catch (const std::exception&) {
		throw std::invalid_argument("malformed rational: '" + s + "'");
	}
}

/* Renders a rational as "p/q", or "p" when the denominator is 1. */
inline std::string rat_to_string(const Rat& r) {
	if (denominator(r) == 1) {
		return numerator(r).str();
	}
	return numerator(r).str() + "/" + denominator(r).str();
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace snn
