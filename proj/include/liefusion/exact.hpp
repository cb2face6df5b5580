#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace liefusion {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string to_string(const Int& v);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& r);

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Requires is_integer(r).
Int rat_to_int(const Rat& r);

std::int64_t to_int64(const Int& v);

}  // namespace liefusion
