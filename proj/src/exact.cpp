#include "liefusion/exact.hpp"

#include <stdexcept>

namespace liefusion {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

Int rat_to_int(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("rational " + to_string(r) + " is not an integer");
  return numerator(r);
}

std::int64_t to_int64(const Int& v) { return v.convert_to<std::int64_t>(); }

}  // namespace liefusion
