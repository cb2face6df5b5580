#pragma once

#include "liefusion/root_system.hpp"
#include "liefusion/tensor.hpp"

#include <string>

namespace liefusion {

// Command-line weight syntax: comma-separated Dynkin labels, e.g. "0,0,0,1".
Weight parse_weight(const std::string& s, int rank);

// "(n1,n2,n3,n4)".
std::string format_weight(const Weight& w);

// Compressed "(n1n2n3n4)" when all labels are single digits and nonnegative,
// otherwise the comma form.
std::string format_weight_compact(const Weight& w);

// Orthogonal-basis rendering with halves as a common fraction prefix,
// e.g. "1/2[1,-1,-1,-1]" or "[0,1,-1,0]".
std::string format_ortho(const OrthoVec& v);

// "(0000)+(0001)+2(0010)+..." with components ordered by (dimension, labels).
std::string format_decomposition(const RootSystem& R, const Decomposition& dec);

}  // namespace liefusion
