#pragma once

#include <string>

#include "r3/clifford3.hpp"
#include "r3/qsplit.hpp"

namespace r3 {

// Pretty: 12 significant digits, coefficients below 1e-12 dropped.
// Full: shortest text that reads back to the same double.
enum class Precision { Pretty, Full };

std::string format_real(double v, Precision precision = Precision::Pretty);

// Signed-term form, e.g. "3 - e1 + 2e23". Exponents are written with an
// upper-case E so that "2e23" always means 2 times e23.
std::string format(const Element& x, Precision precision = Precision::Pretty);
std::string format(const Quat& q, Precision precision = Precision::Pretty);

// "(p | q)"
std::string format(const QuatPair& pair, Precision precision = Precision::Pretty);

std::string_view blade_name(Blade b);

}  // namespace r3
