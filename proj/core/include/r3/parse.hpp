#pragma once

/**
 * @file parse.hpp
 * @brief Text grammars for elements, quaternions, polynomials and matrices.
 *
 * Element: signed terms `<real>[*]<basis>` with basis tokens
 * 1, e0, e1, e2, e3, e12, e13, e23, e123, e.g. `2e23 - e1 + 3`, or eight
 * comma-separated reals in basis order. Whitespace is ignored. A real may
 * carry an exponent written `E` (or `e` directly followed by a sign), so
 * `2e23` is always 2 times e23 while `2E23` and `2e+23` are 2 * 10^23.
 *
 * Polynomial (right coefficients, lowest degree first):
 *   coeffs: [<element>, <element>, ...]
 *   [<real> *] (x - <element>) * (x + <element>) * ...
 *   terms such as  x^2 - x*e12 + x*(e1 + e2) - 3
 *
 * Matrix: [[<element>, <element>], [<element>, <element>]].
 *
 * All functions throw ParseError carrying the input and the byte offset.
 */

#include <optional>
#include <string_view>

#include "r3/bislice.hpp"
#include "r3/clifford3.hpp"
#include "r3/qdet.hpp"
#include "r3/qsplit.hpp"
#include "r3/zeros.hpp"

namespace r3 {

Element parse_element(std::string_view text);

// Element grammar restricted to 1, e0, e23, e13, e12.
Quat parse_quat(std::string_view text);

struct ParsedPoly {
  BiSlicePoly poly;
  // Set when the input used the factored form.
  std::optional<FactoredPoly> factored;
};

ParsedPoly parse_polynomial(std::string_view text);

Matrix2 parse_matrix(std::string_view text);

// Real number with the exponent rule above.
double parse_real(std::string_view text);

}  // namespace r3
