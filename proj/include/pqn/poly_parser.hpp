#pragma once

#include <string>

#include "pqn/chart.hpp"
#include "pqn/polynomial.hpp"

namespace pqn {

/// Parses a polynomial expression over the chart's variables.
///
/// Grammar: integers, rationals as p/q, declared variable names, operators
/// + - *, ^ with a nonnegative integer exponent, parentheses; whitespace is
/// insignificant. '/' appears only inside rational literals.
///
/// Throws ParseError with 1-based line/column on malformed input, unknown
/// variables, or degree-cap violations.
Polynomial parsePolynomial(const std::string& text, const Chart& chart);

}  // namespace pqn
