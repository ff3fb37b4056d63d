#pragma once

// Polynomial text format: whitespace-separated coefficients, ascending by
// power. Each coefficient is "re", "imi", or "re+imi" / "re-imi"; numbers
// are decimal literals (float mode) or integers and fractions p/q (both
// modes). The imaginary magnitude may be omitted ("i", "-i", "2-i").
//
//   "1 -2.5 1"          x^2 - 2.5x + 1
//   "0-1i 0 0+1i"       i x^2 - i
//   "1/2+3/4i 1"        x + 1/2 + 3/4 i   (exact mode)

#include <string>
#include <string_view>

#include "sipoly/matrix.hpp"
#include "sipoly/poly.hpp"

namespace sipoly {

/// Throws ParseError (column is 1-based in `text`) on malformed or empty
/// input and on decimal literals in exact mode.
template <Scalar S>
Poly<S> parse_poly(std::string_view text);

/// One coefficient; `column` is the 1-based position reported on error.
template <Scalar S>
S parse_scalar(std::string_view token, std::size_t column = 1);

/// Rows separated by ';', entries as in parse_poly: "2 0; 0 2".
template <Scalar S>
Matrix<S> parse_matrix(std::string_view text);

/// Round-trips through parse_poly ("%.17g" in float mode).
std::string format_scalar(const Complex& z);
std::string format_scalar(const GaussRational& z);

template <Scalar S>
std::string format_poly(const Poly<S>& g);

}  // namespace sipoly
