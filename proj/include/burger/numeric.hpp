#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace burger {

// All arithmetic in this project is exact: arbitrary-precision integers for
// degrees, exponents and counts, rationals for coefficients and invariants.
// No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical form "p/q" in lowest terms with q > 0; plain "p" when q == 1.
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline char sign_char(int s) { return s >= 0 ? '+' : '-'; }

}  // namespace burger
