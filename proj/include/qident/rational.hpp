#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qident/errors.hpp"

namespace qident {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator. Every coefficient in the engine lives here.
using Rational = boost::multiprecision::cpp_rational;

// Canonical "num/den" form, e.g. "3/1", "-1/2". Decimal-free by construction.
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "n", "n/d" and "-n/d". Inverse of rational_to_string.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw DivisionByZero("rational literal with zero denominator: " + s);
    return Rational(num, den);
}

}  // namespace qident
