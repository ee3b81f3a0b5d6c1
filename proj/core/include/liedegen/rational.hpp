#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace liedegen {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace liedegen
