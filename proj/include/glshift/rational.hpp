#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace glshift {

// Exact rational arithmetic. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form the term maps rely on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational make_rational(long num, long den = 1) {
    return Rational(Integer(num), Integer(den));
}

}  // namespace glshift
