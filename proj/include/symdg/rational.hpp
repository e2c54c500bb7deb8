#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace symdg {

// Exact rational coefficients. Always stored in lowest terms with a
// positive denominator; zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Rational inv_factorial(unsigned n) {
    return Rational(1) / Rational(factorial(n));
}

inline std::string to_string(const Rational& r) { return r.str(); }

// (-1)^e for a possibly negative exponent.
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace symdg
