// Exact integer/rational arithmetic used by the analytic series and the
// enumeration oracle. Backed by Boost.Multiprecision (header-only).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace configprob {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) {
    return Rational(Integer(num), Integer(den));
}

inline double to_double(const Rational& r) {
    return r.template convert_to<double>();
}

// "numerator/denominator" in lowest terms, e.g. "2/3", "0/1".
std::string rational_string(const Rational& r);

Integer factorial(long long n);

// (k)_i = k(k-1)...(k-i+1); zero when i > k.
Integer falling_factorial(long long k, long long i);

// n!! for odd n (product of odd numbers <= n); (-1)!! = 1.
Integer odd_double_factorial(long long n);

// ln(n!) via lgamma.
double log_factorial(long long n);

} // namespace configprob
