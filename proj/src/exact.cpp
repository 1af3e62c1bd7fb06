#include "configprob/exact.hpp"

#include <cmath>

namespace configprob {

std::string rational_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Integer factorial(long long n) {
    Integer f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer falling_factorial(long long k, long long i) {
    if (i > k) return 0;
    Integer f = 1;
    for (long long j = 0; j < i; ++j) f *= (k - j);
    return f;
}

Integer odd_double_factorial(long long n) {
    Integer f = 1;
    for (long long i = n; i >= 3; i -= 2) f *= i;
    return f;
}

double log_factorial(long long n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

} // namespace configprob
