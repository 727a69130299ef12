#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace turan {

// Exact counts and densities. Nothing in the library compares floats.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Count binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Count ipow(const Count& base, long e) {
    Count r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

inline Rational ratio(const Count& num, const Count& den) { return Rational(num, den); }

inline std::string to_string(const Count& c) { return c.str(); }
inline std::string to_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace turan
