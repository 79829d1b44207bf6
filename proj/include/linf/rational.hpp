#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace linf {

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator; all field operations are exact. The engine uses no
/// floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rat_str(const Rat& r) { return r.str(); }

inline Rat factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rat(f);
}

inline Rat binomial(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return Rat(num / den);
}

}  // namespace linf
