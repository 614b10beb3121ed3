#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt power(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// ell^n * n!, the order of the colored permutation group.
inline BigInt group_order(int ell, int n) {
    return power(BigInt(ell), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace wreath
