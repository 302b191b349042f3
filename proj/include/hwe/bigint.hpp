/**
 * @file bigint.hpp
 * @brief Exact arbitrary-precision integer/rational helpers.
 *
 * Thin aliases over Boost.Multiprecision (header-only cpp_int backend)
 * plus the handful of exact combinatorial primitives the rest of the
 * library is built on: binomial coefficients, exact division, integer
 * square roots and perfect-square tests.
 *
 * All arithmetic in this library is exact; no routine here (or anywhere
 * else in hwe/) ever rounds.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hwe {

using BigInt = boost::multiprecision::cpp_int;
/// Always stored in lowest terms with positive denominator (backend canonicalizes).
using BigRat = boost::multiprecision::cpp_rational;

/**
 * Binomial coefficient C(n, k), exact.
 *
 * @param n  must be >= 0 (throws std::domain_error otherwise)
 * @param k  any integer; out-of-range (k < 0 or k > n) yields 0
 *
 * Computed by the rising-product formula with stepwise exact division,
 * so intermediate values never exceed the result by more than a factor n.
 */
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: n must be nonnegative, got n=" + std::to_string(n));
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: C(n-k+i, i) is an integer
    }
    return result;
}

/// True iff q has denominator 1 (q is stored reduced).
inline bool is_integer(const BigRat& q) { return boost::multiprecision::denominator(q) == 1; }

/// Numerator of an integral rational; throws if q is not an integer.
inline BigInt to_integer(const BigRat& q) {
    if (!is_integer(q)) throw std::domain_error("to_integer: " + q.str() + " is not an integer");
    return boost::multiprecision::numerator(q);
}

/// Exact quotient a / b; throws if b == 0 or b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("exact_div: division by zero");
    BigInt q = a / b;
    if (q * b != a) throw std::domain_error("exact_div: " + b.str() + " does not divide " + a.str());
    return q;
}

/// Floor of the square root of a nonnegative integer.
inline BigInt isqrt_floor(const BigInt& a) {
    if (a < 0) throw std::domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(a);
}

/// True iff a is a perfect square (a >= 0 required implicitly; negatives return false).
inline bool is_perfect_square(const BigInt& a) {
    if (a < 0) return false;
    BigInt s = boost::multiprecision::sqrt(a);
    return s * s == a;
}

}  // namespace hwe
