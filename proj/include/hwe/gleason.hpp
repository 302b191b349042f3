/**
 * @file gleason.hpp
 * @brief Invariant-theoretic generators and extremal weight enumerators of
 *        binary doubly even self-dual (Type II) codes.
 *
 * The weight enumerator of a Type II code lies in C[P8, P24].  Harmonic
 * weight enumerators (see harmonic_design.hpp) lie in relative-invariant
 * modules over the same ring: after pulling out (xy)^k the residual
 * polynomial sits in  prefactor(k mod 4) * C[P8, P24]  with
 *
 *     k = 0 (mod 4):  1
 *     k = 1 (mod 4):  P30 = P12 * P18
 *     k = 2 (mod 4):  P12
 *     k = 3 (mod 4):  P18
 *
 * Extremal enumerators: a Type II code of length n = 24m + 8r (r = 0,1,2)
 * has minimum weight at most 4m + 4; codes meeting the bound are extremal,
 * and their full weight enumerator is forced: it is the unique element of
 * span{ P8^(3m+r-3i) P24^i : 0 <= i <= m } with constant term 1 and
 * vanishing coefficients at y^4, ..., y^(4m).  Extremal codes are known
 * not to exist beyond m = 153 (r=0), 158 (r=1), 163 (r=2).
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwe/bigint.hpp"
#include "hwe/xypoly.hpp"

namespace hwe {

/// P8 = x^8 + 14 x^4 y^4 + y^8 (weight enumerator of the extended Hamming code).
inline const XYPoly& P8() {
    static const XYPoly p = XYPoly::monomial(8, 0, 1) + XYPoly::monomial(8, 4, 14) + XYPoly::monomial(8, 8, 1);
    return p;
}

/// x^4 - y^4.
inline const XYPoly& x4_minus_y4() {
    static const XYPoly p = XYPoly::monomial(4, 0, 1) - XYPoly::monomial(4, 4, 1);
    return p;
}

/// x^4 + y^4.
inline const XYPoly& x4_plus_y4() {
    static const XYPoly p = XYPoly::monomial(4, 0, 1) + XYPoly::monomial(4, 4, 1);
    return p;
}

/// x^8 - 34 x^4 y^4 + y^8.
inline const XYPoly& q34() {
    static const XYPoly p = XYPoly::monomial(8, 0, 1) - XYPoly::monomial(8, 4, 34) + XYPoly::monomial(8, 8, 1);
    return p;
}

/// P12 = x^2 y^2 (x^4 - y^4)^2.
inline const XYPoly& P12() {
    static const XYPoly p = XYPoly::monomial(4, 2, 1) * x4_minus_y4().pow(2);
    return p;
}

/// P18 = x y (x^8 - y^8)(x^8 - 34 x^4 y^4 + y^8).
inline const XYPoly& P18() {
    static const XYPoly p = XYPoly::monomial(2, 1, 1) * x4_minus_y4() * x4_plus_y4() * q34();
    return p;
}

/// P24 = x^4 y^4 (x^4 - y^4)^4 (the degree-24 relative invariant).
inline const XYPoly& P24() {
    static const XYPoly p = XYPoly::monomial(8, 4, 1) * x4_minus_y4().pow(4);
    return p;
}

/// P30 = P12 * P18.
inline const XYPoly& P30() {
    static const XYPoly p = P12() * P18();
    return p;
}

/**
 * The relative-invariant module containing (xy)^-k W_{C,f} for f in Harm_k:
 * prefactor(k mod 4) * C[P8, P24].
 */
struct InvariantClass {
    int k_mod_4;
    XYPoly prefactor;  // 1, P30, P12 or P18
};

inline InvariantClass invariant_class(long k) {
    if (k < 0) throw std::domain_error("invariant_class: k must be nonnegative");
    const int res = static_cast<int>(k % 4);
    switch (res) {
        case 0: return {res, XYPoly::monomial(0, 0, 1)};
        case 1: return {res, P30()};
        case 2: return {res, P12()};
        default: return {res, P18()};
    }
}

/// Known nonexistence bounds for extremal Type II codes of length 24m + 8r.
inline long existence_bound(int r) {
    switch (r) {
        case 0: return 153;
        case 1: return 158;
        case 2: return 163;
        default: throw std::domain_error("existence_bound: r must be 0, 1 or 2, got " + std::to_string(r));
    }
}

/**
 * Parameters of an extremal Type II code of length n = 24m + 8r.
 *
 * Domain: r in {0,1,2}; m >= 1 for r = 0 (length 0 otherwise) and m >= 0
 * for r = 1,2 (m = 0 gives the [8,4,4] and [16,8,4] classes); m never
 * exceeds the nonexistence bound.
 */
struct ExtremalClass {
    long m;
    int r;

    ExtremalClass(long m_, int r_) : m(m_), r(r_) {
        if (r < 0 || r > 2)
            throw std::domain_error("ExtremalClass: r must be 0, 1 or 2, got " + std::to_string(r));
        const long lo = (r == 0) ? 1 : 0;
        if (m < lo)
            throw std::domain_error("ExtremalClass: m must be >= " + std::to_string(lo) +
                                    " for r = " + std::to_string(r) + ", got " + std::to_string(m));
        if (m > existence_bound(r))
            throw std::domain_error("ExtremalClass: no extremal code exists for m = " + std::to_string(m) +
                                    ", r = " + std::to_string(r) + " (bound m <= " +
                                    std::to_string(existence_bound(r)) + ")");
    }

    long n() const { return 24 * m + 8 * r; }
    long min_weight() const { return 4 * m + 4; }
    long middle_weight() const { return 12 * m + 4 * r; }

    /// Nontrivial weights an extremal code can take: multiples of 4 in [d, n-d].
    std::vector<long> weight_lattice() const {
        std::vector<long> ws;
        for (long w = min_weight(); w <= n() - min_weight(); w += 4) ws.push_back(w);
        return ws;
    }
};

/**
 * The unique extremal weight enumerator of the class: constant term 1 and
 * A_4 = ... = A_4m = 0 inside span{ P8^(3m+r-3i) P24^i }.  Solved by forward
 * substitution; the basis is triangular with unit diagonal in the y^4 lattice.
 */
inline XYPoly extremal_weight_enumerator(const ExtremalClass& cls) {
    const long m = cls.m;
    const int r = cls.r;

    // P8^(r + 3j) for j = 0..m and P24^i for i = 0..m, built incrementally.
    std::vector<XYPoly> p8pow3(m + 1), p24pow(m + 1);
    p8pow3[0] = P8().pow(r);
    const XYPoly p8cube = P8().pow(3);
    for (long j = 1; j <= m; ++j) p8pow3[j] = p8pow3[j - 1] * p8cube;
    p24pow[0] = XYPoly::monomial(0, 0, 1);
    for (long i = 1; i <= m; ++i) p24pow[i] = p24pow[i - 1] * P24();

    std::vector<XYPoly> basis(m + 1);
    for (long i = 0; i <= m; ++i) basis[i] = p8pow3[m - i] * p24pow[i];

    // Forward substitution on the coefficients at y^0, y^4, ..., y^(4m).
    std::vector<BigInt> a(m + 1);
    a[0] = 1;
    for (long i = 1; i <= m; ++i) {
        if (basis[i].coeff(4 * i) != 1)
            throw std::logic_error("extremal_weight_enumerator: basis diagonal is not 1");
        BigInt acc = 0;
        for (long j = 0; j < i; ++j) acc += a[j] * basis[j].coeff(4 * i);
        a[i] = -acc;
    }

    XYPoly w = XYPoly::zero(cls.n());
    for (long i = 0; i <= m; ++i) w = w + basis[i] * a[i];
    return w;
}

/**
 * Number of minimum-weight codewords A_(4m+4) of the extremal enumerator,
 * in closed form:
 *
 *   A_(4m+4) = (3m+r)/(m+1) * sum_j p_j * C(5m+3-j, 4m+3),
 *
 * where p(Y) = (14 + 2Y)(1 + 14Y + Y^2)^(2-r).  This is the coefficient
 * extraction of the extremal enumerator at y^(4m+4) carried out once and
 * for all by Lagrange inversion of Y |-> P24/P8^3 on the y^4 lattice; it
 * is property-tested against the full triangular construction.
 */
inline BigInt min_weight_block_count(const ExtremalClass& cls) {
    static const std::vector<std::vector<BigInt>> kSeries = {
        {14, 394, 2828, 788, 70, 2},  // r = 0: (14+2Y)(1+14Y+Y^2)^2
        {14, 198, 42, 2},             // r = 1: (14+2Y)(1+14Y+Y^2)
        {14, 2},                      // r = 2: (14+2Y)
    };
    const long m = cls.m;
    const int r = cls.r;
    const auto& p = kSeries[static_cast<std::size_t>(r)];
    BigInt s = 0;
    for (std::size_t j = 0; j < p.size(); ++j)
        s += p[j] * binomial(5 * m + 3 - static_cast<long long>(j), 4 * m + 3);
    return exact_div(s * (3 * m + r), m + 1);
}

/// lambda_i = A_d * C(d, i) / C(n, i): the index of the minimum-weight
/// support design at level i, integral whenever that design is an i-design.
inline BigRat min_weight_design_index(const ExtremalClass& cls, long i) {
    if (i < 0 || i > cls.min_weight())
        throw std::domain_error("min_weight_design_index: level " + std::to_string(i) +
                                " outside [0, " + std::to_string(cls.min_weight()) + "]");
    return BigRat(min_weight_block_count(cls) * binomial(cls.min_weight(), i), binomial(cls.n(), i));
}

/**
 * Decompose a homogeneous polynomial Z as  sum_b c_b * prefactor * P8^a_b * P24^b
 * with 8 a_b + 24 b = deg Z - deg prefactor.  Returns the (rational)
 * coefficients c_0, c_1, ... or nullopt when Z lies outside the module.
 * Used for Gleason-conformance checks of weight enumerators (prefactor = 1)
 * and of harmonic weight enumerators (prefactor per invariant_class).
 */
inline std::optional<std::vector<BigRat>> relative_invariant_decomposition(const XYPoly& z,
                                                                           const XYPoly& prefactor) {
    if (prefactor.is_zero()) throw std::domain_error("relative_invariant_decomposition: zero prefactor");
    const long rem = z.degree() - prefactor.degree();
    if (rem < 0 || rem % 8 != 0) return z.is_zero() ? std::make_optional(std::vector<BigRat>{}) : std::nullopt;

    // Residual arithmetic over Q on the sparse y-exponent map.
    std::map<long, BigRat> res;
    for (const auto& [e, c] : z.terms()) res[e] = BigRat(c);
    const long pre_min_y = prefactor.terms().empty() ? 0 : prefactor.terms().begin()->first;

    std::vector<BigRat> coeffs;
    for (long b = 0; 24 * b <= rem; ++b) {
        const long a = (rem - 24 * b) / 8;  // rem and 24b are both multiples of 8
        const XYPoly basis = prefactor * P8().pow(a) * P24().pow(b);
        const long pivot = pre_min_y + 4 * b;
        BigRat cb = 0;
        auto it = res.find(pivot);
        if (it != res.end()) cb = it->second / BigRat(basis.coeff(pivot));
        coeffs.push_back(cb);
        if (cb != 0) {
            for (const auto& [e, c] : basis.terms()) {
                BigRat& slot = res[e];
                slot -= cb * BigRat(c);
                if (slot == 0) res.erase(e);
            }
        }
    }
    if (!res.empty()) return std::nullopt;
    return coeffs;
}

}  // namespace hwe
