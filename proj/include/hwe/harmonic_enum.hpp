/**
 * @file harmonic_enum.hpp
 * @brief Closed-form harmonic weight enumerators of extremal Type II codes.
 *
 * For an extremal Type II code C of length n = 24m + 8r and a harmonic
 * function f of degree t, the harmonic weight enumerator W_{C,f} is forced
 * up to the single scalar c(f) in eight (t, r) cases.  All of them share
 * the shape
 *
 *     W = c(f) * x^(4m+4) y^(4m+4) * (x^4 - y^4)^alpha * extra,
 *
 * equivalently (xy)^t * prefactor(t mod 4) * P8^a * P24^b:
 *
 *     (t=4, r=2): alpha = 4m,   extra = P8                      = (xy)^4 P8 P24^m
 *     (t=5, r=2): alpha = 4m-1, extra = (x^4+y^4) q34           = (xy)^5 P30 P24^(m-1)
 *     (t=6, r=1,2): alpha = 4m-2, extra = P8^r                  = (xy)^6 P12 P8^r P24^(m-1)
 *     (t=7, r=1): alpha = 4m-3, extra = (x^4+y^4) q34           = (xy)^7 P18 P24^(m-1)
 *     (t=8, r=0,1): alpha = 4m-4, extra = P8^(r+1)              = (xy)^8 P8^(r+1) P24^(m-1)
 *     (t=9, r=1): alpha = 4m-5, extra = (x^4+y^4) P8 q34        = (xy)^9 P30 P8 P24^(m-2)
 *
 * with q34 = x^8 - 34 x^4 y^4 + y^8.  This module expands them exactly
 * (normalized to c(f) = 1) and reports which design-range weights carry a
 * vanishing coefficient -- those weights' support designs gain a level-t
 * upgrade regardless of c(f).
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hwe/bigint.hpp"
#include "hwe/gleason.hpp"
#include "hwe/xypoly.hpp"

namespace hwe {

/// The (t, r) pairs with a forced closed form, ascending lexicographically.
inline const std::vector<std::pair<int, int>>& supported_harmonic_cases() {
    static const std::vector<std::pair<int, int>> cases = {
        {4, 2}, {5, 2}, {6, 1}, {6, 2}, {7, 1}, {8, 0}, {8, 1}, {9, 1}};
    return cases;
}

inline bool harmonic_case_supported(int t, int r) {
    const auto& cs = supported_harmonic_cases();
    return std::find(cs.begin(), cs.end(), std::make_pair(t, r)) != cs.end();
}

/**
 * A fully expanded harmonic weight enumerator, c(f) = 1.
 *
 * `poly` is homogeneous of degree n = 24m + 8r; the coefficient of y^w is
 * the (scaled) number of weight-w codewords weighted by f-tilde.
 * `alpha`/`extra` record the (x^4-y^4)-power factorization; `p8_exponent`,
 * `p24_exponent` the invariant-module form.  `alpha_is_zero` flags the
 * degenerate edge (t=8, m=1) where the (x^4-y^4) factor disappears.
 */
struct HarmonicEnumerator {
    long m;
    int r;
    int t;
    long alpha;
    XYPoly extra;
    XYPoly poly;
    long p8_exponent;
    long p24_exponent;
    bool alpha_is_zero;
};

inline HarmonicEnumerator harmonic_enumerator(long m, int r, int t) {
    if (!harmonic_case_supported(t, r)) {
        std::ostringstream msg;
        msg << "harmonic_enumerator: no closed form for (t=" << t << ", r=" << r << "); supported (t,r): ";
        bool first = true;
        for (const auto& [tc, rc] : supported_harmonic_cases()) {
            if (!first) msg << ", ";
            msg << "(" << tc << "," << rc << ")";
            first = false;
        }
        throw std::domain_error(msg.str());
    }
    const long m_min = (t == 9) ? 2 : 1;
    if (m < m_min)
        throw std::domain_error("harmonic_enumerator: t=" + std::to_string(t) + " requires m >= " +
                                std::to_string(m_min) + ", got m=" + std::to_string(m));
    ExtremalClass cls(m, r);  // validates the existence bound

    HarmonicEnumerator h;
    h.m = m;
    h.r = r;
    h.t = t;
    const XYPoly one = XYPoly::monomial(0, 0, 1);
    switch (t) {
        case 4:
            h.alpha = 4 * m;
            h.extra = P8();
            h.p8_exponent = 1;
            h.p24_exponent = m;
            break;
        case 5:
            h.alpha = 4 * m - 1;
            h.extra = x4_plus_y4() * q34();
            h.p8_exponent = 0;
            h.p24_exponent = m - 1;
            break;
        case 6:
            h.alpha = 4 * m - 2;
            h.extra = P8().pow(r);
            h.p8_exponent = r;
            h.p24_exponent = m - 1;
            break;
        case 7:
            h.alpha = 4 * m - 3;
            h.extra = x4_plus_y4() * q34();
            h.p8_exponent = 0;
            h.p24_exponent = m - 1;
            break;
        case 8:
            h.alpha = 4 * m - 4;
            h.extra = P8().pow(r + 1);
            h.p8_exponent = r + 1;
            h.p24_exponent = m - 1;
            break;
        default:  // t == 9
            h.alpha = 4 * m - 5;
            h.extra = x4_plus_y4() * P8() * q34();
            h.p8_exponent = 1;
            h.p24_exponent = m - 2;
            break;
    }
    h.alpha_is_zero = (h.alpha == 0);
    h.poly = XYPoly::monomial(8 * m + 8, 4 * m + 4, 1) * x4_minus_y4().pow(h.alpha) * h.extra;
    if (h.poly.degree() != cls.n())
        throw std::logic_error("harmonic_enumerator: degree mismatch (internal)");
    return h;
}

/// Weights of a code class: multiples of 4 in [4m+4, n-(4m+4)].
inline std::vector<long> design_weight_range(long m, int r) {
    return ExtremalClass(m, r).weight_lattice();
}

/**
 * Design-range weights w where the degree-t harmonic enumerator coefficient
 * vanishes: at those w the weight-w support design is a t-level design for
 * every f (the functional is identically zero there).
 */
inline std::vector<long> vanishing_weights(long m, int r, int t) {
    const HarmonicEnumerator h = harmonic_enumerator(m, r, t);
    std::vector<long> zeros;
    for (long w : design_weight_range(m, r))
        if (h.poly.coeff(w) == 0) zeros.push_back(w);
    return zeros;
}

}  // namespace hwe
