/**
 * @file vanishing.hpp
 * @brief Which coefficients of (x^4-y^4)^alpha * P8^beta and of
 *        (x^4-y^4)^alpha (x^4+y^4)(x^8-34x^4y^4+y^8) vanish?
 *
 * Working in the lattice variables X = x^4, Y = y^4:
 *
 *     Q(alpha, beta) = (X-Y)^alpha (X^2 + 14XY + Y^2)^beta,   beta = 1, 2
 *     R(alpha)       = (X-Y)^alpha (X+Y)(X^2 - 34XY + Y^2)
 *
 * are the nontrivial factors of every closed-form harmonic weight
 * enumerator of an extremal Type II code (see harmonic_enum.hpp), so a
 * vanishing coefficient is exactly an exceptional design-strength upgrade.
 *
 * Indexing convention: `i` is the exponent of Y (raw, unsigned monomial
 * Y^i = (y^4)^i).  The classical statements index by (-Y)^i instead; the
 * signed variants below expose that convention, and zero sets agree.
 * Since coefficient mirrors are forced (c_i = (-1)^alpha c_(deg-i)), all
 * searches canonically scan 0 <= i <= deg/2.
 *
 * Each coefficient is available by two independent routes that share no
 * code: a closed-form evaluation (edge formulas plus the interior
 * binomial-bracket expression, with its Pell-equation zero analysis) and a
 * brute-force polynomial expansion.  Searches can run either or both.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hwe/bigint.hpp"
#include "hwe/xypoly.hpp"

namespace hwe {

// ---------------------------------------------------------------------------
// Closed-form coefficients of the Q family
// ---------------------------------------------------------------------------

/**
 * Edge coefficients of Q(alpha, beta): raw coefficient of X^(deg-i) Y^i for
 * 0 <= i <= 2*beta - 1 (low-order convolution, no interior bracket needed).
 * Out-of-range i throws; use q_coeff_interior / q_coeff for the rest.
 */
inline BigInt q_coeff_edge(long alpha, int beta, long i) {
    if (alpha < 0) throw std::domain_error("q_coeff_edge: alpha must be >= 0");
    if (beta != 1 && beta != 2) throw std::domain_error("q_coeff_edge: beta must be 1 or 2");
    if (i < 0 || i > 2 * beta - 1)
        throw std::domain_error("q_coeff_edge: edge index " + std::to_string(i) + " outside [0," +
                                std::to_string(2 * beta - 1) + "]");
    if (beta == 1) {
        if (i == 0) return 1;
        return 14 - binomial(alpha, 1);  // i == 1
    }
    switch (i) {
        case 0: return 1;
        case 1: return 28 - binomial(alpha, 1);
        case 2: return 198 - 28 * binomial(alpha, 1) + binomial(alpha, 2);
        default: return 28 - 198 * binomial(alpha, 1) + 28 * binomial(alpha, 2) - binomial(alpha, 3);
    }
}

/**
 * Interior coefficients of Q(alpha, beta), indexed by the offset j with
 * raw Y-exponent i = j + beta, valid for beta <= j <= alpha - beta:
 *
 *   beta=1:  (-1)^(j-1) C(alpha,j) [ j/(alpha-j+1) - 14 + (alpha-j)/(j+1) ]
 *   beta=2:  (-1)^j C(alpha,j) [ j(j-1)/((alpha-j+2)(alpha-j+1)) - 28j/(alpha-j+1)
 *                                + 198 - 28(alpha-j)/(j+1) + (alpha-j)(alpha-j-1)/((j+1)(j+2)) ]
 */
inline BigInt q_coeff_interior(long alpha, int beta, long j) {
    if (beta != 1 && beta != 2) throw std::domain_error("q_coeff_interior: beta must be 1 or 2");
    if (j < beta || j > alpha - beta)
        throw std::domain_error("q_coeff_interior: offset " + std::to_string(j) + " outside [" +
                                std::to_string(beta) + "," + std::to_string(alpha - beta) +
                                "] (use q_coeff_edge for the edges)");
    BigRat bracket;
    if (beta == 1) {
        bracket = BigRat(j, alpha - j + 1) - 14 + BigRat(alpha - j, j + 1);
    } else {
        bracket = BigRat(j * (j - 1), (alpha - j + 2) * (alpha - j + 1)) - BigRat(28 * j, alpha - j + 1) +
                  198 - BigRat(28 * (alpha - j), j + 1) +
                  BigRat((alpha - j) * (alpha - j - 1), (j + 1) * (j + 2));
    }
    BigRat value = bracket * BigRat(binomial(alpha, j));
    const bool negate = (beta == 1) ? ((j - 1) % 2 != 0) : (j % 2 != 0);
    if (negate) value = -value;
    return to_integer(value);
}

/**
 * Raw coefficient of X^(alpha+2*beta-i) Y^i in Q(alpha, beta) for any
 * 0 <= i <= alpha + 2*beta, dispatching to edge/interior formulas and the
 * mirror law c_i = (-1)^alpha c_(deg-i).
 */
inline BigInt q_coeff(long alpha, int beta, long i) {
    if (alpha < 0) throw std::domain_error("q_coeff: alpha must be >= 0");
    if (beta != 1 && beta != 2) throw std::domain_error("q_coeff: beta must be 1 or 2");
    const long deg = alpha + 2 * beta;
    if (i < 0 || i > deg)
        throw std::domain_error("q_coeff: index " + std::to_string(i) + " outside [0," +
                                std::to_string(deg) + "]");
    if (2 * i > deg) {
        BigInt c = q_coeff(alpha, beta, deg - i);
        return (alpha % 2 != 0) ? BigInt(-c) : c;
    }
    if (i < 2 * beta) return q_coeff_edge(alpha, beta, i);
    return q_coeff_interior(alpha, beta, i - beta);
}

/// The classical signed-index convention (coefficient of X^(deg-i) (-Y)^i).
inline BigInt q_coeff_signed(long alpha, int beta, long i) {
    BigInt c = q_coeff(alpha, beta, i);
    return (i % 2 != 0) ? BigInt(-c) : c;
}

// ---------------------------------------------------------------------------
// Closed-form coefficients of the R family
// ---------------------------------------------------------------------------

/// Edge coefficients of R(alpha): raw coefficient of X^(deg-i) Y^i, 0 <= i <= 2.
inline BigInt r_coeff_edge(long alpha, long i) {
    if (alpha < 0) throw std::domain_error("r_coeff_edge: alpha must be >= 0");
    if (i < 0 || i > 2)
        throw std::domain_error("r_coeff_edge: edge index " + std::to_string(i) + " outside [0,2]");
    // (X+Y)(X^2-34XY+Y^2) = X^3 - 33X^2 Y - 33XY^2 + Y^3 convolved with (X-Y)^alpha.
    switch (i) {
        case 0: return 1;
        case 1: return -33 - binomial(alpha, 1);
        default: return 33 * (alpha - 1) + binomial(alpha, 2);
    }
}

/**
 * The interior bracket J(alpha, j) of the R family in factored form:
 *
 *   J = j/(alpha-j+1) + 33 - 33(alpha-j)/(j+1) - (alpha-j)(alpha-j-1)/((j+1)(j+2))
 *     = (alpha-2j-1) * (32j^2 - 32(alpha-1)j - (alpha+1)(alpha+66))
 *       / ((alpha-j+1)(j+1)(j+2)).
 *
 * The quadratic factor is negative throughout 1 <= j <= alpha-1 (tested
 * exhaustively over the working range), so J = 0 iff alpha = 2j + 1: only
 * middle coefficients of odd-alpha R can vanish.
 */
struct JFactorization {
    BigInt linear;       // alpha - 2j - 1
    BigInt quadratic;    // 32j^2 - 32(alpha-1)j - (alpha+1)(alpha+66)
    BigInt denominator;  // (alpha-j+1)(j+1)(j+2)
    BigRat value;        // linear * quadratic / denominator
};

inline JFactorization j_factorization(long alpha, long j) {
    if (j < 1 || j > alpha - 1)
        throw std::domain_error("j_factorization: offset " + std::to_string(j) + " outside [1," +
                                std::to_string(alpha - 1) + "]");
    JFactorization f;
    f.linear = alpha - 2 * j - 1;
    f.quadratic = BigInt(32) * j * j - BigInt(32) * (alpha - 1) * j - BigInt(alpha + 1) * (alpha + 66);
    f.denominator = BigInt(alpha - j + 1) * (j + 1) * (j + 2);
    f.value = BigRat(f.linear * f.quadratic, f.denominator);
    return f;
}

/// Unfactored interior bracket of R (the four-term sum), for oracle tests.
inline BigRat r_bracket_unfactored(long alpha, long j) {
    if (j < 1 || j > alpha - 1)
        throw std::domain_error("r_bracket_unfactored: offset " + std::to_string(j) + " outside [1," +
                                std::to_string(alpha - 1) + "]");
    return BigRat(j, alpha - j + 1) + 33 - BigRat(33 * (alpha - j), j + 1) -
           BigRat((alpha - j) * (alpha - j - 1), (j + 1) * (j + 2));
}

/// Interior coefficients of R(alpha): raw Y-exponent i = j + 2, 1 <= j <= alpha-1.
inline BigInt r_coeff_interior(long alpha, long j) {
    const JFactorization f = j_factorization(alpha, j);
    BigRat value = f.value * BigRat(binomial(alpha, j));
    if ((j - 1) % 2 != 0) value = -value;
    return to_integer(value);
}

/// Raw coefficient of X^(alpha+3-i) Y^i in R(alpha), full range with mirror.
inline BigInt r_coeff(long alpha, long i) {
    if (alpha < 0) throw std::domain_error("r_coeff: alpha must be >= 0");
    const long deg = alpha + 3;
    if (i < 0 || i > deg)
        throw std::domain_error("r_coeff: index " + std::to_string(i) + " outside [0," +
                                std::to_string(deg) + "]");
    if (2 * i > deg) {
        BigInt c = r_coeff(alpha, deg - i);
        return (alpha % 2 != 0) ? BigInt(-c) : c;
    }
    if (i < 3) return r_coeff_edge(alpha, i);
    return r_coeff_interior(alpha, i - 2);
}

// ---------------------------------------------------------------------------
// Brute-force expansions (independent oracle route)
// ---------------------------------------------------------------------------

/// Q(alpha, beta) expanded in the lattice variables (degree alpha + 2 beta).
inline XYPoly q_poly_expanded(long alpha, int beta) {
    if (alpha < 0) throw std::domain_error("q_poly_expanded: alpha must be >= 0");
    if (beta != 1 && beta != 2) throw std::domain_error("q_poly_expanded: beta must be 1 or 2");
    const XYPoly xmy = XYPoly::monomial(1, 0, 1) - XYPoly::monomial(1, 1, 1);
    const XYPoly p8l = XYPoly::monomial(2, 0, 1) + XYPoly::monomial(2, 1, 14) + XYPoly::monomial(2, 2, 1);
    return xmy.pow(alpha) * p8l.pow(beta);
}

/// R(alpha) expanded in the lattice variables (degree alpha + 3).
inline XYPoly r_poly_expanded(long alpha) {
    if (alpha < 0) throw std::domain_error("r_poly_expanded: alpha must be >= 0");
    const XYPoly xmy = XYPoly::monomial(1, 0, 1) - XYPoly::monomial(1, 1, 1);
    const XYPoly cubic = XYPoly::monomial(3, 0, 1) - XYPoly::monomial(3, 1, 33) -
                         XYPoly::monomial(3, 2, 33) + XYPoly::monomial(3, 3, 1);
    return xmy.pow(alpha) * cubic;
}

// ---------------------------------------------------------------------------
// Zero searches
// ---------------------------------------------------------------------------

enum class Route { kClosedForm, kExpansion, kBoth };

struct ZeroHit {
    long alpha;
    long i;  // raw Y-exponent, canonical half 0 <= i <= deg/2
    bool operator==(const ZeroHit& o) const { return alpha == o.alpha && i == o.i; }
    bool operator<(const ZeroHit& o) const { return alpha != o.alpha ? alpha < o.alpha : i < o.i; }
};

namespace detail {

/// Closed-form half-range zero scan of Q for one alpha (running binomial).
inline void q_scan_closed(long alpha, int beta, std::vector<ZeroHit>& hits) {
    const long deg = alpha + 2 * beta;
    const long half = deg / 2;
    for (long i = 0; i <= half && i < 2 * beta; ++i)
        if (q_coeff_edge(alpha, beta, i) == 0) hits.push_back({alpha, i});
    BigInt binom = binomial(alpha, beta);  // C(alpha, j) maintained along the scan
    for (long j = beta; j + beta <= half; ++j) {
        BigRat bracket;
        if (beta == 1) {
            bracket = BigRat(j, alpha - j + 1) - 14 + BigRat(alpha - j, j + 1);
        } else {
            bracket = BigRat(j * (j - 1), (alpha - j + 2) * (alpha - j + 1)) -
                      BigRat(28 * j, alpha - j + 1) + 198 - BigRat(28 * (alpha - j), j + 1) +
                      BigRat((alpha - j) * (alpha - j - 1), (j + 1) * (j + 2));
        }
        if (binom != 0 && bracket == 0) hits.push_back({alpha, j + beta});
        binom = binom * (alpha - j) / (j + 1);
    }
}

/// Closed-form half-range zero scan of R for one alpha.
inline void r_scan_closed(long alpha, std::vector<ZeroHit>& hits) {
    const long deg = alpha + 3;
    const long half = deg / 2;
    for (long i = 0; i <= half && i < 3; ++i)
        if (r_coeff_edge(alpha, i) == 0) hits.push_back({alpha, i});
    for (long j = 1; j + 2 <= half; ++j) {
        const JFactorization f = j_factorization(alpha, j);
        if (f.linear == 0 || f.quadratic == 0) hits.push_back({alpha, j + 2});
    }
}

/// Expansion-route half-range zero scan over 0..alpha_max (incremental (X-Y) products).
template <class SeedFn>
inline std::vector<ZeroHit> scan_expansion(long alpha_max, SeedFn&& seed) {
    std::vector<ZeroHit> hits;
    const XYPoly xmy = XYPoly::monomial(1, 0, 1) - XYPoly::monomial(1, 1, 1);
    XYPoly p = seed();
    for (long alpha = 0; alpha <= alpha_max; ++alpha) {
        const long half = p.degree() / 2;
        for (long i = 0; i <= half; ++i)
            if (p.coeff(i) == 0) hits.push_back({alpha, i});
        if (alpha < alpha_max) p = p * xmy;
    }
    return hits;
}

}  // namespace detail

/**
 * All vanishing coefficients of Q(alpha, beta) for 0 <= alpha <= alpha_max,
 * scanning the canonical half-range 0 <= i <= deg/2 (mirrors are forced).
 * Route::kBoth runs the closed-form and expansion routes independently and
 * throws std::logic_error if they ever disagree.
 */
inline std::vector<ZeroHit> search_zero_coeffs_q(int beta, long alpha_max, Route route = Route::kBoth) {
    if (beta != 1 && beta != 2) throw std::domain_error("search_zero_coeffs_q: beta must be 1 or 2");
    if (alpha_max < 0) throw std::domain_error("search_zero_coeffs_q: alpha_max must be >= 0");
    std::vector<ZeroHit> closed, expanded;
    if (route != Route::kExpansion) {
        for (long alpha = 0; alpha <= alpha_max; ++alpha) detail::q_scan_closed(alpha, beta, closed);
    }
    if (route != Route::kClosedForm) {
        expanded = detail::scan_expansion(alpha_max, [beta] {
            const XYPoly p8l =
                XYPoly::monomial(2, 0, 1) + XYPoly::monomial(2, 1, 14) + XYPoly::monomial(2, 2, 1);
            return p8l.pow(beta);
        });
    }
    if (route == Route::kBoth && closed != expanded)
        throw std::logic_error("search_zero_coeffs_q: closed-form and expansion routes disagree");
    return route == Route::kExpansion ? expanded : closed;
}

/// Same contract as search_zero_coeffs_q, for the R family.
inline std::vector<ZeroHit> search_zero_coeffs_r(long alpha_max, Route route = Route::kBoth) {
    if (alpha_max < 0) throw std::domain_error("search_zero_coeffs_r: alpha_max must be >= 0");
    std::vector<ZeroHit> closed, expanded;
    if (route != Route::kExpansion) {
        for (long alpha = 0; alpha <= alpha_max; ++alpha) detail::r_scan_closed(alpha, closed);
    }
    if (route != Route::kClosedForm) {
        expanded = detail::scan_expansion(alpha_max, [] {
            return XYPoly::monomial(3, 0, 1) - XYPoly::monomial(3, 1, 33) -
                   XYPoly::monomial(3, 2, 33) + XYPoly::monomial(3, 3, 1);
        });
    }
    if (route == Route::kBoth && closed != expanded)
        throw std::logic_error("search_zero_coeffs_r: closed-form and expansion routes disagree");
    return route == Route::kExpansion ? expanded : closed;
}

// ---------------------------------------------------------------------------
// Pell-equation analysis of the interior Q zeros (beta = 1)
// ---------------------------------------------------------------------------

/**
 * The beta=1 interior bracket vanishes iff 16j^2 - 16 alpha j + alpha^2
 * - 13 alpha - 14 = 0, i.e. j = (2 alpha +- sqrt((3 alpha+7)(alpha+2)))/4.
 * Since gcd(3 alpha+7, alpha+2) = 1, the discriminant is a perfect square
 * iff both factors are, i.e. 3 alpha+7 = X^2, alpha+2 = Y^2 with
 * X^2 - 3 Y^2 = 1: a Pell equation.  Its solutions give alpha = Y^2 - 2.
 */
struct PellSolution {
    BigInt x;
    BigInt y;
    BigInt alpha;  // y^2 - 2
};

/// First `count` solutions of X^2 - 3Y^2 = 1: (2,1), (7,4), (26,15), ...
inline std::vector<PellSolution> pell_solutions(int count) {
    if (count < 0) throw std::domain_error("pell_solutions: count must be >= 0");
    std::vector<PellSolution> sols;
    sols.reserve(static_cast<std::size_t>(count));
    BigInt x = 2, y = 1;
    for (int k = 0; k < count; ++k) {
        sols.push_back({x, y, y * y - 2});
        const BigInt nx = 2 * x + 3 * y;
        const BigInt ny = x + 2 * y;
        x = nx;
        y = ny;
    }
    return sols;
}

/**
 * Integer roots of 16j^2 - 16 alpha j + alpha^2 - 13 alpha - 14, ascending.
 * Note the roots are reported raw: they may fall outside the interior
 * offset range [1, alpha-1] (e.g. alpha=14 gives {0, 14}, explaining why
 * that zero appears at the edge index instead).
 */
inline std::vector<BigInt> quadratic_j_roots(long alpha) {
    if (alpha < 0) throw std::domain_error("quadratic_j_roots: alpha must be >= 0");
    const BigInt disc = BigInt(3 * alpha + 7) * (alpha + 2);  // (4j - 2 alpha)^2 = disc
    if (!is_perfect_square(disc)) return {};
    const BigInt s = isqrt_floor(disc);
    std::vector<BigInt> roots;
    for (const BigInt num : {BigInt(2 * alpha) - s, BigInt(2 * alpha) + s}) {
        if (num % 4 == 0) roots.push_back(num / 4);
    }
    return roots;
}

}  // namespace hwe
