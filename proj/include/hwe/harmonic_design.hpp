/**
 * @file harmonic_design.hpp
 * @brief Discrete harmonic functions on k-subsets, the Delsarte design
 *        criterion, brute-force t-design verification, and harmonic weight
 *        enumerators of binary codes.
 *
 * Let X_k be the k-subsets of an n-point set and gamma : RX_k -> RX_(k-1)
 * the down-shadow map (gamma f)(y) = sum over z containing y of f(z).
 * Harm_k = ker gamma has dimension C(n,k) - C(n,k-1), and a block system D
 * is a T-design iff  sum_{b in D} f~(b) = 0  for every f in Harm_k, k in T,
 * where f~(u) = sum of f over the k-subsets of u.
 *
 * Basis: rather than solving for ker gamma by elimination, we use the
 * classical standard-polytabloid basis of the two-row Specht module
 * S^((n-k,k)) ~ Harm_k.  A standard tableau is encoded by k disjoint
 * "columns" (a_i, b_i) with a_i < b_i; the associated harmonic function is
 * the expanded product  f = prod_i (e_(b_i) - e_(a_i)), which takes values
 * in {-1, 0, +1} and satisfies the product rule
 * f~(u) = prod_i ([b_i in u] - [a_i in u]).  Harmonicity and linear
 * independence are classical; both are re-verified by the test suite
 * (gamma-annihilation exhaustively, independence on small instances).
 * This representation makes every evaluation O(k) bit operations, which is
 * what lets the Delsarte test sweep all 211624 basis elements of Harm_7
 * on 24 points.
 *
 * Subsets are bitmasks over points 0..n-1 (n <= 64); the canonical rank of
 * a k-subset is its colexicographic index (see colex_rank / colex_unrank).
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hwe/bigint.hpp"
#include "hwe/codes.hpp"
#include "hwe/xypoly.hpp"

namespace hwe {

// ---------------------------------------------------------------------------
// Subset ranking (colexicographic) -- canonical map keys for k-subset data
// ---------------------------------------------------------------------------

namespace detail {

/// C(n, k) for n, k <= 64 as uint64 (all such values fit).
inline std::uint64_t binom64(int n, int k) {
    static const auto table = [] {
        std::vector<std::vector<std::uint64_t>> t(65, std::vector<std::uint64_t>(65, 0));
        for (int i = 0; i <= 64; ++i) {
            t[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
        return t;
    }();
    if (n < 0 || k < 0 || k > n) return 0;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace detail

/// Colex rank of a k-subset: sum over the j-th smallest element e_j (j from 0)
/// of C(e_j, j+1).  Ranks run 0 .. C(n,k)-1, increasing colexicographically.
inline std::uint64_t colex_rank(std::uint64_t subset) {
    std::uint64_t rank = 0;
    int j = 1;
    while (subset) {
        const int e = std::countr_zero(subset);
        rank += detail::binom64(e, j);
        ++j;
        subset &= subset - 1;
    }
    return rank;
}

/// Inverse of colex_rank among k-subsets (of any ground set large enough).
inline std::uint64_t colex_unrank(std::uint64_t rank, int k) {
    std::uint64_t subset = 0;
    for (int j = k; j >= 1; --j) {
        int e = j - 1;
        while (detail::binom64(e + 1, j) <= rank) ++e;
        rank -= detail::binom64(e, j);
        subset |= 1ULL << e;
    }
    return subset;
}

// ---------------------------------------------------------------------------
// Harmonic functions
// ---------------------------------------------------------------------------

/**
 * A standard polytabloid of the two-row shape (n-k, k): the harmonic
 * function prod_i (e_(b_i) - e_(a_i)) determined by k disjoint columns.
 */
class HarmonicFunction {
  public:
    HarmonicFunction(int n, std::vector<std::pair<int, int>> columns)
        : n_(n), k_(static_cast<int>(columns.size())), columns_(std::move(columns)) {
        std::uint64_t seen = 0;
        for (const auto& [a, b] : columns_) {
            if (a < 0 || b < 0 || a >= n || b >= n || a == b)
                throw std::domain_error("HarmonicFunction: invalid column pair");
            const std::uint64_t bits = (1ULL << a) | (1ULL << b);
            if (seen & bits) throw std::domain_error("HarmonicFunction: columns must be disjoint");
            seen |= bits;
        }
    }

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<std::pair<int, int>>& columns() const { return columns_; }

    /// f(z) for a k-subset z (bitmask); values in {-1, 0, +1}.
    int value(std::uint64_t z) const {
        if (std::popcount(z) != k_)
            throw std::domain_error("HarmonicFunction::value: argument is not a k-subset");
        int sign = 1;
        for (const auto& [a, b] : columns_) {
            const bool ina = (z >> a) & 1;
            const bool inb = (z >> b) & 1;
            if (ina == inb) return 0;  // column hit twice or missed: not a transversal
            if (ina) sign = -sign;
        }
        return sign;
    }

    /// f~(u) = sum of f over k-subsets of u = prod_i ([b_i in u] - [a_i in u]).
    int tilde(std::uint64_t u) const {
        int prod = 1;
        for (const auto& [a, b] : columns_) {
            const int term = static_cast<int>((u >> b) & 1) - static_cast<int>((u >> a) & 1);
            if (term == 0) return 0;
            prod *= term;
        }
        return prod;
    }

    /// Explicit value table: colex rank -> value, nonzero entries only
    /// (2^k transversal subsets).  Exact rationals for interface parity with
    /// generic harmonic-function data; polytabloid values are integers.
    std::map<std::uint64_t, BigRat> value_map() const {
        std::map<std::uint64_t, BigRat> values;
        const std::uint64_t combos = 1ULL << k_;
        for (std::uint64_t pick = 0; pick < combos; ++pick) {
            std::uint64_t z = 0;
            int sign = 1;
            for (int i = 0; i < k_; ++i) {
                if ((pick >> i) & 1) {
                    z |= 1ULL << columns_[static_cast<std::size_t>(i)].first;
                    sign = -sign;
                } else {
                    z |= 1ULL << columns_[static_cast<std::size_t>(i)].second;
                }
            }
            values[colex_rank(z)] = sign;
        }
        return values;
    }

  private:
    int n_;
    int k_;
    std::vector<std::pair<int, int>> columns_;
};

/**
 * The standard-polytabloid basis of Harm_k on n points, enumerated by
 * bottom rows: all B = {b_1 < ... < b_k} (1-based values) with b_i >= 2i;
 * the i-th column pairs b_i with the i-th smallest non-B element.
 * Size C(n,k) - C(n,k-1); empty for k > n/2.
 */
inline std::vector<HarmonicFunction> harm_basis(int n, int k) {
    if (n < 1 || n > 64) throw std::domain_error("harm_basis: n must be in [1,64]");
    if (k < 0 || k > n) throw std::domain_error("harm_basis: k must be in [0,n]");
    std::vector<HarmonicFunction> basis;
    if (2 * k > n) return basis;  // Harm_k = 0 above the middle layer
    if (k == 0) {
        basis.emplace_back(n, std::vector<std::pair<int, int>>{});
        return basis;
    }
    std::vector<int> bottom(static_cast<std::size_t>(k));
    const auto emit = [&] {
        std::uint64_t bmask = 0;
        for (int b : bottom) bmask |= 1ULL << b;
        std::vector<std::pair<int, int>> cols(static_cast<std::size_t>(k));
        int idx = 0;
        for (int e = 0; e < n && idx < k; ++e)
            if (!((bmask >> e) & 1)) cols[static_cast<std::size_t>(idx++)].first = e;
        for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)].second = bottom[static_cast<std::size_t>(i)];
        basis.emplace_back(n, std::move(cols));
    };
    // Depth-first enumeration of ballot sequences: b_i >= 2i (1-based), i.e.
    // 0-based element value >= 2*i + 1 at depth i.
    const auto recurse = [&](auto&& self, int depth, int from) -> void {
        if (depth == k) {
            emit();
            return;
        }
        const int lo = std::max(from, 2 * depth + 1);
        // leave room for the remaining k - depth - 1 elements
        for (int e = lo; e <= n - (k - depth); ++e) {
            bottom[static_cast<std::size_t>(depth)] = e;
            self(self, depth + 1, e + 1);
        }
    };
    recurse(recurse, 0, 0);
    return basis;
}

/// Exhaustive harmonicity check: (gamma f)(y) = 0 for every (k-1)-subset y.
inline bool gamma_annihilates(const HarmonicFunction& f) {
    const int n = f.n();
    const int k = f.k();
    if (k == 0) return true;  // gamma on X_0 is the zero map here
    const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    std::uint64_t y = (k - 1 == 0) ? 0 : ((1ULL << (k - 1)) - 1);
    while (true) {
        long long sum = 0;
        for (int p = 0; p < n; ++p)
            if (!((y >> p) & 1)) sum += f.value(y | (1ULL << p));
        if (sum != 0) return false;
        if (k - 1 == 0) break;  // only one 0-subset
        // Gosper's hack: next (k-1)-subset mask
        const std::uint64_t u = y & (~y + 1);
        const std::uint64_t w = y + u;
        y = w | (((y ^ w) / u) >> 2);
        if (y > full) break;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Design tests
// ---------------------------------------------------------------------------

struct DelsarteReport {
    bool is_design;       // all levels 1..t pass
    int failed_level;     // 0 when is_design
    std::uint64_t failed_basis_index;
    long long failed_sum;
    std::vector<int> levels_passed;  // ascending levels 1..t that passed
};

namespace detail {

/// sum over blocks of f~(b) for one basis element.
inline long long harmonic_block_sum(const HarmonicFunction& f, const std::vector<std::uint64_t>& blocks) {
    long long sum = 0;
    for (std::uint64_t b : blocks) sum += f.tilde(b);
    return sum;
}

}  // namespace detail

/**
 * Delsarte criterion at a single level k: sum_b f~(b) = 0 for every basis
 * element f of Harm_k.  `jobs` splits the basis across threads (the sweep
 * over Harm_7 of the Golay middle design is ~2*10^8 products).
 * Returns the first failing basis index and its sum, if any.
 */
inline std::optional<std::pair<std::uint64_t, long long>> delsarte_level_violation(
    const SupportDesign& design, int k, int jobs = 1) {
    if (design.n < 1 || design.n > 64) throw std::domain_error("delsarte: n must be in [1,64]");
    if (k < 1) throw std::domain_error("delsarte: level must be >= 1");
    const std::vector<HarmonicFunction> basis = harm_basis(design.n, k);
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || basis.size() < 1024) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const long long s = detail::harmonic_block_sum(basis[i], design.blocks);
            if (s != 0) return std::make_pair(static_cast<std::uint64_t>(i), s);
        }
        return std::nullopt;
    }
    std::atomic<std::uint64_t> first_bad{~0ULL};
    long long bad_sum = 0;
    std::mutex report_mutex;
    std::vector<std::thread> pool;
    const std::size_t chunk = (basis.size() + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
    for (int tix = 0; tix < jobs; ++tix) {
        const std::size_t lo = static_cast<std::size_t>(tix) * chunk;
        const std::size_t hi = std::min(basis.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                if (first_bad.load(std::memory_order_relaxed) < i) return;  // earlier failure known
                const long long s = detail::harmonic_block_sum(basis[i], design.blocks);
                if (s != 0) {
                    const std::lock_guard<std::mutex> lock(report_mutex);
                    if (i < first_bad.load()) {
                        first_bad.store(static_cast<std::uint64_t>(i));
                        bad_sum = s;
                    }
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_bad.load() != ~0ULL) return std::make_pair(first_bad.load(), bad_sum);
    return std::nullopt;
}

/// Full Delsarte t-design test: levels 1..t must all pass.
inline DelsarteReport delsarte_t_design_test(const SupportDesign& design, int t, int jobs = 1) {
    DelsarteReport rep{true, 0, 0, 0, {}};
    for (int k = 1; k <= t; ++k) {
        const auto bad = delsarte_level_violation(design, k, jobs);
        if (bad) {
            rep.is_design = false;
            rep.failed_level = k;
            rep.failed_basis_index = bad->first;
            rep.failed_sum = bad->second;
            return rep;
        }
        rep.levels_passed.push_back(k);
    }
    return rep;
}

/**
 * Brute-force oracle: count blocks through every t-subset directly.
 * Returns lambda if every t-subset lies in the same number of blocks,
 * nullopt otherwise.  Refuses C(n,t) > 10^7 (the point of this routine is
 * to stay dumb and obviously correct, not to scale).
 */
inline std::optional<BigInt> brute_force_t_design(const SupportDesign& design, int t) {
    if (design.n < 1 || design.n > 62) throw std::domain_error("brute_force_t_design: n must be in [1,62]");
    if (t < 1 || t > design.n) throw std::domain_error("brute_force_t_design: t must be in [1,n]");
    if (detail::binom64(design.n, t) > 10'000'000ULL)
        throw std::domain_error("brute_force_t_design: C(" + std::to_string(design.n) + "," +
                                std::to_string(t) + ") exceeds the 10^7 subset cap");
    const std::uint64_t limit = 1ULL << design.n;
    std::uint64_t z = (1ULL << t) - 1;
    std::optional<std::uint64_t> lambda;
    while (z < limit) {
        std::uint64_t count = 0;
        for (std::uint64_t b : design.blocks)
            if ((z & b) == z) ++count;
        if (!lambda)
            lambda = count;
        else if (*lambda != count)
            return std::nullopt;
        const std::uint64_t u = z & (~z + 1);
        const std::uint64_t w = z + u;
        z = w | (((z ^ w) / u) >> 2);
    }
    return BigInt(*lambda);
}

// ---------------------------------------------------------------------------
// Harmonic weight enumerators of codes
// ---------------------------------------------------------------------------

struct HarmonicEnumResult {
    XYPoly poly;    // sum over codewords of f~(supp c) x^(n-wt) y^wt
    BigInt scale;   // denominator cleared from the coefficients (1 here:
                    // polytabloid values are already integral)
};

/// W_{C,f} for a polytabloid f; coefficients are exact integers.
inline HarmonicEnumResult harmonic_weight_enumerator_of_code(const BinaryCode& code,
                                                             const HarmonicFunction& f) {
    if (f.n() != code.n())
        throw std::domain_error("harmonic_weight_enumerator_of_code: f lives on " +
                                std::to_string(f.n()) + " points, code has length " +
                                std::to_string(code.n()));
    std::vector<long long> sums(static_cast<std::size_t>(code.n()) + 1, 0);
    code.for_each_codeword([&](std::uint64_t c) {
        const int t = f.tilde(c);
        if (t != 0) sums[static_cast<std::size_t>(std::popcount(c))] += t;
    });
    HarmonicEnumResult res;
    res.scale = 1;
    res.poly = XYPoly::zero(code.n());
    for (int w = 0; w <= code.n(); ++w)
        if (sums[static_cast<std::size_t>(w)] != 0)
            res.poly = res.poly + XYPoly::monomial(code.n(), w, sums[static_cast<std::size_t>(w)]);
    return res;
}

// ---------------------------------------------------------------------------
// Complementation and the even-to-odd strength upgrade
// ---------------------------------------------------------------------------

inline SupportDesign complementary_design(const SupportDesign& design) {
    const std::uint64_t full = (design.n == 64) ? ~0ULL : ((1ULL << design.n) - 1);
    SupportDesign comp;
    comp.n = design.n;
    comp.w = design.n - design.w;
    comp.blocks.reserve(design.blocks.size());
    for (std::uint64_t b : design.blocks) comp.blocks.push_back(full & ~b);
    return comp;
}

/// Same block multiset as the complement (only possible when w = n/2).
inline bool is_self_complementary(const SupportDesign& design) {
    if (2 * design.w != design.n) return false;
    std::vector<std::uint64_t> a = design.blocks;
    std::vector<std::uint64_t> b = complementary_design(design).blocks;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

/// The classical upgrade's hypothesis: t even and D self-complementary
/// (then a t-design is automatically a (t+1)-design; the conclusion is
/// re-checked, not assumed, by the test suite).
inline bool alltop_applicable(const SupportDesign& design, int t) {
    return t % 2 == 0 && is_self_complementary(design);
}

}  // namespace hwe
