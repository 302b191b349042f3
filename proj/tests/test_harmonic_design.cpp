/**
 * @file test_harmonic_design.cpp
 * @brief Harmonic functions on subsets and both design-test routes.
 *
 * The polytabloid basis is not taken on faith: harmonicity is re-proved
 * exhaustively (gamma annihilation over every (k-1)-subset) on small
 * instances and sampled at n=24, linear independence is re-proved by
 * rank computation on small instances, and the dimension formula
 * C(n,k) - C(n,k-1) is checked across the grid.  The Delsarte criterion
 * and the naive block-counting oracle must agree verdict-for-verdict on
 * every design decision in scope -- they share no code.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "hwe/codes.hpp"
#include "hwe/gleason.hpp"
#include "hwe/harmonic_design.hpp"

using namespace hwe;

TEST_CASE("colex rank/unrank round-trip and ordering", "[harmonic]") {
    for (int n : {5, 10, 24}) {
        for (int k : {1, 2, 3}) {
            std::uint64_t prev_rank = 0;
            bool first = true;
            // enumerate by Gosper and confirm rank is the position
            std::uint64_t z = (1ULL << k) - 1;
            std::uint64_t position = 0;
            while (z < (1ULL << n)) {
                REQUIRE(colex_rank(z) == position);
                REQUIRE(colex_unrank(position, k) == z);
                if (!first) REQUIRE(colex_rank(z) == prev_rank + 1);
                prev_rank = colex_rank(z);
                first = false;
                ++position;
                const std::uint64_t u = z & (~z + 1);
                const std::uint64_t w = z + u;
                z = w | (((z ^ w) / u) >> 2);
            }
        }
    }
    // the largest rank the toolkit can need stays in range
    REQUIRE(colex_rank(((1ULL << 32) - 1) << 32) > 0);  // top 32 of 64 points
}

TEST_CASE("Polytabloid values: transversal support, signs, tilde consistency",
          "[harmonic]") {
    // columns (a,b) = (0,2),(1,4): f = (e2 - e0)(e4 - e1)
    const HarmonicFunction f(6, {{0, 2}, {1, 4}});
    REQUIRE(f.value(0b010100) == 1);    // {2,4}: both bottoms
    REQUIRE(f.value(0b000101) == 0);    // {0,2}: hits column 1 twice
    REQUIRE(f.value(0b010001) == -1);   // {0,4}: top of column 1, bottom of 2
    REQUIRE(f.value(0b000110) == -1);   // {1,2}: bottom of column 1, top of 2
    REQUIRE(f.value(0b000011) == 1);    // {0,1}: both tops
    REQUIRE(f.value(0b100100) == 0);    // {2,5}: 5 lies outside every column
    // tilde equals the sum of values over contained k-subsets
    for (std::uint64_t u = 0; u < 64; ++u) {
        long long direct = 0;
        for (std::uint64_t z = 0; z < 64; ++z)
            if (std::popcount(z) == 2 && (z & u) == z) direct += f.value(z);
        REQUIRE(f.tilde(u) == direct);
    }
}

TEST_CASE("HarmonicFunction validation", "[harmonic]") {
    REQUIRE_THROWS_AS(HarmonicFunction(4, {{0, 0}}), std::domain_error);
    REQUIRE_THROWS_AS(HarmonicFunction(4, {{0, 4}}), std::domain_error);
    REQUIRE_THROWS_AS(HarmonicFunction(4, {{0, 1}, {1, 2}}), std::domain_error);
    REQUIRE_THROWS_AS(HarmonicFunction(4, {{-1, 1}}), std::domain_error);
}

TEST_CASE("Basis dimension is C(n,k) - C(n,k-1)", "[harmonic][property]") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            const auto basis = harm_basis(n, k);
            const BigInt want = binomial(n, k) - binomial(n, k - 1);
            REQUIRE(BigInt(basis.size()) == want);
        }
    // the big ones used by the Golay sweep
    REQUIRE(harm_basis(24, 6).size() == 92092);
    REQUIRE(harm_basis(24, 7).size() == 211508);
    // above the middle layer the space is trivial
    REQUIRE(harm_basis(6, 4).empty());
}

TEST_CASE("gamma annihilation: exhaustive on small instances", "[harmonic][oracle]") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (const auto& f : harm_basis(n, k)) REQUIRE(gamma_annihilates(f));
}

TEST_CASE("gamma annihilation: sampled on 24 points", "[harmonic][oracle]") {
    for (int k : {2, 5, 7}) {
        const auto basis = harm_basis(24, k);
        // first, last, and a mid-stride sample
        REQUIRE(gamma_annihilates(basis.front()));
        REQUIRE(gamma_annihilates(basis.back()));
        REQUIRE(gamma_annihilates(basis[basis.size() / 2]));
        REQUIRE(gamma_annihilates(basis[basis.size() / 3]));
    }
}

TEST_CASE("The sign pattern is what makes polytabloids harmonic", "[harmonic]") {
    // |f| (the unsigned transversal indicator) is NOT in ker gamma: its
    // shadow sum at y = {2} is positive.  Guards against a checker that
    // would accept anything.
    const HarmonicFunction f(6, {{0, 2}, {1, 4}});
    long long s = 0;
    for (int p = 0; p < 6; ++p) {
        if (p == 2) continue;
        const int v = f.value((1ULL << 2) | (1ULL << p));
        s += v < 0 ? -v : v;
    }
    REQUIRE(s != 0);
}

TEST_CASE("Linear independence by rank over the rationals", "[harmonic][oracle]") {
    // n = 8, k <= 4: materialize every basis function as a vector over all
    // k-subsets and row-reduce; the rank must equal the basis size.
    for (int k = 1; k <= 4; ++k) {
        const auto basis = harm_basis(8, k);
        const std::uint64_t cols = detail::binom64(8, k);
        std::vector<std::vector<BigRat>> rows;
        for (const auto& f : basis) {
            std::vector<BigRat> row(cols, BigRat(0));
            for (const auto& [rank, val] : f.value_map()) row[rank] = val;
            rows.push_back(std::move(row));
        }
        // Gaussian elimination
        std::size_t rank = 0;
        for (std::uint64_t c = 0; c < cols && rank < rows.size(); ++c) {
            std::size_t pivot = rank;
            while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == rank || rows[i][c] == 0) continue;
                const BigRat factor = rows[i][c] / rows[rank][c];
                for (std::uint64_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[rank][j];
            }
            ++rank;
        }
        REQUIRE(rank == basis.size());
    }
}

TEST_CASE("value_map agrees with value()", "[harmonic]") {
    const auto basis = harm_basis(7, 3);
    for (const auto& f : basis) {
        const auto vm = f.value_map();
        // every map entry is reproduced by value(); every omitted subset is 0
        std::uint64_t z = 0b0111;
        while (z < (1ULL << 7)) {
            const auto it = vm.find(colex_rank(z));
            const int v = f.value(z);
            if (it == vm.end())
                REQUIRE(v == 0);
            else
                REQUIRE(BigRat(v) == it->second);
            const std::uint64_t u = z & (~z + 1);
            const std::uint64_t w = z + u;
            z = w | (((z ^ w) / u) >> 2);
        }
    }
}

// ---------------------------------------------------------------------------
// Design decisions: both routes on real block systems
// ---------------------------------------------------------------------------

TEST_CASE("Octads: 5-(24,8,1) by both routes, rejected at t=6 by both",
          "[harmonic][design][oracle]") {
    const SupportDesign oct = support_design(golay24(), 8);

    const DelsarteReport del5 = delsarte_t_design_test(oct, 5, 2);
    REQUIRE(del5.is_design);
    REQUIRE(del5.levels_passed == std::vector<int>{1, 2, 3, 4, 5});

    const auto brute5 = brute_force_t_design(oct, 5);
    REQUIRE(brute5.has_value());
    REQUIRE(*brute5 == 1);  // the Steiner system S(5,8,24)

    const DelsarteReport del6 = delsarte_t_design_test(oct, 6, 2);
    REQUIRE_FALSE(del6.is_design);
    REQUIRE(del6.failed_level == 6);
    REQUIRE(del6.failed_sum != 0);

    REQUIRE_FALSE(brute_force_t_design(oct, 6).has_value());
}

TEST_CASE("Octad lambda chain matches the design indices", "[harmonic][design]") {
    const SupportDesign oct = support_design(golay24(), 8);
    const long expected[] = {253, 77, 21, 5, 1};
    for (int t = 1; t <= 5; ++t) {
        const auto l = brute_force_t_design(oct, t);
        REQUIRE(l.has_value());
        REQUIRE(*l == expected[t - 1]);
        // and the closed-form index from the enumerator agrees
        REQUIRE(to_integer(min_weight_design_index(ExtremalClass(1, 0), t)) == expected[t - 1]);
    }
}

TEST_CASE("Dodecads: 5-design by both routes", "[harmonic][design][oracle]") {
    const SupportDesign dod = support_design(golay24(), 12);
    const auto brute = brute_force_t_design(dod, 5);
    REQUIRE(brute.has_value());
    REQUIRE(*brute == 48);
    REQUIRE(delsarte_t_design_test(dod, 5, 2).is_design);
}

TEST_CASE("Hamming [8,4,4] weight-4 shell: 3-(8,4,1) by both routes",
          "[harmonic][design][oracle]") {
    const SupportDesign d = support_design(hamming8(), 4);
    REQUIRE(d.blocks.size() == 14);
    const auto brute = brute_force_t_design(d, 3);
    REQUIRE(brute.has_value());
    REQUIRE(*brute == 1);
    REQUIRE(delsarte_t_design_test(d, 3).is_design);
    REQUIRE_FALSE(delsarte_t_design_test(d, 4).is_design);
    REQUIRE_FALSE(brute_force_t_design(d, 4).has_value());
}

TEST_CASE("A non-design is rejected at the right level by both routes",
          "[harmonic][design][oracle]") {
    // blocks {0,1,2},{0,1,3},{0,2,3} on 4 points: 1-design? point degrees
    // 3,2,2,2 -- not even a 1-design.  Add {1,2,3} and it becomes 2-design.
    SupportDesign bad{4, 3, {0b0111, 0b1011, 0b1101}};
    REQUIRE_FALSE(delsarte_t_design_test(bad, 1).is_design);
    REQUIRE_FALSE(brute_force_t_design(bad, 1).has_value());

    SupportDesign full{4, 3, {0b0111, 0b1011, 0b1101, 0b1110}};
    REQUIRE(delsarte_t_design_test(full, 2).is_design);
    const auto l2 = brute_force_t_design(full, 2);
    REQUIRE(l2.has_value());
    REQUIRE(*l2 == 2);
}

TEST_CASE("Delsarte and brute force agree on random small block systems",
          "[harmonic][design][property]") {
    // deterministic pseudo-random block systems on 10 points, weight 4:
    // whatever each route says, they must say together, per t = 1..3.
    std::uint64_t state = 0x243F6A8885A308D3ULL;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 40; ++trial) {
        SupportDesign d;
        d.n = 10;
        d.w = 4;
        const int nblocks = 3 + static_cast<int>(next() % 20);
        for (int i = 0; i < nblocks; ++i) {
            std::uint64_t b = 0;
            while (std::popcount(b) < 4) b |= 1ULL << (next() % 10);
            d.blocks.push_back(b);
        }
        for (int t = 1; t <= 3; ++t) {
            const bool del = delsarte_t_design_test(d, t).is_design;
            const bool brute = brute_force_t_design(d, t).has_value();
            INFO("trial=" << trial << " t=" << t << " blocks=" << nblocks);
            REQUIRE(del == brute);
        }
    }
}

TEST_CASE("Parallel and serial Delsarte sweeps agree", "[harmonic][design]") {
    const SupportDesign oct = support_design(golay24(), 8);
    const auto serial = delsarte_level_violation(oct, 6, 1);
    const auto parallel = delsarte_level_violation(oct, 6, 4);
    REQUIRE(serial.has_value());
    REQUIRE(parallel.has_value());
    REQUIRE(serial->first == parallel->first);
    REQUIRE(serial->second == parallel->second);
}

// ---------------------------------------------------------------------------
// Complementation
// ---------------------------------------------------------------------------

TEST_CASE("Complementary designs and self-complementarity", "[harmonic][design]") {
    const SupportDesign oct = support_design(golay24(), 8);
    const SupportDesign comp = complementary_design(oct);
    REQUIRE(comp.w == 16);
    REQUIRE(comp.blocks.size() == 759);
    // complement of a 5-design is a 5-design
    REQUIRE(delsarte_t_design_test(comp, 5, 2).is_design);
    REQUIRE_FALSE(is_self_complementary(oct));

    const SupportDesign dod = support_design(golay24(), 12);
    REQUIRE(is_self_complementary(dod));
    REQUIRE(alltop_applicable(dod, 4));
    REQUIRE_FALSE(alltop_applicable(dod, 5));
    REQUIRE_FALSE(alltop_applicable(oct, 4));

    // the upgrade's conclusion, verified rather than assumed: dodecads pass
    // t=4 and then indeed t=5
    REQUIRE(delsarte_t_design_test(dod, 4, 2).is_design);
    REQUIRE(brute_force_t_design(dod, 5).has_value());
}

// ---------------------------------------------------------------------------
// Harmonic weight enumerators of the Golay code
// ---------------------------------------------------------------------------

TEST_CASE("Golay harmonic enumerators vanish for k in {1,...,5} and k=7",
          "[harmonic][golay]") {
    const BinaryCode g = golay24();
    for (int k : {1, 2, 3, 4, 5, 7}) {
        const auto basis = harm_basis(24, k);
        // full sweep for small k; strided sample for the giant spaces
        const std::size_t stride = (k >= 5) ? 97 : 1;
        for (std::size_t i = 0; i < basis.size(); i += stride) {
            const auto res = harmonic_weight_enumerator_of_code(g, basis[i]);
            REQUIRE(res.poly.is_zero());
        }
    }
}

TEST_CASE("Golay k=6 enumerators are multiples of (xy)^6 P12", "[harmonic][golay]") {
    const BinaryCode g = golay24();
    const auto basis = harm_basis(24, 6);
    // (xy)^6 P12 has weight profile {8: 1, 12: -2, 16: 1}
    const auto check_shape = [&](const HarmonicFunction& f) -> bool {
        const auto res = harmonic_weight_enumerator_of_code(g, f);
        if (res.poly.is_zero()) return false;
        const BigInt c = res.poly.coeff(8);
        REQUIRE(res.poly.coeff(12) == BigInt(-2) * c);
        REQUIRE(res.poly.coeff(16) == c);
        for (long w = 0; w <= 24; w += 4)
            if (w != 8 && w != 12 && w != 16) REQUIRE(res.poly.coeff(w) == 0);
        // invariant-class membership: quotient by (xy)^6 decomposes over P12
        const auto dec = relative_invariant_decomposition(res.poly.divide_monomial(6, 6),
                                                          invariant_class(6).prefactor);
        REQUIRE(dec.has_value());
        return true;
    };
    bool some_nonzero = false;
    for (std::size_t i = 0; i < basis.size(); i += 101) some_nonzero |= check_shape(basis[i]);
    // the sample is expected to contain nonzero cases (about a third are);
    // if the stride ever misses, fall back to a full scan so the assertion
    // below stays deterministic
    for (std::size_t i = 0; i < basis.size() && !some_nonzero; ++i)
        some_nonzero = check_shape(basis[i]);
    REQUIRE(some_nonzero);
}
