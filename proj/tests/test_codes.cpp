/**
 * @file test_codes.cpp
 * @brief GF(2) codes: construction and validation, weight distributions,
 *        self-duality, MacWilliams fixed points, support designs, the
 *        built-in [24,12,8] and [8,4,4] codes, and generator-file parsing.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hwe/codes.hpp"
#include "hwe/gleason.hpp"

using namespace hwe;

TEST_CASE("Golay [24,12,8]: parameters and weight distribution", "[codes]") {
    const BinaryCode g = golay24();
    REQUIRE(g.n() == 24);
    REQUIRE(g.k() == 12);
    REQUIRE(g.min_weight() == 8);
    REQUIRE(g.is_self_dual());
    REQUIRE(g.is_doubly_even());
    const auto dist = g.weight_distribution();
    REQUIRE(dist.at(0) == 1);
    REQUIRE(dist.at(8) == 759);
    REQUIRE(dist.at(12) == 2576);
    REQUIRE(dist.at(16) == 759);
    REQUIRE(dist.at(24) == 1);
    REQUIRE(dist.size() == 5);
}

TEST_CASE("Golay enumerator equals the extremal m=1, r=0 enumerator",
          "[codes][oracle]") {
    // Codeword sweep on one side, invariant-theory elimination on the other.
    const XYPoly from_code = golay24().weight_enumerator();
    const XYPoly from_ring = extremal_weight_enumerator(ExtremalClass(1, 0));
    REQUIRE((from_code - from_ring).is_zero());
}

TEST_CASE("Hamming [8,4,4]: parameters and enumerator P8", "[codes]") {
    const BinaryCode h = hamming8();
    REQUIRE(h.n() == 8);
    REQUIRE(h.k() == 4);
    REQUIRE(h.min_weight() == 4);
    REQUIRE(h.is_self_dual());
    REQUIRE(h.is_doubly_even());
    REQUIRE((h.weight_enumerator() - P8()).is_zero());
}

TEST_CASE("Construction validation", "[codes]") {
    REQUIRE_THROWS_AS(BinaryCode(0, {}), std::domain_error);
    REQUIRE_THROWS_AS(BinaryCode(65, {1}), std::domain_error);
    // a row with bits beyond position n-1
    REQUIRE_THROWS_AS(BinaryCode(4, {0b10000}), std::domain_error);
    // linearly dependent rows are rejected (rank < k)
    REQUIRE_THROWS_AS(BinaryCode(4, {0b0011, 0b0110, 0b0101}), std::domain_error);
    // more rows than length
    REQUIRE_THROWS_AS(BinaryCode(2, {0b01, 0b10, 0b11}), std::domain_error);
    REQUIRE_NOTHROW(BinaryCode(4, {0b0011, 0b0110}));
}

TEST_CASE("for_each_codeword visits 2^k distinct words", "[codes]") {
    const BinaryCode h = hamming8();
    std::set<std::uint64_t> seen;
    h.for_each_codeword([&](std::uint64_t c) {
        seen.insert(c);
        REQUIRE(std::popcount(c) % 4 == 0);  // doubly even
    });
    REQUIRE(seen.size() == 16);
    REQUIRE(seen.count(0) == 1);
}

TEST_CASE("is_self_dual rejects non-self-dual codes", "[codes]") {
    // [4,2] even code with a self-intersection of odd parity:
    // row 0b0111 has weight 3 -> <r,r> = 1
    const BinaryCode c(4, {0b0111, 0b1000});
    REQUIRE_FALSE(c.is_self_dual());
    // even weights but wrong dimension
    const BinaryCode d(4, {0b1111});
    REQUIRE_FALSE(d.is_self_dual());
}

TEST_CASE("MacWilliams fixed point for self-dual enumerators", "[codes][property]") {
    REQUIRE(macwilliams_self_dual(golay24().weight_enumerator()));
    REQUIRE(macwilliams_self_dual(hamming8().weight_enumerator()));
    // all extremal enumerators in range are fixed points
    for (int r = 0; r <= 2; ++r)
        for (long m = (r == 0 ? 1 : 0); m <= 4; ++m)
            REQUIRE(macwilliams_self_dual(extremal_weight_enumerator(ExtremalClass(m, r))));
    // and a non-self-dual distribution is not
    REQUIRE_FALSE(macwilliams_self_dual(XYPoly::monomial(8, 0, 1)));
}

TEST_CASE("profile: format and Gleason coefficients", "[codes]") {
    const CodeProfile p = profile(golay24());
    REQUIRE(p.n == 24);
    REQUIRE(p.k == 12);
    REQUIRE(p.min_weight == 8);
    REQUIRE(p.self_dual);
    REQUIRE(p.doubly_even);
    REQUIRE(p.macwilliams_ok);
    REQUIRE(p.gleason_coefficients.has_value());
    REQUIRE(*p.gleason_coefficients == std::vector<BigRat>{1, -42});
    const CodeProfile q = profile(hamming8());
    REQUIRE(q.gleason_coefficients.has_value());
    REQUIRE(*q.gleason_coefficients == std::vector<BigRat>{1});
}

TEST_CASE("Support designs: octads and dodecads", "[codes]") {
    const BinaryCode g = golay24();
    const SupportDesign oct = support_design(g, 8);
    REQUIRE(oct.n == 24);
    REQUIRE(oct.w == 8);
    REQUIRE(oct.blocks.size() == 759);
    for (std::uint64_t b : oct.blocks) REQUIRE(std::popcount(b) == 8);
    const SupportDesign dod = support_design(g, 12);
    REQUIRE(dod.blocks.size() == 2576);
    // absent weight names the available ones
    REQUIRE_THROWS_WITH(support_design(g, 4),
                        Catch::Matchers::ContainsSubstring("8") &&
                            Catch::Matchers::ContainsSubstring("12"));
}

TEST_CASE("builtin_code lookup", "[codes]") {
    REQUIRE(builtin_code("golay24").n() == 24);
    REQUIRE(builtin_code("hamming8").n() == 8);
    REQUIRE_THROWS_AS(builtin_code("nonesuch"), std::domain_error);
}

TEST_CASE("Generator text round-trip", "[codes]") {
    const BinaryCode g = golay24();
    const std::string text = generator_text(g);
    const BinaryCode back = parse_generator_text(text);
    REQUIRE(back.n() == 24);
    REQUIRE(back.k() == 12);
    REQUIRE((back.weight_enumerator() - g.weight_enumerator()).is_zero());
}

TEST_CASE("Generator parsing: comments, blanks, and errors", "[codes]") {
    const BinaryCode c = parse_generator_text("# a comment\n\n1100\n  \n0011\n");
    REQUIRE(c.n() == 4);
    REQUIRE(c.k() == 2);
    REQUIRE_THROWS_AS(parse_generator_text("110\n01\n"), std::domain_error);   // ragged
    REQUIRE_THROWS_AS(parse_generator_text("10x1\n"), std::domain_error);      // bad char
    REQUIRE_THROWS_AS(parse_generator_text("# only comments\n"), std::domain_error);
    REQUIRE_THROWS_AS(parse_generator_text("11\n11\n"), std::domain_error);    // dependent
}
