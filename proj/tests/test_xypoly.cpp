/**
 * @file test_xypoly.cpp
 * @brief Sparse homogeneous bivariate polynomials: ring operations, powers,
 *        the x/y swap, exact monomial division, and rendering.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <catch2/catch_amalgamated.hpp>

#include "hwe/xypoly.hpp"

using namespace hwe;

namespace {

// x^8 + 14 x^4 y^4 + y^8, written out by hand as the reference element
XYPoly p8_by_hand() {
    return XYPoly::monomial(8, 0, 1) + XYPoly::monomial(8, 4, 14) + XYPoly::monomial(8, 8, 1);
}

}  // namespace

TEST_CASE("monomial and coefficient access", "[xypoly]") {
    const XYPoly p = XYPoly::monomial(10, 3, -7);
    REQUIRE(p.degree() == 10);
    REQUIRE(p.coeff(3) == -7);
    REQUIRE(p.coeff(0) == 0);
    REQUIRE(p.coeff(10) == 0);
    REQUIRE_THROWS_AS(p.coeff(11), std::domain_error);
    REQUIRE_THROWS_AS(p.coeff(-1), std::domain_error);
    REQUIRE_THROWS_AS(XYPoly::monomial(4, 5, 1), std::domain_error);
}

TEST_CASE("addition and subtraction require equal degrees", "[xypoly]") {
    const XYPoly a = XYPoly::monomial(8, 0, 2);
    const XYPoly b = XYPoly::monomial(8, 8, 3);
    const XYPoly s = a + b;
    REQUIRE(s.coeff(0) == 2);
    REQUIRE(s.coeff(8) == 3);
    REQUIRE((s - s).is_zero());
    REQUIRE_THROWS_AS(a + XYPoly::monomial(4, 0, 1), std::domain_error);
    // cancellation erases the term entirely (sparse invariant)
    const XYPoly c = s - b;
    REQUIRE(c.terms().size() == 1);
}

TEST_CASE("multiplication is the convolution on y-exponents", "[xypoly]") {
    // (x^4 - y^4)^2 = x^8 - 2 x^4 y^4 + y^8
    const XYPoly d = XYPoly::monomial(4, 0, 1) - XYPoly::monomial(4, 4, 1);
    const XYPoly d2 = d * d;
    REQUIRE(d2.degree() == 8);
    REQUIRE(d2.coeff(0) == 1);
    REQUIRE(d2.coeff(4) == -2);
    REQUIRE(d2.coeff(8) == 1);
    // scalar multiple
    const XYPoly t = d2 * BigInt(-3);
    REQUIRE(t.coeff(4) == 6);
    // degree bookkeeping survives multiplying by the zero polynomial
    const XYPoly z = d * XYPoly::zero(4);
    REQUIRE(z.is_zero());
    REQUIRE(z.degree() == 8);
}

TEST_CASE("pow by binary exponentiation equals iterated product", "[xypoly]") {
    const XYPoly base = p8_by_hand();
    XYPoly iter = XYPoly::monomial(0, 0, 1);
    for (int e = 0; e <= 6; ++e) {
        REQUIRE(base.pow(e).degree() == 8 * e);
        REQUIRE((base.pow(e) - iter).is_zero());
        iter = iter * base;
    }
    REQUIRE_THROWS_AS(base.pow(-1), std::domain_error);
}

TEST_CASE("swap_xy mirrors the coefficient vector", "[xypoly]") {
    const XYPoly p = XYPoly::monomial(12, 2, 5) + XYPoly::monomial(12, 12, -1);
    const XYPoly q = p.swap_xy();
    REQUIRE(q.coeff(10) == 5);
    REQUIRE(q.coeff(0) == -1);
    REQUIRE((p.swap_xy().swap_xy() - p).is_zero());
    // P8 is symmetric
    REQUIRE((p8_by_hand().swap_xy() - p8_by_hand()).is_zero());
}

TEST_CASE("divide_monomial is exact division by x^a y^b", "[xypoly]") {
    // x^2 y^2 (x^4 - y^4)^2 has every term divisible by x^2 y^2
    const XYPoly d = XYPoly::monomial(4, 0, 1) - XYPoly::monomial(4, 4, 1);
    const XYPoly p = XYPoly::monomial(4, 2, 1) * (d * d);
    const XYPoly q = p.divide_monomial(2, 2);
    REQUIRE(q.degree() == 8);
    REQUIRE(q.coeff(0) == 1);
    REQUIRE(q.coeff(4) == -2);
    REQUIRE(q.coeff(8) == 1);
    REQUIRE_THROWS_AS(p.divide_monomial(3, 0), std::domain_error);
    REQUIRE_THROWS_AS(p.divide_monomial(0, 3), std::domain_error);
}

TEST_CASE("render produces conventional text", "[xypoly]") {
    REQUIRE(p8_by_hand().render() == "x^8 + 14*x^4*y^4 + y^8");
    const XYPoly m = XYPoly::monomial(3, 1, -2);
    REQUIRE(m.render() == "-2*x^2*y");
    REQUIRE(XYPoly::zero(5).render() == "0 (degree 5)");
}
