/**
 * @file xypoly.hpp
 * @brief Homogeneous bivariate polynomials with exact integer coefficients.
 *
 * A weight enumerator of a length-n binary code is a homogeneous polynomial
 * in x and y of degree n.  This module represents such polynomials sparsely:
 * a declared total degree plus a map from y-exponent to nonzero coefficient
 * (the x-exponent is implied, x^(deg - e) y^e).  The zero polynomial of any
 * declared degree is the empty map.
 *
 * Values are immutable from the caller's point of view: all operations
 * return fresh polynomials.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hwe/bigint.hpp"

namespace hwe {

class XYPoly {
  public:
    /// Zero polynomial of degree 0.
    XYPoly() : deg_(0) {}

    /// Zero polynomial of declared degree d >= 0.
    static XYPoly zero(long d) {
        check_degree(d);
        XYPoly p;
        p.deg_ = d;
        return p;
    }

    /// c * x^(d - yexp) * y^yexp.
    static XYPoly monomial(long d, long yexp, BigInt c) {
        check_degree(d);
        XYPoly p;
        p.deg_ = d;
        if (yexp < 0 || yexp > d)
            throw std::domain_error("XYPoly::monomial: y-exponent " + std::to_string(yexp) +
                                    " outside [0," + std::to_string(d) + "]");
        if (c != 0) p.terms_[yexp] = std::move(c);
        return p;
    }

    long degree() const { return deg_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Map from y-exponent to (nonzero) coefficient, ascending.
    const std::map<long, BigInt>& terms() const { return terms_; }

    /**
     * Coefficient of x^(deg - yexp) y^yexp.  Absent terms are 0.
     * Throws for yexp outside [0, degree] -- asking for a coefficient a
     * homogeneous polynomial cannot have is always a caller bug.
     */
    const BigInt& coeff(long yexp) const {
        if (yexp < 0 || yexp > deg_)
            throw std::domain_error("XYPoly::coeff: y-exponent " + std::to_string(yexp) +
                                    " outside [0," + std::to_string(deg_) + "]");
        auto it = terms_.find(yexp);
        static const BigInt kZero = 0;
        return it == terms_.end() ? kZero : it->second;
    }

    /// Addition; both operands must share the same declared degree.
    XYPoly operator+(const XYPoly& o) const {
        check_same_degree(o, "+");
        XYPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    XYPoly operator-(const XYPoly& o) const {
        check_same_degree(o, "-");
        XYPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    /// Scalar multiple.
    XYPoly operator*(const BigInt& s) const {
        XYPoly r = XYPoly::zero(deg_);
        if (s == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }

    /// Product; degrees add.
    XYPoly operator*(const XYPoly& o) const {
        XYPoly r = XYPoly::zero(deg_ + o.deg_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    /// Nonnegative power by binary exponentiation; p^0 == 1 (degree 0).
    XYPoly pow(long e) const {
        if (e < 0) throw std::domain_error("XYPoly::pow: negative exponent " + std::to_string(e));
        XYPoly result = XYPoly::monomial(0, 0, 1);
        XYPoly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base_square_guard(e, base);
            e >>= 1;
        }
        return result;
    }

    bool operator==(const XYPoly& o) const { return deg_ == o.deg_ && terms_ == o.terms_; }
    bool operator!=(const XYPoly& o) const { return !(*this == o); }

    /// Swap x and y: coefficient of y^e becomes coefficient of y^(deg-e).
    XYPoly swap_xy() const {
        XYPoly r = XYPoly::zero(deg_);
        for (const auto& [e, c] : terms_) r.terms_[deg_ - e] = c;
        return r;
    }

    /**
     * Exact quotient by a monomial x^xe y^ye.  Every term must be divisible
     * (y-exponent >= ye and x-exponent >= xe); throws otherwise.
     */
    XYPoly divide_monomial(long xe, long ye) const {
        if (xe < 0 || ye < 0) throw std::domain_error("XYPoly::divide_monomial: negative exponent");
        XYPoly r = XYPoly::zero(deg_ - xe - ye);
        for (const auto& [e, c] : terms_) {
            if (e < ye || (deg_ - e) < xe)
                throw std::domain_error("XYPoly::divide_monomial: term y^" + std::to_string(e) +
                                        " not divisible by x^" + std::to_string(xe) + " y^" +
                                        std::to_string(ye));
            r.terms_[e - ye] = c;
        }
        return r;
    }

    /**
     * Human-readable form, descending x-exponent, e.g.
     * "x^8 + 14*x^4*y^4 + y^8" or "0 (degree 24)".
     */
    std::string render() const {
        if (terms_.empty()) return "0 (degree " + std::to_string(deg_) + ")";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            const long xe = deg_ - e;
            const bool has_var = (xe > 0) || (e > 0);
            if (a != 1 || !has_var) out << a.str();
            bool need_star = (a != 1);
            if (xe > 0) {
                if (need_star) out << "*";
                out << "x";
                if (xe > 1) out << "^" << xe;
                need_star = true;
            }
            if (e > 0) {
                if (need_star) out << "*";
                out << "y";
                if (e > 1) out << "^" << e;
            }
        }
        return out.str();
    }

    /**
     * JSON-ready term list: [[yexp, "coefficient"], ...] ascending in yexp,
     * coefficients as decimal strings (they routinely exceed 64 bits).
     */
    std::vector<std::pair<long, std::string>> term_list() const {
        std::vector<std::pair<long, std::string>> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.emplace_back(e, c.str());
        return out;
    }

  private:
    long deg_;
    std::map<long, BigInt> terms_;

    static void check_degree(long d) {
        if (d < 0) throw std::domain_error("XYPoly: negative degree " + std::to_string(d));
    }

    void check_same_degree(const XYPoly& o, const char* op) const {
        if (deg_ != o.deg_)
            throw std::domain_error(std::string("XYPoly: '") + op + "' needs equal degrees, got " +
                                    std::to_string(deg_) + " and " + std::to_string(o.deg_));
    }

    void add_term(long e, const BigInt& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    // Avoid one squaring past the last needed bit (keeps pow cheap for large e).
    static void base_square_guard(long e, XYPoly& base) {
        if (e > 1) base = base * base;
    }
};

/// x^e as a polynomial of degree e.
inline XYPoly x_pow(long e) { return XYPoly::monomial(e, 0, 1); }

/// y^e as a polynomial of degree e.
inline XYPoly y_pow(long e) { return XYPoly::monomial(e, e, 1); }

}  // namespace hwe
