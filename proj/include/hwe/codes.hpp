/**
 * @file codes.hpp
 * @brief Binary linear codes: generator matrices, codeword enumeration,
 *        weight distributions, self-duality checks, support designs.
 *
 * Rows are bitmasks (bit j = coordinate j), so lengths are capped at 64 --
 * ample for the desk-scale codes this toolkit studies (the extended Hamming
 * [8,4,4] and the binary Golay [24,12,8] ship as builtins).  Codeword
 * enumeration walks a Gray code over the message space, one row-XOR per
 * codeword, and refuses dimensions above 26 (2^26 codewords).
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwe/bigint.hpp"
#include "hwe/gleason.hpp"
#include "hwe/xypoly.hpp"

namespace hwe {

/// The supports of all weight-w codewords, as bitmask blocks on n points.
struct SupportDesign {
    int n;
    int w;
    std::vector<std::uint64_t> blocks;
};

class BinaryCode {
  public:
    /**
     * @param n     block length, 1 <= n <= 64
     * @param rows  generator rows as bitmasks; must be linearly independent
     *              over GF(2) (rank-deficient input is rejected, not repaired)
     */
    BinaryCode(int n, std::vector<std::uint64_t> rows) : n_(n), rows_(std::move(rows)) {
        if (n < 1 || n > 64)
            throw std::domain_error("BinaryCode: length must be in [1,64], got " + std::to_string(n));
        const std::uint64_t mask = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
        for (std::uint64_t row : rows_)
            if (row & ~mask)
                throw std::domain_error("BinaryCode: generator row has bits beyond length " +
                                        std::to_string(n));
        if (gf2_rank(rows_) != rows_.size())
            throw std::domain_error("BinaryCode: generator rows are linearly dependent over GF(2)");
    }

    int n() const { return n_; }
    int k() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::uint64_t>& generators() const { return rows_; }

    /// Visit all 2^k codewords (Gray-code order, starting at 0).
    template <class F>
    void for_each_codeword(F&& fn) const {
        if (k() > 26)
            throw std::domain_error("BinaryCode: refusing to enumerate 2^" + std::to_string(k()) +
                                    " codewords (limit 2^26)");
        std::uint64_t c = 0;
        fn(c);
        const std::uint64_t total = 1ULL << k();
        for (std::uint64_t i = 1; i < total; ++i) {
            c ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
            fn(c);
        }
    }

    /// A_w for every w with A_w > 0.
    std::map<int, BigInt> weight_distribution() const {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_) + 1, 0);
        for_each_codeword([&counts](std::uint64_t c) { ++counts[static_cast<std::size_t>(std::popcount(c))]; });
        std::map<int, BigInt> dist;
        for (int w = 0; w <= n_; ++w)
            if (counts[static_cast<std::size_t>(w)]) dist[w] = counts[static_cast<std::size_t>(w)];
        return dist;
    }

    XYPoly weight_enumerator() const {
        XYPoly w = XYPoly::zero(n_);
        for (const auto& [wt, a] : weight_distribution()) w = w + XYPoly::monomial(n_, wt, a);
        return w;
    }

    int min_weight() const {
        int best = n_ + 1;
        for_each_codeword([&best](std::uint64_t c) {
            if (c != 0) best = std::min(best, static_cast<int>(std::popcount(c)));
        });
        if (best > n_) throw std::logic_error("min_weight: zero code");
        return best;
    }

    /// Self-dual: k = n/2 and G G^T = 0 (every pair of rows meets evenly).
    bool is_self_dual() const {
        if (2 * k() != n_) return false;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = i; j < rows_.size(); ++j)
                if (std::popcount(rows_[i] & rows_[j]) % 2 != 0) return false;
        return true;
    }

    /// Doubly even: every generator weight divisible by 4 and pairwise
    /// intersections even (which forces all codeword weights to 0 mod 4).
    bool is_doubly_even() const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (std::popcount(rows_[i]) % 4 != 0) return false;
            for (std::size_t j = i + 1; j < rows_.size(); ++j)
                if (std::popcount(rows_[i] & rows_[j]) % 2 != 0) return false;
        }
        return true;
    }

  private:
    int n_;
    std::vector<std::uint64_t> rows_;

    static std::size_t gf2_rank(std::vector<std::uint64_t> rows) {
        std::size_t rank = 0;
        for (int bit = 63; bit >= 0; --bit) {
            const std::uint64_t probe = 1ULL << bit;
            std::size_t pivot = rank;
            while (pivot < rows.size() && !(rows[pivot] & probe)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != rank && (rows[i] & probe)) rows[i] ^= rows[rank];
            ++rank;
        }
        return rank;
    }
};

/// Supports of all weight-w codewords; errors (naming the available
/// weights) if A_w = 0.
inline SupportDesign support_design(const BinaryCode& code, int w) {
    SupportDesign d;
    d.n = code.n();
    d.w = w;
    code.for_each_codeword([&d, w](std::uint64_t c) {
        if (std::popcount(c) == w) d.blocks.push_back(c);
    });
    if (d.blocks.empty()) {
        std::ostringstream msg;
        msg << "support_design: the code has no weight-" << w << " codewords; available weights:";
        for (const auto& [wt, a] : code.weight_distribution())
            if (wt != 0) msg << " " << wt;
        throw std::domain_error(msg.str());
    }
    return d;
}

/**
 * MacWilliams self-duality check at the enumerator level:
 * 2^(n/2) W(x, y) = W(x+y, x-y).
 */
inline bool macwilliams_self_dual(const XYPoly& w) {
    const long n = w.degree();
    if (n % 2 != 0) return false;
    const XYPoly xpy = XYPoly::monomial(1, 0, 1) + XYPoly::monomial(1, 1, 1);
    const XYPoly xmy = XYPoly::monomial(1, 0, 1) - XYPoly::monomial(1, 1, 1);
    XYPoly transformed = XYPoly::zero(n);
    for (const auto& [e, c] : w.terms()) transformed = transformed + (xpy.pow(n - e) * xmy.pow(e)) * c;
    BigInt scale = BigInt(1) << static_cast<unsigned>(n / 2);
    return transformed == w * scale;
}

struct CodeProfile {
    int n;
    int k;
    int min_weight;
    bool self_dual;
    bool doubly_even;
    bool macwilliams_ok;                       // enumerator-level self-duality
    std::map<int, BigInt> weight_distribution;
    std::optional<std::vector<BigRat>> gleason_coefficients;  // W in C[P8,P24], when applicable
};

inline CodeProfile profile(const BinaryCode& code) {
    CodeProfile p;
    p.n = code.n();
    p.k = code.k();
    p.min_weight = code.min_weight();
    p.self_dual = code.is_self_dual();
    p.doubly_even = code.is_doubly_even();
    p.weight_distribution = code.weight_distribution();
    const XYPoly w = code.weight_enumerator();
    p.macwilliams_ok = p.self_dual && macwilliams_self_dual(w);
    if (p.self_dual && p.doubly_even && p.n % 8 == 0)
        p.gleason_coefficients = relative_invariant_decomposition(w, XYPoly::monomial(0, 0, 1));
    return p;
}

// ---------------------------------------------------------------------------
// Builtins
// ---------------------------------------------------------------------------

/**
 * The [24,12,8] binary Golay code as [I | B]: B is the symmetric 12x12
 * bordered back-circulant on the nonzero quadratic residues mod 11.
 */
inline BinaryCode golay24() {
    // B[i][j] for i,j in 0..11: border of ones except B[0][0] = 0; core
    // (i,j >= 1) has a one iff (i + j - 2) mod 11 is in {0,1,3,4,5,9}.
    static const bool qr[11] = {true, true, false, true, true, true, false, false, false, true, false};
    std::vector<std::uint64_t> rows(12, 0);
    for (int i = 0; i < 12; ++i) {
        rows[static_cast<std::size_t>(i)] |= 1ULL << i;  // identity part
        for (int j = 0; j < 12; ++j) {
            bool bit;
            if (i == 0 && j == 0)
                bit = false;
            else if (i == 0 || j == 0)
                bit = true;
            else
                bit = qr[(i + j - 2) % 11];
            if (bit) rows[static_cast<std::size_t>(i)] |= 1ULL << (12 + j);
        }
    }
    return BinaryCode(24, rows);
}

/// The extended Hamming [8,4,4] code as [I | A].
inline BinaryCode hamming8() {
    return BinaryCode(8, {
                             0b01110001ULL,  // coordinates 1000 1110
                             0b10110010ULL,  // coordinates 0100 1101
                             0b11010100ULL,  // coordinates 0010 1011
                             0b11101000ULL,  // coordinates 0001 0111
                         });
}

inline BinaryCode builtin_code(const std::string& name) {
    if (name == "golay24") return golay24();
    if (name == "hamming8") return hamming8();
    throw std::domain_error("builtin_code: unknown builtin '" + name + "' (available: golay24, hamming8)");
}

// ---------------------------------------------------------------------------
// Generator file I/O: ASCII, one row per line of '0'/'1', uniform length.
// Blank lines and lines starting with '#' are skipped.
// ---------------------------------------------------------------------------

inline BinaryCode parse_generator_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::uint64_t> rows;
    std::string line;
    int n = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.erase(0, 1);
        if (line.empty() || line[0] == '#') continue;
        if (n == -1) {
            n = static_cast<int>(line.size());
            if (n < 1 || n > 64)
                throw std::domain_error("generator file: row length must be in [1,64], got " +
                                        std::to_string(n));
        } else if (static_cast<int>(line.size()) != n) {
            throw std::domain_error("generator file: line " + std::to_string(lineno) + " has length " +
                                    std::to_string(line.size()) + ", expected " + std::to_string(n));
        }
        std::uint64_t row = 0;
        for (int j = 0; j < n; ++j) {
            const char ch = line[static_cast<std::size_t>(j)];
            if (ch == '1')
                row |= 1ULL << j;
            else if (ch != '0')
                throw std::domain_error("generator file: line " + std::to_string(lineno) +
                                        " has character '" + std::string(1, ch) + "', expected '0'/'1'");
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw std::domain_error("generator file: no generator rows found");
    return BinaryCode(n, rows);
}

inline BinaryCode load_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open generator file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_generator_text(buf.str());
}

inline std::string generator_text(const BinaryCode& code) {
    std::ostringstream out;
    for (std::uint64_t row : code.generators()) {
        for (int j = 0; j < code.n(); ++j) out << (((row >> j) & 1) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

}  // namespace hwe
