/**
 * @file design_classifier.hpp
 * @brief Design strengths of the support designs of extremal Type II codes.
 *
 * For an extremal Type II code of length n = 24m + 8r, every weight-w
 * support design D_w is a T-design (Delsarte sense: the harmonic functional
 * vanishes at every level in T) for a baseline set T depending only on r,
 * with a handful of provable upgrades:
 *
 *     r = 0: baseline {1,2,3,4,5,7}
 *     r = 1: baseline {1,2,3,5}; middle weight 12m+4 adds 7;
 *            m=4, w in {24,80} adds 6;  m=8, w in {40,160} adds 8
 *     r = 2: baseline {1,3}; middle weight 12m+8 adds 5
 *
 * (A T-design with gaps is weaker than a classical t-design: {1,2,3,5}
 * does not imply level 4.)  The classifier also propagates *assumed*
 * design strengths through the simultaneity theorems ("all weights are
 * t-designs or not, simultaneously") and the dichotomy pairings
 * (6=>7 for r=0, 4=>5 for r=1, 2=>3 for r=2), flagging any consequence
 * that contradicts a proven never-statement.
 *
 * The lambda-integrality filter reproduces the classical necessary
 * condition for the minimum-weight design upgrades: every candidate m must
 * keep lambda_i = A_d * C(d,i)/C(n,i) integral.  The published candidate
 * m-sets are stored verbatim as golden data and *compared* against the
 * filter output rather than trusted silently; see compare_msets.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwe/bigint.hpp"
#include "hwe/gleason.hpp"

namespace hwe {

/// Levels every weight of every extremal length-(24m+8r) code provably carries.
inline std::set<int> baseline_design_set(int r) {
    switch (r) {
        case 0: return {1, 2, 3, 4, 5, 7};
        case 1: return {1, 2, 3, 5};
        case 2: return {1, 3};
        default: throw std::domain_error("baseline_design_set: r must be 0, 1 or 2");
    }
}

/// Simultaneity level: all weights are t-designs or not, simultaneously.
inline int simultaneity_level(int r) {
    switch (r) {
        case 0: return 6;
        case 1: return 4;
        case 2: return 2;
        default: throw std::domain_error("simultaneity_level: r must be 0, 1 or 2");
    }
}

/// An asserted design strength: "D_w holds a t-design" (all levels 1..t).
struct Assumption {
    long w;
    int t;
};

struct Classification {
    long m;
    int r;
    long w;
    std::set<int> levels;               // the T-set
    bool contradiction = false;         // propagation reached a proven-never level
    std::vector<std::string> notes;     // provenance, one line per non-baseline level
};

namespace detail {

/// Weights where the level-L harmonic functional vanishes identically
/// (the design level holds unconditionally *and* assumptions at those
/// weights carry no information).
inline std::set<long> exceptional_weights(long m, int r, int level) {
    if (r == 1) {
        if (level == 6 && m == 4) return {24, 80};
        if (level == 7) return {12 * m + 4};
        if (level == 8 && m == 8) return {40, 160};
    } else if (r == 2) {
        if (level == 5) return {12 * m + 8};
    }
    return {};
}

/// Highest level with a propagation rule (simultaneity statement) for r.
inline int max_propagation_level(int r) { return r == 2 ? 6 : 8; }

/// True iff level L at weight w is ruled out by a proven never-statement.
inline bool level_is_never(long m, int r, long w, int level) {
    if (r == 0 && level == 8) return true;
    if (r == 1 && level == 8) return !(m == 8 && (w == 40 || w == 160));
    if (r == 2 && level == 6) return true;
    return false;
}

inline void check_weight(const ExtremalClass& cls, long w, const char* who) {
    const long d = cls.min_weight();
    if (w % 4 == 0 && w >= d && w <= cls.n() - d) return;
    std::ostringstream msg;
    msg << who << ": weight " << w << " is not a nontrivial weight of the [" << cls.n() << ", "
        << cls.n() / 2 << ", " << d << "] class; valid weights are the multiples of 4 in [" << d
        << ", " << cls.n() - d << "]";
    throw std::domain_error(msg.str());
}

}  // namespace detail

/**
 * The provable design-level set of D_w, plus the consequences of any
 * assumed strengths.  m >= 1 (the propositions need a nonempty P24 part);
 * w must lie on the weight lattice.
 */
inline Classification classify(long m, int r, long w, const std::vector<Assumption>& assumptions = {}) {
    ExtremalClass cls(m, r);
    if (m < 1) throw std::domain_error("classify: the classification propositions require m >= 1");
    detail::check_weight(cls, w, "classify");

    Classification out;
    out.m = m;
    out.r = r;
    out.w = w;
    out.levels = baseline_design_set(r);

    auto add = [&out](int level, const std::string& why) {
        if (out.levels.insert(level).second) out.notes.push_back(why);
    };

    // Unconditional upgrades: exceptional vanishing coefficients.
    const long middle = cls.middle_weight();
    if (r == 1 && w == middle) add(7, "middle weight " + std::to_string(middle) + ": level-7 coefficient vanishes");
    if (r == 2 && w == middle) add(5, "middle weight " + std::to_string(middle) + ": level-5 coefficient vanishes");
    if (r == 1 && m == 4 && (w == 24 || w == 80)) add(6, "m=4 exceptional weight: level-6 coefficient vanishes");
    if (r == 1 && m == 8 && (w == 40 || w == 160)) add(8, "m=8 exceptional weight: level-8 coefficient vanishes");

    // Assumption propagation: every level up to max_propagation_level(r) has
    // a simultaneity statement (level <= simultaneity_level(r) with no
    // exceptions, higher levels with the exceptional-weight escape hatches).
    const int pair_from = 6 - 2 * r;
    const int pair_to = 7 - 2 * r;
    for (const Assumption& as : assumptions) {
        detail::check_weight(cls, as.w, "classify (assumption)");
        if (as.t < 1)
            throw std::domain_error("classify: assumed design level must be >= 1, got " + std::to_string(as.t));
        const std::string tag = "assumed " + std::to_string(as.t) + "-design at w=" + std::to_string(as.w);
        for (int level = 1; level <= as.t; ++level) {
            if (level > detail::max_propagation_level(r)) {
                out.notes.push_back(tag + ": no propagation rule above level " +
                                    std::to_string(detail::max_propagation_level(r)));
                break;
            }
            const auto exceptional = detail::exceptional_weights(m, r, level);
            if (exceptional.count(as.w)) continue;  // functional vanishes at as.w: assumption carries no info
            add(level, tag + ": simultaneity propagates level " + std::to_string(level) + " to all weights");
            if (level == pair_from)
                add(pair_to, tag + ": dichotomy pairing " + std::to_string(pair_from) + "=>" +
                                 std::to_string(pair_to));
        }
    }

    for (int level : out.levels) {
        if (detail::level_is_never(m, r, w, level)) {
            out.contradiction = true;
            out.notes.push_back("level " + std::to_string(level) +
                                " contradicts a proven never-statement for this class");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lambda-integrality filter and the published candidate m-sets
// ---------------------------------------------------------------------------

struct LambdaFilterEntry {
    long m;
    std::vector<BigRat> lambdas;  // lambda_1 .. lambda_through of the minimum-weight design
};

struct LambdaFilterResult {
    int r;
    int t;
    int through;
    std::vector<long> ms;                  // ascending m with all lambda_i integral, i <= through
    std::vector<LambdaFilterEntry> detail; // lambda values for the surviving m
};

/**
 * All m within the existence bound whose minimum-weight design indices
 * lambda_i = A_(4m+4) C(4m+4,i)/C(n,i) are integral for every i <= through.
 * `t` labels the design level being probed (t <= through; the pairings
 * 6=>7 etc. are expressed by passing through > t).  Note the filter output
 * is insensitive to whether i runs from 1 or from t -- a tested property.
 */
inline LambdaFilterResult lambda_integrality_filter(int r, int t, int through) {
    if (t < 1 || through < t)
        throw std::domain_error("lambda_integrality_filter: need 1 <= t <= through");
    LambdaFilterResult out;
    out.r = r;
    out.t = t;
    out.through = through;
    for (long m = 1; m <= existence_bound(r); ++m) {
        ExtremalClass cls(m, r);
        if (through > cls.min_weight()) continue;  // degenerate: block size below the level
        const BigInt b = min_weight_block_count(cls);
        std::vector<BigRat> lambdas;
        bool ok = true;
        for (int i = 1; i <= through; ++i) {
            BigRat li = BigRat(b * binomial(cls.min_weight(), i), binomial(cls.n(), i));
            if (!is_integer(li)) {
                ok = false;
                break;
            }
            lambdas.push_back(std::move(li));
        }
        if (ok) {
            out.ms.push_back(m);
            out.detail.push_back({m, std::move(lambdas)});
        }
    }
    return out;
}

/// The seven published upgrade statements about minimum-weight designs.
enum class TheoremCase { kR0T6, kR1T4, kR1T6, kR1T7, kR2T2, kR2T4, kR2T5 };

struct TheoremCaseSpec {
    TheoremCase id;
    int r;
    int t;
    int through;     // filter depth covering the paired conclusion
    const char* label;
};

inline const std::vector<TheoremCaseSpec>& theorem_cases() {
    static const std::vector<TheoremCaseSpec> cases = {
        {TheoremCase::kR0T6, 0, 6, 7, "r=0 6=>7"}, {TheoremCase::kR1T4, 1, 4, 5, "r=1 4=>5"},
        {TheoremCase::kR1T6, 1, 6, 6, "r=1 t=6"},  {TheoremCase::kR1T7, 1, 7, 7, "r=1 t=7"},
        {TheoremCase::kR2T2, 2, 2, 3, "r=2 2=>3"}, {TheoremCase::kR2T4, 2, 4, 4, "r=2 t=4"},
        {TheoremCase::kR2T5, 2, 5, 5, "r=2 t=5"},
    };
    return cases;
}

/// Published candidate m-sets, stored verbatim as golden data.
inline const std::vector<long>& golden_mset(TheoremCase c) {
    static const std::vector<long> r0t6 = {15, 52, 55, 57, 59, 60, 63, 90, 93,
                                           104, 105, 107, 118, 125, 127, 135, 143, 151};
    static const std::vector<long> r1t4 = {15, 35, 45, 58, 75, 85, 90, 95, 113, 115, 120, 125};
    static const std::vector<long> r1t6 = {58};
    static const std::vector<long> r1t7 = {58};
    static const std::vector<long> r2t2 = {5,  10, 20, 23, 25, 35, 44, 45, 50, 55, 60, 70,
                                           72, 75, 79, 80, 85, 93, 95, 110, 118, 120, 121, 123,
                                           125, 130, 142, 144, 145, 149, 150, 155, 156, 157, 160, 163};
    static const std::vector<long> r2t4 = {10, 23, 79, 93, 118, 120, 123, 125, 142};
    static const std::vector<long> r2t5 = {23, 79, 93, 118, 120, 123, 125, 142};
    switch (c) {
        case TheoremCase::kR0T6: return r0t6;
        case TheoremCase::kR1T4: return r1t4;
        case TheoremCase::kR1T6: return r1t6;
        case TheoremCase::kR1T7: return r1t7;
        case TheoremCase::kR2T2: return r2t2;
        case TheoremCase::kR2T4: return r2t4;
        default: return r2t5;
    }
}

/// Structured difference between a computed m-list and a golden m-list.
struct MSetDiff {
    std::vector<long> computed;
    std::vector<long> golden;
    std::vector<long> extra;    // computed \ golden
    std::vector<long> missing;  // golden \ computed
    bool match() const { return extra.empty() && missing.empty(); }
};

inline MSetDiff compare_msets(std::vector<long> computed, std::vector<long> golden) {
    std::sort(computed.begin(), computed.end());
    std::sort(golden.begin(), golden.end());
    MSetDiff d;
    d.computed = computed;
    d.golden = golden;
    std::set_difference(computed.begin(), computed.end(), golden.begin(), golden.end(),
                        std::back_inserter(d.extra));
    std::set_difference(golden.begin(), golden.end(), computed.begin(), computed.end(),
                        std::back_inserter(d.missing));
    return d;
}

inline const TheoremCaseSpec& theorem_case_spec(TheoremCase c) {
    for (const auto& spec : theorem_cases())
        if (spec.id == c) return spec;
    throw std::logic_error("theorem_case_spec: unknown case");
}

/// Run the filter for a published case and diff against its golden m-set.
inline MSetDiff compare_msets(TheoremCase c) {
    const TheoremCaseSpec& spec = theorem_case_spec(c);
    return compare_msets(lambda_integrality_filter(spec.r, spec.t, spec.through).ms,
                         golden_mset(c));
}

// ---------------------------------------------------------------------------
// Global strength bounds
// ---------------------------------------------------------------------------

/**
 * The proven dichotomy for s(C) (max t with some weight an honest t-design)
 * and delta(C) (max t with every weight an honest t-design):
 * either delta = s = isolated_value, or range_low <= delta <= s <= range_high.
 */
struct SDeltaBounds {
    int isolated_value;
    int range_low;
    int range_high;
    std::string statement;
};

inline SDeltaBounds s_delta_bounds(int r) {
    switch (r) {
        case 0: return {5, 7, 7, "delta(C) = s(C) = 5 or delta(C) = s(C) = 7"};
        case 1: return {3, 5, 7, "delta(C) = s(C) = 3 or 5 <= delta(C) <= s(C) <= 7"};
        case 2: return {1, 3, 5, "delta(C) = s(C) = 1 or 3 <= delta(C) <= s(C) <= 5"};
        default: throw std::domain_error("s_delta_bounds: r must be 0, 1 or 2");
    }
}

}  // namespace hwe
