#pragma once

// Value-set and level-set analysis: per-digit admissible sets, topological
// classification, exact Lebesgue measure, preimage enumeration, and the
// similarity-dimension solver for the self-similar case.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qstar/digit_seq.hpp"
#include "qstar/expansion.hpp"
#include "qstar/function.hpp"
#include "qstar/rational.hpp"
#include "qstar/system.hpp"

namespace qstar {

using digit_set = std::vector<int>;  // sorted, unique

// Eventually periodic family of digit subsets, indexed like a digit sequence.
struct digit_set_family {
    std::vector<digit_set> pre;
    std::vector<digit_set> period;  // never empty

    const digit_set& at(std::size_t n) const {
        if (n == 0) throw std::domain_error("index is 1-based");
        if (n <= pre.size()) return pre[n - 1];
        return period[(n - pre.size() - 1) % period.size()];
    }
};

enum class value_set_kind { full_interval, finite_union_of_intervals, cantor_nowhere_dense };

struct value_set_spec {
    int base = 2;
    digit_set_family vsets;  // V_n = {0, ..., max(s-1-a_n, a_n)}
    value_set_kind classification = value_set_kind::full_interval;
};

inline const char* to_string(value_set_kind k) {
    switch (k) {
        case value_set_kind::full_interval: return "FullInterval";
        case value_set_kind::finite_union_of_intervals: return "FiniteUnionOfIntervals";
        case value_set_kind::cantor_nowhere_dense: return "CantorNowhereDense";
    }
    return "?";
}

inline digit_set range_set(int top) {
    digit_set v(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

// The range of f_a: digit n of any image lies in V_n = {0,...,max(s-1-a_n,a_n)}.
// Cantor type iff some period position of a has a_n strictly inside the
// alphabet (then V_n is proper infinitely often); s = 2 always fills [0,1].
inline value_set_spec value_set(const s_adic_param& a) {
    const int s = a.base();
    value_set_spec spec;
    spec.base = s;
    for (int d : a.digits.pre)
        spec.vsets.pre.push_back(range_set(std::max(s - 1 - d, d)));
    for (int d : a.digits.period)
        spec.vsets.period.push_back(range_set(std::max(s - 1 - d, d)));
    bool interior_in_period =
        std::any_of(a.digits.period.begin(), a.digits.period.end(),
                    [&](int d) { return d >= 1 && d <= s - 2; });
    if (s == 2)
        spec.classification = value_set_kind::full_interval;
    else if (interior_in_period)
        spec.classification = value_set_kind::cantor_nowhere_dense;
    else
        spec.classification = value_set_kind::finite_union_of_intervals;
    return spec;
}

// Right end of the enclosing interval [0, sup]: the image with every digit at
// its per-position maximum.
inline rational value_set_sup(const qstar_system& sys, const s_adic_param& a) {
    const int s = a.base();
    digit_seq c;
    c.base = s;
    for (int d : a.digits.pre) c.pre.push_back(std::max(s - 1 - d, d));
    for (int d : a.digits.period) c.period.push_back(std::max(s - 1 - d, d));
    return decode(sys, normalize(c));
}

// Lebesgue measure of the digit-restricted set: the limit of the products of
// the column masses sigma_n = sum_{i in V_n} q_in. Zero as soon as one
// combined-period position has sigma_n < 1, else the finite preperiod product.
inline rational restricted_set_measure(const qstar_system& sys, const digit_set_family& vsets) {
    const std::size_t M = std::max(vsets.pre.size(), sys.prefix.size());
    const std::size_t P = lcm_size(vsets.period.size(), sys.period.size());
    auto sigma = [&](std::size_t n) {
        rational s = 0;
        for (int d : vsets.at(n)) s += sys.q(n, d);
        return s;
    };
    for (std::size_t k = 1; k <= P; ++k)
        if (sigma(M + k) < 1) return 0;
    rational m = 1;
    for (std::size_t n = 1; n <= M; ++n) m *= sigma(n);
    return m;
}

inline rational value_set_measure(const qstar_system& sys, const value_set_spec& spec) {
    if (sys.base != spec.base) throw std::domain_error("spec base does not match system base");
    return restricted_set_measure(sys, spec.vsets);
}

// Maximal closed intervals whose union is the value set, for the
// finite-union case: keep the cylinders whose digits stay inside V_n at every
// rank with V_n proper (all such ranks lie in the preperiod), merge adjacent
// survivors.
inline std::vector<cylinder_interval> value_set_intervals(const qstar_system& sys,
                                                          const value_set_spec& spec) {
    if (sys.base != spec.base) throw std::domain_error("spec base does not match system base");
    if (spec.classification == value_set_kind::cantor_nowhere_dense)
        throw std::domain_error("value set is not a finite union of intervals");
    std::size_t depth = spec.vsets.pre.size();
    while (depth > 0 && static_cast<int>(spec.vsets.at(depth).size()) == sys.base) --depth;
    if (depth == 0) return {cylinder(sys, {})};

    std::vector<cylinder_interval> merged;
    std::vector<int> word(depth, 0);
    std::vector<std::size_t> choice(depth, 0);
    for (;;) {
        for (std::size_t i = 0; i < depth; ++i) word[i] = spec.vsets.at(i + 1)[choice[i]];
        cylinder_interval cyl = cylinder(sys, word);
        if (!merged.empty() && merged.back().right == cyl.left)
            merged.back().right = cyl.right;
        else
            merged.push_back(cyl);
        std::size_t i = depth;
        while (i > 0) {
            --i;
            if (++choice[i] < spec.vsets.at(i + 1).size()) break;
            choice[i] = 0;
            if (i == 0) return merged;
        }
    }
}

enum class level_kind { empty, finite, continuum };

struct level_profile_result {
    digit_set_family solsets;  // S_n = {a_n - b_n, a_n + b_n} ∩ A
    level_kind classification = level_kind::empty;
    bigint count = 0;  // meaningful when finite
};

inline const char* to_string(level_kind k) {
    switch (k) {
        case level_kind::empty: return "Empty";
        case level_kind::finite: return "Finite";
        case level_kind::continuum: return "Continuum";
    }
    return "?";
}

// Per-digit solution sets of |a_n - alpha_n| = b_n and the resulting
// trichotomy: empty if some S_n is empty, continuum if a combined-period
// position admits two solutions, else finite with the preperiod product.
inline level_profile_result level_profile(const s_adic_param& a, const digit_seq& y0_in) {
    if (a.base() != y0_in.base) throw std::domain_error("parameter base does not match level base");
    const digit_seq y0 = canonicalize(y0_in);
    const int s = a.base();
    const std::size_t M = std::max(a.digits.pre.size(), y0.pre.size());
    const std::size_t P = lcm_size(a.digits.period.size(), y0.period.size());

    auto solutions = [&](std::size_t n) {
        int an = a.digits.digit_at(n);
        int bn = y0.digit_at(n);
        digit_set sset;
        if (an - bn >= 0 && an - bn < s) sset.push_back(an - bn);
        if (bn != 0 && an + bn < s) sset.push_back(an + bn);
        return sset;
    };

    level_profile_result res;
    bool any_empty = false;
    bool period_branch = false;
    res.count = 1;
    for (std::size_t n = 1; n <= M + P; ++n) {
        digit_set sset = solutions(n);
        if (sset.empty()) any_empty = true;
        if (n <= M) {
            res.count *= static_cast<int>(sset.size());
            res.solsets.pre.push_back(std::move(sset));
        } else {
            if (sset.size() > 1) period_branch = true;
            res.solsets.period.push_back(std::move(sset));
        }
    }
    if (any_empty) {
        res.classification = level_kind::empty;
        res.count = 0;
    } else if (period_branch) {
        res.classification = level_kind::continuum;
        res.count = 0;
    } else {
        res.classification = level_kind::finite;
    }
    return res;
}

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct level_point {
    digit_seq digits;
    rational value;
};

// Every preimage of a finite level set: the Cartesian product of the
// preperiod solution sets, followed by the forced periodic digits. Sorted
// ascending by value.
inline std::vector<level_point> level_enumerate(const qstar_system& sys, const s_adic_param& a,
                                                const digit_seq& y0, const bigint& cap) {
    level_profile_result prof = level_profile(a, y0);
    if (prof.classification == level_kind::empty)
        throw std::domain_error("level set is empty");
    if (prof.classification == level_kind::continuum)
        throw std::domain_error("level set is a continuum");
    if (prof.count > cap)
        throw budget_error("level set has " + prof.count.str() + " points, cap is " + cap.str());

    std::vector<int> forced_period;
    for (const digit_set& sset : prof.solsets.period) forced_period.push_back(sset.front());
    if (forced_period.empty()) forced_period.push_back(0);

    const std::size_t depth = prof.solsets.pre.size();
    std::vector<level_point> out;
    std::vector<std::size_t> choice(depth, 0);
    for (;;) {
        digit_seq x;
        x.base = sys.base;
        for (std::size_t i = 0; i < depth; ++i) x.pre.push_back(prof.solsets.pre[i][choice[i]]);
        x.period = forced_period;
        x = normalize(x);
        out.push_back({x, decode(sys, x)});
        std::size_t i = depth;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (++choice[i] < prof.solsets.pre[i].size()) {
                advanced = true;
                break;
            }
            choice[i] = 0;
        }
        if (!advanced) break;
    }
    std::sort(out.begin(), out.end(),
              [](const level_point& l, const level_point& r) { return l.value < r.value; });
    return out;
}

// Root of sum_{i in V} q_i^x = 1 on [0,1] by bisection; the map is strictly
// decreasing and bracketed. Full alphabet returns exactly 1, a singleton
// exactly 0. This is the library's only floating-point computation.
inline double moran_dimension(const stochastic_column& column, const digit_set& v, double tol) {
    if (v.empty()) throw std::domain_error("digit set must be nonempty");
    if (tol <= 0) throw std::domain_error("tolerance must be positive");
    for (int d : v)
        if (d < 0 || d >= column.size()) throw std::domain_error("digit outside alphabet");
    if (static_cast<int>(v.size()) == column.size()) return 1.0;
    if (v.size() == 1) return 0.0;

    std::vector<double> q;
    for (int d : v) q.push_back(static_cast<double>(column.probs[static_cast<std::size_t>(d)]));
    auto g = [&](double x) {
        double s = 0;
        for (double qi : q) s += std::pow(qi, x);
        return s;
    };
    double lo = 0.0, hi = 1.0;  // g(lo) >= 2 > 1, g(hi) < 1
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (g(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Dimension of a constant-digit level set f_a^{-1}(y0) in a self-similar
// system: the level set is exactly the digit-restricted set over
// S = {a - b, a + b} ∩ A. Mixed-digit inputs are refused.
inline double level_set_dimension(const stochastic_column& column, const s_adic_param& a,
                                  const digit_seq& y0, double tol) {
    digit_seq an = normalize(a.digits);
    digit_seq yn = canonicalize(y0);
    if (!an.pre.empty() || an.period.size() != 1 || !yn.pre.empty() || yn.period.size() != 1)
        throw std::domain_error("level-set dimension requires constant-digit parameter and level");
    const int s = column.size();
    int ad = an.period[0];
    int bd = yn.period[0];
    digit_set sset;
    if (ad - bd >= 0) sset.push_back(ad - bd);
    if (bd != 0 && ad + bd < s) sset.push_back(ad + bd);
    if (sset.empty()) throw std::domain_error("level set is empty");
    return moran_dimension(column, sset, tol);
}

}  // namespace qstar
