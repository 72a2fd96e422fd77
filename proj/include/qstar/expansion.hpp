#pragma once

// Exact conversion between digit sequences and rationals under a finitely
// presented system: series evaluation via geometric closure over the combined
// period, cylinder intervals, and greedy digit extraction with cycle
// detection.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qstar/digit_seq.hpp"
#include "qstar/rational.hpp"
#include "qstar/system.hpp"

namespace qstar {

inline void check_same_base(const qstar_system& sys, const digit_seq& seq) {
    if (sys.base != seq.base) throw std::domain_error("sequence base does not match system base");
}

// Exact value of the expansion series. The digit/column pair is eventually
// periodic with preperiod M = max(|pre|, |prefix|) and period P = lcm of the
// two period lengths, so the tail y satisfies y = c + r*y with r < 1.
inline rational decode(const qstar_system& sys, const digit_seq& seq) {
    check_same_base(sys, seq);
    const std::size_t M = std::max(seq.pre.size(), sys.prefix.size());
    const std::size_t P = lcm_size(seq.period.size(), sys.period.size());

    rational x = 0;
    rational scale = 1;
    for (std::size_t n = 1; n <= M; ++n) {
        int d = seq.digit_at(n);
        x += scale * sys.beta(n, d);
        scale *= sys.q(n, d);
    }
    rational c = 0;
    rational r = 1;
    for (std::size_t k = 1; k <= P; ++k) {
        std::size_t n = M + k;
        int d = seq.digit_at(n);
        c += r * sys.beta(n, d);
        r *= sys.q(n, d);
    }
    return x + scale * c / (1 - r);
}

struct cylinder_interval {
    std::vector<int> digits;
    rational left;
    rational right;

    rational length() const { return right - left; }
};

// Closed interval of all points whose first |digits| digits match the base.
inline cylinder_interval cylinder(const qstar_system& sys, const std::vector<int>& digits) {
    rational left = 0;
    rational scale = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        left += scale * sys.beta(i + 1, digits[i]);
        scale *= sys.q(i + 1, digits[i]);
    }
    return {digits, left, left + scale};
}

struct encode_result {
    bool exact = false;
    digit_seq digits;             // meaningful only when exact
    std::vector<int> prefix;      // digits emitted before truncation
    cylinder_interval enclosure;  // meaningful only when inexact
};

// Greedy digit extraction with half-open digit intervals [beta_d, beta_{d+1}),
// so cylinder left endpoints receive the canonical (0)-tail. The remainder
// state is (t, column phase); a repeated state closes the period exactly.
// x = 1 is the single ((s-1)) output.
inline encode_result encode(const qstar_system& sys, const rational& x, std::size_t max_rank) {
    if (x < 0 || x > 1) throw std::domain_error("encode input outside [0,1]");
    encode_result res;
    if (x == 1) {
        res.exact = true;
        res.digits = constant_seq(sys.base, sys.base - 1);
        return res;
    }

    const std::size_t plen = sys.prefix.size();
    const std::size_t pper = sys.period.size();
    std::vector<int> digits;
    // phase is only comparable once past the prefix columns
    std::map<std::pair<rational, std::size_t>, std::size_t> seen;
    rational t = x;

    for (std::size_t n = 1; n <= max_rank; ++n) {
        if (t == 0) {
            res.exact = true;
            res.digits = normalize({sys.base, digits, {0}});
            return res;
        }
        if (n > plen) {
            std::size_t phase = (n - plen - 1) % pper;
            auto [it, inserted] = seen.emplace(std::make_pair(t, phase), n);
            if (!inserted) {
                std::size_t start = it->second;  // state first seen before step `start`
                std::vector<int> pre(digits.begin(), digits.begin() + (start - 1));
                std::vector<int> per(digits.begin() + (start - 1), digits.end());
                res.exact = true;
                res.digits = normalize({sys.base, std::move(pre), std::move(per)});
                return res;
            }
        }
        const auto& col = sys.column(n);
        int d = 0;
        rational b = 0;
        while (d + 1 < sys.base && b + col.probs[static_cast<std::size_t>(d)] <= t) {
            b += col.probs[static_cast<std::size_t>(d)];
            ++d;
        }
        t = (t - b) / col.probs[static_cast<std::size_t>(d)];
        digits.push_back(d);
    }

    res.exact = false;
    res.enclosure = cylinder(sys, digits);
    res.prefix = std::move(digits);
    return res;
}

}  // namespace qstar
