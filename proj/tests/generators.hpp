#pragma once

// Deterministic random inputs for property and acceptance tests.

#include <random>
#include <vector>

#include "qstar/qstar.hpp"

namespace qstar::testing {

using rng_t = std::mt19937;

inline stochastic_column random_column(rng_t& rng, int base) {
    std::uniform_int_distribution<int> weight(1, 20);
    std::vector<int> w(static_cast<std::size_t>(base));
    int total = 0;
    for (auto& wi : w) {
        wi = weight(rng);
        total += wi;
    }
    stochastic_column col;
    for (int wi : w) col.probs.emplace_back(wi, total);
    return col;
}

inline qstar_system random_system(rng_t& rng, int base, int max_prefix = 2, int max_period = 3) {
    std::uniform_int_distribution<int> plen(0, max_prefix);
    std::uniform_int_distribution<int> per(1, max_period);
    qstar_system sys;
    sys.base = base;
    int np = plen(rng);
    for (int i = 0; i < np; ++i) sys.prefix.push_back(random_column(rng, base));
    int nq = per(rng);
    for (int i = 0; i < nq; ++i) sys.period.push_back(random_column(rng, base));
    return sys;
}

inline std::vector<int> random_digits(rng_t& rng, int base, int len) {
    std::uniform_int_distribution<int> digit(0, base - 1);
    std::vector<int> out(static_cast<std::size_t>(len));
    for (auto& d : out) d = digit(rng);
    return out;
}

// Normalized sequence whose tail is neither (0) nor (s-1): the canonical
// representation of a unary (single-representation) point.
inline digit_seq random_unary_seq(rng_t& rng, int base, int max_pre = 4, int max_period = 4) {
    std::uniform_int_distribution<int> plen(0, max_pre);
    std::uniform_int_distribution<int> per(1, max_period);
    for (;;) {
        digit_seq seq;
        seq.base = base;
        seq.pre = random_digits(rng, base, plen(rng));
        seq.period = random_digits(rng, base, per(rng));
        seq = normalize(seq);
        if (!has_tail(seq, 0) && !has_tail(seq, base - 1)) return seq;
    }
}

inline digit_seq random_canonical_seq(rng_t& rng, int base, int max_pre = 4, int max_period = 4) {
    std::uniform_int_distribution<int> plen(0, max_pre);
    std::uniform_int_distribution<int> per(1, max_period);
    for (;;) {
        digit_seq seq;
        seq.base = base;
        seq.pre = random_digits(rng, base, plen(rng));
        seq.period = random_digits(rng, base, per(rng));
        seq = normalize(seq);
        if (!has_tail(seq, base - 1) || seq.pre.empty()) return seq;
    }
}

inline s_adic_param random_param(rng_t& rng, int base, int max_pre = 3, int max_period = 3) {
    std::uniform_int_distribution<int> plen(0, max_pre);
    std::uniform_int_distribution<int> per(1, max_period);
    digit_seq seq;
    seq.base = base;
    seq.pre = random_digits(rng, base, plen(rng));
    seq.period = random_digits(rng, base, per(rng));
    return s_adic_param::from_seq(seq);
}

}  // namespace qstar::testing
