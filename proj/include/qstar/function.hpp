#pragma once

// The one-parameter function family mapping a digit sequence (alpha_n) to
// (|a_n - alpha_n|), where (a_n) are the s-adic digits of the parameter.
// Covers digit-wise application, exact evaluation, the digit inversor, jump
// analysis at binary points, continuity moduli, and shared-value partners.

#include <optional>
#include <stdexcept>
#include <vector>

#include "qstar/digit_seq.hpp"
#include "qstar/expansion.hpp"
#include "qstar/rational.hpp"
#include "qstar/system.hpp"

namespace qstar {

// Parameter a in [0,1], held through its plain s-adic digit sequence.
struct s_adic_param {
    digit_seq digits;

    int base() const { return digits.base; }

    static s_adic_param from_seq(const digit_seq& seq) { return {normalize(seq)}; }
};

// Digit-wise image |a_n - alpha_n|. The result is eventually periodic with
// preperiod max(|pre_a|, |pre_x|) and period lcm of the two period lengths.
inline digit_seq apply_digits(const s_adic_param& a, const digit_seq& x) {
    if (a.base() != x.base) throw std::domain_error("parameter base does not match sequence base");
    const std::size_t M = std::max(a.digits.pre.size(), x.pre.size());
    const std::size_t P = lcm_size(a.digits.period.size(), x.period.size());
    digit_seq out;
    out.base = x.base;
    for (std::size_t n = 1; n <= M; ++n)
        out.pre.push_back(std::abs(a.digits.digit_at(n) - x.digit_at(n)));
    for (std::size_t k = 1; k <= P; ++k) {
        std::size_t n = M + k;
        out.period.push_back(std::abs(a.digits.digit_at(n) - x.digit_at(n)));
    }
    return normalize(out);
}

// f_a(x). Binary-point inputs are taken through their canonical (0)-tail
// representation before the digit map is applied.
inline rational eval(const qstar_system& sys, const s_adic_param& a, const digit_seq& x) {
    check_same_base(sys, x);
    return decode(sys, apply_digits(a, canonicalize(x)));
}

// Digit inversor: every digit alpha becomes s-1-alpha (the parameter with all
// digits s-1). An involution on sequences.
inline digit_seq inversor(const digit_seq& x) {
    return apply_digits({constant_seq(x.base, x.base - 1)}, x);
}

struct point_eval {
    rational value;
    rational error_bound;  // 0 when the input was encoded exactly
};

// Image-cylinder length after `rank` shared digits: the product of
// q_{|a_i - alpha_i|, i}. Any two points sharing those digits have images at
// most this far apart.
inline rational continuity_modulus(const qstar_system& sys, const s_adic_param& a,
                                   const std::vector<int>& shared_digits) {
    rational m = 1;
    for (std::size_t i = 0; i < shared_digits.size(); ++i) {
        int image = std::abs(a.digits.digit_at(i + 1) - shared_digits[i]);
        m *= sys.q(i + 1, image);
    }
    return m;
}

// Evaluates f_a at a point given as a rational. If the encoding terminates or
// cycles within `rank` digits the value is exact; otherwise the truncated
// digits are extended by (0) and the image-cylinder length bounds the error.
inline point_eval eval_at_point(const qstar_system& sys, const s_adic_param& a,
                                const rational& x, std::size_t rank) {
    encode_result enc = encode(sys, x, rank);
    if (enc.exact) return {eval(sys, a, enc.digits), 0};
    digit_seq truncated{sys.base, enc.prefix, {0}};
    rational value = decode(sys, apply_digits(a, normalize(truncated)));
    return {value, continuity_modulus(sys, a, enc.prefix)};
}

struct jump_report {
    rational point;            // the binary point itself
    rational value_canonical;  // f through the (0)-tail representation
    rational limit_other;      // f through the (s-1)-tail representation
    rational gap;              // value_canonical - limit_other
};

// Jump of f_a at the binary point with base c_1...c_m (c_m >= 1). The two
// image sequences share the first m-1 digits and differ by one at rank m, so
// the gap vanishes exactly when the parameter tail past rank m is constant 0
// (with a_m < c_m) or constant s-1 (with a_m >= c_m).
inline jump_report jump(const qstar_system& sys, const s_adic_param& a,
                        const std::vector<int>& binary_base) {
    if (binary_base.empty() || binary_base.back() < 1)
        throw std::domain_error("binary point base must end in a digit >= 1");
    for (int d : binary_base)
        if (d < 0 || d >= sys.base) throw std::domain_error("digit outside alphabet");

    digit_seq zero_tail = normalize({sys.base, binary_base, {0}});
    std::vector<int> lowered = binary_base;
    lowered.back() -= 1;
    digit_seq high_tail = normalize({sys.base, lowered, {sys.base - 1}});

    jump_report rep;
    rep.point = decode(sys, zero_tail);
    rep.value_canonical = decode(sys, apply_digits(a, zero_tail));
    rep.limit_other = decode(sys, apply_digits(a, high_tail));
    rep.gap = rep.value_canonical - rep.limit_other;
    return rep;
}

// When (a_n + b_n) is even for all n, the sequence c_n = (a_n + b_n)/2 is a
// common point where f_a and f_b agree; otherwise no such mean sequence
// exists. Decided over one combined period.
inline std::optional<digit_seq> shared_value_partner(const s_adic_param& a, const s_adic_param& b) {
    if (a.base() != b.base()) throw std::domain_error("parameter bases differ");
    const std::size_t M = std::max(a.digits.pre.size(), b.digits.pre.size());
    const std::size_t P = lcm_size(a.digits.period.size(), b.digits.period.size());
    digit_seq out;
    out.base = a.base();
    for (std::size_t n = 1; n <= M + P; ++n) {
        int sum = a.digits.digit_at(n) + b.digits.digit_at(n);
        if (sum % 2 != 0) return std::nullopt;
        int c = sum / 2;
        if (n <= M)
            out.pre.push_back(c);
        else
            out.period.push_back(c);
    }
    return normalize(out);
}

}  // namespace qstar
