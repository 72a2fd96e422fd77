#pragma once

// Eventually periodic digit sequences over the alphabet {0,...,s-1}:
// normal form, indexing, the two-representation rewrite at binary points,
// and the "pre(period)" string grammar.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qstar {

struct digit_seq {
    int base = 2;
    std::vector<int> pre;     // may be empty
    std::vector<int> period;  // never empty

    // 1-indexed digit access.
    int digit_at(std::size_t n) const {
        if (n == 0) throw std::domain_error("digit index is 1-based");
        if (n <= pre.size()) return pre[n - 1];
        return period[(n - pre.size() - 1) % period.size()];
    }

    bool operator==(const digit_seq&) const = default;
};

inline void check_digits(const digit_seq& seq) {
    if (seq.base < 2) throw std::domain_error("base must be >= 2");
    if (seq.period.empty()) throw std::domain_error("period must be nonempty");
    auto in_alphabet = [&](int d) { return d >= 0 && d < seq.base; };
    if (!std::all_of(seq.pre.begin(), seq.pre.end(), in_alphabet) ||
        !std::all_of(seq.period.begin(), seq.period.end(), in_alphabet))
        throw std::domain_error("digit outside alphabet");
}

// Normal form: minimal period length, then the shortest preperiod obtained by
// rolling shared trailing digits into the period. Two sequences denote the
// same digit stream iff their normal forms are equal.
inline digit_seq normalize(digit_seq seq) {
    check_digits(seq);
    auto& p = seq.period;
    for (std::size_t len = 1; len < p.size(); ++len) {
        if (p.size() % len != 0) continue;
        bool repeats = true;
        for (std::size_t i = len; i < p.size() && repeats; ++i)
            repeats = p[i] == p[i % len];
        if (repeats) {
            p.resize(len);
            break;
        }
    }
    while (!seq.pre.empty() && seq.pre.back() == p.back()) {
        p.insert(p.begin(), p.back());
        p.pop_back();
        seq.pre.pop_back();
    }
    return seq;
}

inline digit_seq constant_seq(int base, int digit) {
    return normalize({base, {}, {digit}});
}

// True for sequences whose stream is eventually the constant tail `digit`.
inline bool has_tail(const digit_seq& normalized, int digit) {
    return normalized.period.size() == 1 && normalized.period[0] == digit;
}

// A number is binary iff it admits both a (0)-tail and an (s-1)-tail
// representation; the endpoints 0 and 1 are unary.
inline bool is_binary(const digit_seq& seq) {
    digit_seq n = normalize(seq);
    if (has_tail(n, 0)) return !n.pre.empty();
    if (has_tail(n, n.base - 1)) return !n.pre.empty();
    return false;
}

// Rewrites an (s-1)-tail representation into the canonical (0)-tail one:
// ...a[m-1] [a_m](s-1)  ->  ...a[m-1] [a_m + 1](0). Idempotent.
inline digit_seq canonicalize(const digit_seq& seq) {
    digit_seq n = normalize(seq);
    if (has_tail(n, n.base - 1) && !n.pre.empty()) {
        n.pre.back() += 1;
        n.period = {0};
        n = normalize(n);
    }
    return n;
}

inline std::string render_digits(const std::vector<int>& digits, int base) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (base <= 10) {
            out.push_back(static_cast<char>('0' + digits[i]));
        } else {
            if (i) out.push_back(',');
            out += std::to_string(digits[i]);
        }
    }
    return out;
}

inline std::string render(const digit_seq& seq) {
    return render_digits(seq.pre, seq.base) + "(" + render_digits(seq.period, seq.base) + ")";
}

namespace detail {

inline std::vector<int> parse_digit_run(std::string_view run, int base) {
    std::vector<int> out;
    if (run.empty()) return out;
    if (base > 10 || run.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= run.size()) {
            std::size_t next = run.find(',', pos);
            std::string_view tok = run.substr(pos, next == std::string_view::npos ? next : next - pos);
            if (tok.empty()) throw std::domain_error("empty digit token");
            int d = 0;
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::domain_error("bad digit token: " + std::string(tok));
                d = d * 10 + (c - '0');
            }
            out.push_back(d);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    } else {
        for (char c : run) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::domain_error(std::string("bad digit character: ") + c);
            out.push_back(c - '0');
        }
    }
    for (int d : out)
        if (d < 0 || d >= base) throw std::domain_error("digit " + std::to_string(d) + " outside base " + std::to_string(base));
    return out;
}

}  // namespace detail

// Grammar: pre(period), e.g. "31(40)" or "3,1(4,0)" for bases above 10.
// A bare digit run with no parentheses means a terminating expansion, pre(0).
// Whitespace is ignored. Result is normalized.
inline digit_seq parse_digit_seq(std::string_view text, int base) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    digit_seq seq;
    seq.base = base;
    auto open = t.find('(');
    if (open == std::string::npos) {
        if (t.find(')') != std::string::npos) throw std::domain_error("unmatched ')'");
        seq.pre = detail::parse_digit_run(t, base);
        seq.period = {0};
    } else {
        if (t.back() != ')' || t.find(')') != t.size() - 1 || t.find('(', open + 1) != std::string::npos)
            throw std::domain_error("malformed digit string: " + std::string(text));
        seq.pre = detail::parse_digit_run(std::string_view(t).substr(0, open), base);
        seq.period = detail::parse_digit_run(std::string_view(t).substr(open + 1, t.size() - open - 2), base);
        if (seq.period.empty()) throw std::domain_error("empty period: " + std::string(text));
    }
    return normalize(seq);
}

inline std::size_t lcm_size(std::size_t a, std::size_t b) {
    return std::lcm(a, b);
}

}  // namespace qstar
