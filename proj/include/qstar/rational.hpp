#pragma once

// Exact rational arithmetic carrier plus string conversions used across the
// library: "p/q" fractions, terminating decimals, fixed-precision rendering.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qstar {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint pow10(unsigned k) {
    bigint r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

inline rational rational_pow(const rational& base, unsigned exp) {
    rational r = 1;
    rational b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

// Accepts "p/q", plain integers, and terminating decimals ("0.25", "-3.5").
// Decimals are converted exactly; anything else is a domain error.
inline rational parse_rational(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::domain_error("empty rational literal");

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        if (slash == 0 || slash + 1 == t.size() || t.find('/', slash + 1) != std::string::npos)
            throw std::domain_error("malformed fraction: " + std::string(text));
        bigint num(t.substr(0, slash));
        bigint den(t.substr(slash + 1));
        if (den == 0) throw std::domain_error("zero denominator: " + std::string(text));
        return rational(num, den);
    }

    auto dot = t.find('.');
    if (dot == std::string::npos) return rational(bigint(t));

    bool neg = false;
    std::string digits = t;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
        neg = digits[0] == '-';
        digits.erase(digits.begin());
        --dot;
    }
    std::string frac = digits.substr(dot + 1);
    digits.erase(dot, 1);
    if (digits.empty()) throw std::domain_error("malformed decimal: " + std::string(text));
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::domain_error("malformed decimal: " + std::string(text));
    rational r(bigint(digits), pow10(static_cast<unsigned>(frac.size())));
    return neg ? -r : r;
}

inline std::string to_fraction_string(const rational& r) {
    return r.str();
}

// Fixed-precision decimal rendering, round half away from zero.
inline std::string to_decimal_string(const rational& r, unsigned precision) {
    bigint num = numerator(r);
    bigint den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    bigint scaled = num * pow10(precision);
    bigint q = scaled / den;
    bigint rem = scaled % den;
    if (2 * rem >= den) ++q;
    std::string s = q.str();
    if (s.size() <= precision) s.insert(0, precision + 1 - s.size(), '0');
    if (precision > 0) s.insert(s.size() - precision, ".");
    if (neg && q != 0) s.insert(0, "-");
    return s;
}

}  // namespace qstar
