#pragma once

// Finitely presented infinite stochastic matrix: a prefix of explicit columns
// followed by a periodically repeating block. Every entry is an exact rational
// in (0,1) and every column sums to 1, so the vanishing-product condition on
// column maxima holds structurally.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstar/rational.hpp"

namespace qstar {

struct stochastic_column {
    std::vector<rational> probs;  // one entry per alphabet digit

    int size() const { return static_cast<int>(probs.size()); }
};

struct qstar_system {
    int base = 2;
    std::vector<stochastic_column> prefix;  // may be empty
    std::vector<stochastic_column> period;  // never empty

    // Effective column for position n (1-indexed).
    const stochastic_column& column(std::size_t n) const {
        if (n == 0) throw std::domain_error("column index is 1-based");
        if (n <= prefix.size()) return prefix[n - 1];
        return period[(n - prefix.size() - 1) % period.size()];
    }

    const rational& q(std::size_t n, int d) const {
        if (d < 0 || d >= base) throw std::domain_error("digit outside alphabet");
        return column(n).probs[static_cast<std::size_t>(d)];
    }

    // beta(n, d) = sum of the column-n entries below digit d.
    rational beta(std::size_t n, int d) const {
        if (d < 0 || d >= base) throw std::domain_error("digit outside alphabet");
        const auto& col = column(n);
        rational b = 0;
        for (int i = 0; i < d; ++i) b += col.probs[static_cast<std::size_t>(i)];
        return b;
    }
};

// Returns the first violated invariant, or nullopt when the system is valid.
inline std::optional<std::string> validate(const qstar_system& sys) {
    if (sys.base < 2) return "base must be >= 2";
    if (sys.period.empty()) return "period must contain at least one column";
    auto check_column = [&](const stochastic_column& col, std::size_t n) -> std::optional<std::string> {
        if (col.size() != sys.base)
            return "column " + std::to_string(n) + " has " + std::to_string(col.size()) +
                   " entries, expected " + std::to_string(sys.base);
        rational sum = 0;
        for (const rational& p : col.probs) {
            if (p <= 0 || p >= 1)
                return "column " + std::to_string(n) + ": entry " + p.str() + " not in (0,1)";
            sum += p;
        }
        if (sum != 1) return "column " + std::to_string(n) + ": sum " + sum.str() + " != 1";
        return std::nullopt;
    };
    std::size_t n = 1;
    for (const auto& col : sys.prefix)
        if (auto err = check_column(col, n++)) return err;
    for (const auto& col : sys.period)
        if (auto err = check_column(col, n++)) return err;
    return std::nullopt;
}

inline void require_valid(const qstar_system& sys) {
    if (auto err = validate(sys)) throw std::domain_error(*err);
}

// Uniform bounds 0 < eps <= q_in and q_in <= delta < 1 over all columns.
// Always attainable for a finite presentation; reported for diagnostics.
struct entry_bounds {
    rational min_entry;
    rational max_entry;
};

inline entry_bounds compute_bounds(const qstar_system& sys) {
    entry_bounds b{1, 0};
    auto scan = [&](const stochastic_column& col) {
        for (const rational& p : col.probs) {
            if (p < b.min_entry) b.min_entry = p;
            if (p > b.max_entry) b.max_entry = p;
        }
    };
    for (const auto& col : sys.prefix) scan(col);
    for (const auto& col : sys.period) scan(col);
    return b;
}

// The self-similar s-adic system with q_in = 1/s.
inline qstar_system uniform_system(int base) {
    stochastic_column col;
    for (int i = 0; i < base; ++i) col.probs.emplace_back(1, base);
    return {base, {}, {col}};
}

inline qstar_system self_similar_system(stochastic_column col) {
    return {col.size(), {}, {std::move(col)}};
}

}  // namespace qstar
