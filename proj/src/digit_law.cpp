#include "benford/digit_law.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace benford {

namespace {

// Compensated accumulator; the big digit tables sum ~10^6 terms against a
// 1e-12 budget.
struct KahanSum {
    double sum = 0, comp = 0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double benford_prob(const DigitBlock& block) {
    validate(block);
    // Full partition: 1 + span/lead == base, so the log is exactly 1.
    if (block.lead + block.span == static_cast<std::int64_t>(block.base) * block.lead) {
        return 1.0;
    }
    return std::log1p(static_cast<double>(block.span) / static_cast<double>(block.lead)) /
           std::log(static_cast<double>(block.base));
}

LawPrediction first_digit_table(int base) {
    if (base < 2) {
        throw std::domain_error("first_digit_table: base must be >= 2, got " +
                                std::to_string(base));
    }
    LawPrediction table;
    table.base = base;
    table.width = 1;
    table.source = Source::closed_form;
    for (std::int64_t d = 1; d < base; ++d) {
        table.probabilities[d] = benford_prob({base, d, 1, 1});
    }
    return table;
}

double hill_joint_prob(int base, std::span<const int> digits) {
    if (base < 2) {
        throw std::domain_error("hill_joint_prob: base must be >= 2, got " +
                                std::to_string(base));
    }
    if (digits.empty()) {
        throw std::domain_error("hill_joint_prob: need at least one digit");
    }
    const int k = static_cast<int>(digits.size());
    pow_int(base, k);  // reject widths whose block integer cannot be represented
    if (digits[0] < 1 || digits[0] >= base) {
        throw std::domain_error("hill_joint_prob: leading digit must be in [1, base-1], got " +
                                std::to_string(digits[0]));
    }
    std::int64_t lead = 0;
    for (int i = 0; i < k; ++i) {
        if (digits[i] < 0 || digits[i] >= base) {
            throw std::domain_error("hill_joint_prob: digit " + std::to_string(digits[i]) +
                                    " out of range [0, base-1]");
        }
        lead = lead * base + digits[i];
    }
    return benford_prob({base, lead, 1, k});
}

LawPrediction ith_digit_table(int base, int position) {
    if (base < 2) {
        throw std::domain_error("ith_digit_table: base must be >= 2, got " +
                                std::to_string(base));
    }
    if (position < 1) {
        throw std::domain_error("ith_digit_table: position must be >= 1, got " +
                                std::to_string(position));
    }
    if (position == 1) return first_digit_table(base);

    const std::int64_t prefixes = pow_int(base, position - 1);
    if (prefixes >= 1000000) {
        throw std::domain_error("ith_digit_table: base^(position-1) = " +
                                std::to_string(prefixes) +
                                " prefixes exceed the cost cap of 10^6");
    }
    LawPrediction table;
    table.base = base;
    table.width = 1;
    table.source = Source::closed_form;
    const std::int64_t plo = prefixes / base;  // base^(position-2)
    for (std::int64_t d = 0; d < base; ++d) {
        KahanSum acc;
        for (std::int64_t p = plo; p < prefixes; ++p) {
            acc.add(benford_prob({base, p * base + d, 1, position}));
        }
        table.probabilities[d] = acc.sum;
    }
    return table;
}

}  // namespace benford
