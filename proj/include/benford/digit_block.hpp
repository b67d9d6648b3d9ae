#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace benford {

// A family of leading-digit outcomes: all positive numbers whose first
// `width` digits in base `base`, read as one integer, lie in
// [lead, lead + span). The classic first-digit events are width 1, span 1.
struct DigitBlock {
    int base = 10;
    std::int64_t lead = 1;
    std::int64_t span = 1;
    int width = 1;
};

// base^exp as int64, throwing std::domain_error on overflow.
std::int64_t pow_int(int base, int exp);

// Throws std::domain_error naming the first violated invariant:
//   base >= 2, width >= 1, span >= 1,
//   base^(width-1) <= lead, lead + span <= base^width.
void validate(const DigitBlock& block);

std::string to_string(const DigitBlock& block);

enum class Source { closed_form, oracle, empirical };

// Probability assignment over a digit-outcome partition. Keys are the
// integer values of the outcomes: width-wide leading blocks for tables of
// blocks, single digit values for positional-digit marginals.
struct LawPrediction {
    int base = 10;
    int width = 1;
    std::map<std::int64_t, double> probabilities;
    Source source = Source::closed_form;
};

}  // namespace benford
