#pragma once

#include <span>

#include "benford/digit_block.hpp"

namespace benford {

// Probability assigned to a digit block by the general significant-digit
// law: log_base(1 + span/lead). Exactly 1 for a full-partition block.
double benford_prob(const DigitBlock& block);

// First-digit law in any base: probabilities for d = 1..base-1.
LawPrediction first_digit_table(int base);

// Joint law of the first k significant digits. digits[0] must be a valid
// leading digit (1..base-1); later digits may be 0.
double hill_joint_prob(int base, std::span<const int> digits);

// Marginal law of the position-th significant digit, obtained by summing
// the joint law over all shorter prefixes. position 1 reduces to
// first_digit_table. Prefix count is capped (base^(position-1) < 10^6).
LawPrediction ith_digit_table(int base, int position);

}  // namespace benford
