#pragma once

#include <cstdint>

#include "benford/digit_block.hpp"
#include "benford/distribution.hpp"

namespace benford {

// x * base^k evaluated stepwise so no intermediate factor overflows.
double scale_by_pow(double x, int base, int k);

// The integer formed by the first `width` significant digits of x (> 0) in
// the given base. Values within a few ulps of a block boundary are snapped
// up, keeping extraction consistent with half-open blocks [d b^n, (d+l) b^n).
std::int64_t leading_block_int(double x, int base, int width);

// Membership indicator of x in the block's interval family: 1 iff the
// width-wide leading integer of x lies in [lead, lead + span).
int indicator_g(const DigitBlock& block, double x);

struct OracleResult {
    DigitBlock block;
    double probability = 0;
    int truncation_lo = 0, truncation_hi = 0;  // retained range of the scale index n
    double tail_bound = 0;                     // certified bound on the omitted mass
};

// Exact probability of the block under dist: the sum over all scales n of
// the mass of [lead b^n, (lead+span) b^n), truncated once the certified
// tails drop below tol.
OracleResult exact_block_prob(const Distribution& dist, const DigitBlock& block, double tol);

// Batch oracle over every width-wide block of the base. Guarded by
// base^width <= 10^4.
LawPrediction exact_table(const Distribution& dist, int base, int width, double tol);

}  // namespace benford
