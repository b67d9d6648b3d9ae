#include "benford/digit_block.hpp"

#include <limits>
#include <stdexcept>

namespace benford {

std::int64_t pow_int(int base, int exp) {
    if (base < 2) throw std::domain_error("pow_int: base must be >= 2");
    if (exp < 0) throw std::domain_error("pow_int: exponent must be >= 0");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / base) {
            throw std::domain_error("pow_int: base^" + std::to_string(exp) +
                                    " overflows 64-bit range");
        }
        r *= base;
    }
    return r;
}

void validate(const DigitBlock& block) {
    if (block.base < 2) {
        throw std::domain_error("DigitBlock: base must be >= 2, got " +
                                std::to_string(block.base));
    }
    if (block.width < 1) {
        throw std::domain_error("DigitBlock: width must be >= 1, got " +
                                std::to_string(block.width));
    }
    if (block.span < 1) {
        throw std::domain_error("DigitBlock: span must be >= 1, got " +
                                std::to_string(block.span));
    }
    const std::int64_t lo = pow_int(block.base, block.width - 1);
    const std::int64_t hi = pow_int(block.base, block.width);
    if (block.lead < lo) {
        throw std::domain_error("DigitBlock: lead " + std::to_string(block.lead) +
                                " below base^(width-1) = " + std::to_string(lo));
    }
    if (block.lead > hi - block.span) {
        throw std::domain_error("DigitBlock: lead + span = " +
                                std::to_string(block.lead + block.span) +
                                " exceeds base^width = " + std::to_string(hi));
    }
}

std::string to_string(const DigitBlock& block) {
    return "(base " + std::to_string(block.base) + ", lead " + std::to_string(block.lead) +
           ", span " + std::to_string(block.span) + ", width " + std::to_string(block.width) +
           ")";
}

}  // namespace benford
