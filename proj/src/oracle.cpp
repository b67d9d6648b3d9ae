#include "benford/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "benford/errors.hpp"
#include "benford/quadrature.hpp"

namespace benford {

namespace {

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

double scale_by_pow(double x, int base, int k) {
    // Largest exponent whose power is safely representable, per factor.
    const int step = static_cast<int>(600.0 / std::log2(static_cast<double>(base)));
    while (k != 0 && x != 0.0 && std::isfinite(x)) {
        const int q = std::clamp(k, -step, step);
        x *= std::pow(static_cast<double>(base), static_cast<double>(q));
        k -= q;
    }
    return x;
}

std::int64_t leading_block_int(double x, int base, int width) {
    if (base < 2) throw std::domain_error("leading_block_int: base must be >= 2");
    if (width < 1) throw std::domain_error("leading_block_int: width must be >= 1");
    if (!(x > 0) || !std::isfinite(x)) {
        throw std::domain_error("leading_block_int: x must be a positive finite number");
    }
    const std::int64_t hi_int = pow_int(base, width);
    if (hi_int > (std::int64_t{1} << 53)) {
        throw std::domain_error(
            "leading_block_int: base^width exceeds exact double range; use the "
            "string-based extraction for wide blocks");
    }
    const double lo = static_cast<double>(pow_int(base, width - 1));
    const double hi = static_cast<double>(hi_int);

    const int shift =
        static_cast<int>(std::floor(std::log(x) / std::log(static_cast<double>(base)))) -
        (width - 1);
    double m = scale_by_pow(x, base, -shift);
    // The log-based exponent can be off by one at representation edges.
    while (m < lo) m *= base;
    while (m >= hi) m /= base;
    // Snap values sitting a few ulps under an integer boundary so that
    // x = d * base^n lands in the block led by d.
    const double r = std::nearbyint(m);
    if (std::fabs(m - r) <= 8 * std::numeric_limits<double>::epsilon() * m) m = r;
    if (m >= hi) m /= base;
    if (m < lo) m = lo;
    return static_cast<std::int64_t>(m);
}

int indicator_g(const DigitBlock& block, double x) {
    validate(block);
    if (!(x > 0)) {
        throw std::domain_error("indicator_g: x must be > 0");
    }
    const std::int64_t lead = leading_block_int(x, block.base, block.width);
    return (lead >= block.lead && lead < block.lead + block.span) ? 1 : 0;
}

OracleResult exact_block_prob(const Distribution& dist, const DigitBlock& block, double tol) {
    validate(block);
    if (!(tol > 0)) {
        throw std::domain_error("exact_block_prob: tol must be > 0");
    }
    const int b = block.base;
    const double lead = static_cast<double>(block.lead);
    const double upper_edge = static_cast<double>(block.lead + block.span);

    OracleResult res;
    res.block = block;

    // Scale window [n_lo, n_hi] plus the certified mass outside it.
    int n_lo, n_hi;
    double tail = 0;
    // Iteration guard: the double exponent range divided by log2(base) can
    // never exceed this many scales.
    const int max_scales =
        static_cast<int>(2200.0 / std::log2(static_cast<double>(b))) + 8;

    if (dist.has_cdf()) {
        n_hi = 0;
        for (int i = 0; i < max_scales; ++i) {
            const double above = 1.0 - dist.cdf(scale_by_pow(lead, b, n_hi + 1));
            if (above < tol / 4) {
                tail += std::max(above, 0.0);
                break;
            }
            ++n_hi;
        }
        n_lo = 0;
        for (int i = 0; i < max_scales; ++i) {
            const double below = dist.cdf(scale_by_pow(upper_edge, b, n_lo - 1));
            if (below < tol / 4) {
                tail += std::max(below, 0.0);
                break;
            }
            --n_lo;
        }
    } else {
        // Density-only path: the support hint provides the certified tails.
        if (dist.support.tail_mass >= tol / 2) {
            throw numerical_error("exact_block_prob: support tail mass " +
                                  std::to_string(dist.support.tail_mass) +
                                  " cannot certify tolerance " + std::to_string(tol));
        }
        const double floor_x = std::max(dist.support.lower, 1e-300);
        n_lo = 0;
        while (n_lo > -max_scales && scale_by_pow(upper_edge, b, n_lo - 1) > floor_x) --n_lo;
        n_hi = 0;
        while (n_hi < max_scales && scale_by_pow(lead, b, n_hi) < dist.support.upper) ++n_hi;
        tail = dist.support.tail_mass;
    }

    if (n_lo > n_hi) n_hi = n_lo;
    const int count = n_hi - n_lo + 1;
    const double per_interval_tol = tol / (2.0 * count);

    KahanSum mass;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double a = scale_by_pow(lead, b, n);
        const double c = scale_by_pow(upper_edge, b, n);
        try {
            mass.add(interval_mass(dist, a, c, per_interval_tol));
        } catch (const numerical_error& err) {
            throw numerical_error("exact_block_prob: interval [" + std::to_string(a) + ", " +
                                  std::to_string(c) + ") at scale n=" + std::to_string(n) +
                                  ": " + err.what());
        }
    }

    res.probability = std::clamp(mass.sum, 0.0, 1.0);
    res.truncation_lo = n_lo;
    res.truncation_hi = n_hi;
    res.tail_bound = tail;
    return res;
}

LawPrediction exact_table(const Distribution& dist, int base, int width, double tol) {
    if (base < 2) throw std::domain_error("exact_table: base must be >= 2");
    if (width < 1) throw std::domain_error("exact_table: width must be >= 1");
    if (!(tol > 0)) throw std::domain_error("exact_table: tol must be > 0");
    const std::int64_t hi = pow_int(base, width);
    if (hi > 10000) {
        throw std::domain_error("exact_table: base^width = " + std::to_string(hi) +
                                " exceeds the cost guard of 10^4 blocks");
    }
    const std::int64_t lo = hi / base;
    const std::int64_t blocks = hi - lo;
    // Tighter per-block budget so the whole table still sums to 1 within
    // 10 * tol.
    const double block_tol = std::min(tol, 10.0 * tol / static_cast<double>(blocks));

    LawPrediction table;
    table.base = base;
    table.width = width;
    table.source = Source::oracle;
    for (std::int64_t d = lo; d < hi; ++d) {
        table.probabilities[d] =
            exact_block_prob(dist, {base, d, 1, width}, block_tol).probability;
    }
    return table;
}

}  // namespace benford
