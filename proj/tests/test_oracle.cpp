#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "benford/digit_law.hpp"
#include "benford/oracle.hpp"
#include "benford/quadrature.hpp"

using namespace benford;

TEST_CASE("leading block extraction on plain readings") {
    CHECK(leading_block_int(25.0, 10, 1) == 2);
    CHECK(leading_block_int(15.0, 10, 1) == 1);
    CHECK(leading_block_int(0.0314, 10, 1) == 3);
    CHECK(leading_block_int(0.0314, 10, 2) == 31);
    CHECK(leading_block_int(2500.0, 10, 3) == 250);
    CHECK(leading_block_int(1.0, 10, 1) == 1);
    CHECK(leading_block_int(9.999999999, 10, 1) == 9);
    CHECK(leading_block_int(5.0, 2, 1) == 1);
    CHECK(leading_block_int(5.0, 2, 3) == 5);  // 101 in binary
    CHECK(leading_block_int(0.75, 2, 2) == 3);  // 0.11 binary
}

TEST_CASE("boundary values land in the upper half-open block") {
    // x = d * b^n must belong to the block led by d.
    for (int n = -8; n <= 8; ++n) {
        for (int d = 1; d <= 9; ++d) {
            const double x = d * std::pow(10.0, n);
            CAPTURE(d);
            CAPTURE(n);
            CHECK(leading_block_int(x, 10, 1) == d);
        }
    }
    CHECK(leading_block_int(0.02, 10, 1) == 2);
    CHECK(leading_block_int(0.2, 10, 2) == 20);
    CHECK(leading_block_int(1e-7, 10, 1) == 1);
}

TEST_CASE("extraction at the edges of double range") {
    CHECK(leading_block_int(3.14e300, 10, 2) == 31);
    CHECK(leading_block_int(3.14e-310, 10, 1) == 3);  // subnormal input
    CHECK(leading_block_int(7.2e-300, 10, 2) == 72);
    CHECK(leading_block_int(1e308, 10, 1) == 1);
    CHECK(leading_block_int(5e-324, 2, 1) == 1);  // smallest subnormal
}

TEST_CASE("extraction guards") {
    CHECK_THROWS_AS(leading_block_int(0.0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(leading_block_int(-3.0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(leading_block_int(1.0, 1, 1), std::domain_error);
    CHECK_THROWS_AS(leading_block_int(1.0, 10, 0), std::domain_error);
    CHECK_THROWS_AS(leading_block_int(1.0, 10, 17), std::domain_error);  // beyond 2^53
}

TEST_CASE("indicator examples from the digit reading of 0.0314") {
    CHECK(indicator_g({10, 1, 1, 1}, 0.0314) == 0);
    CHECK(indicator_g({10, 3, 1, 1}, 0.0314) == 1);
    CHECK(indicator_g({10, 31, 1, 2}, 0.0314) == 1);
    CHECK(indicator_g({10, 2, 1, 1}, 25.0) == 1);
    CHECK(indicator_g({10, 2, 1, 1}, 15.0) == 0);
    CHECK_THROWS_AS(indicator_g({10, 1, 1, 1}, 0.0), std::domain_error);
    CHECK_THROWS_AS(indicator_g({10, 1, 1, 1}, -1.0), std::domain_error);
}

TEST_CASE("indicator is scale invariant and partitions the axis") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        const double x =
            std::pow(10.0, -6.0 + 12.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53);
        int hits = 0;
        for (std::int64_t d = 1; d <= 9; ++d) {
            const DigitBlock block{10, d, 1, 1};
            const int g = indicator_g(block, x);
            CHECK(g == indicator_g(block, 10.0 * x));
            hits += g;
        }
        CHECK(hits == 1);  // exactly one span-1 block claims x
    }
}

TEST_CASE("exponential(1) first-digit probability matches the frozen interval sum") {
    const Distribution d = make_exponential(1.0);
    const OracleResult res = exact_block_prob(d, {10, 1, 1, 1}, 1e-12);
    // Frozen from high-precision summation of e^{-10^n} - e^{-2 10^n}.
    CHECK(res.probability == doctest::Approx(0.329656978330635).epsilon(1e-12));
    CHECK(res.tail_bound >= 0.0);
    CHECK(res.tail_bound < 1e-12);
    CHECK(res.truncation_lo < 0);
    CHECK(res.truncation_hi >= 0);

    const OracleResult p2 = exact_block_prob(d, {10, 2, 1, 1}, 1e-12);
    CHECK(p2.probability == doctest::Approx(0.17432247811).epsilon(1e-10));
    const OracleResult p9 = exact_block_prob(d, {10, 9, 1, 1}, 1e-12);
    CHECK(p9.probability == doctest::Approx(0.0489635558992).epsilon(1e-10));
}

TEST_CASE("uniform[0,1) gives every digit exactly 1/9") {
    const Distribution d = make_uniform01();
    for (std::int64_t lead = 1; lead <= 9; ++lead) {
        const OracleResult res = exact_block_prob(d, {10, lead, 1, 1}, 1e-10);
        CHECK(res.probability == doctest::Approx(1.0 / 9.0).epsilon(1e-9));
    }
}

TEST_CASE("log-uniform over full decades is exactly Benford") {
    const Distribution d = make_log_uniform(6);
    const OracleResult res = exact_block_prob(d, {10, 1, 1, 1}, 1e-9);
    CHECK(std::fabs(res.probability - std::log10(2.0)) < 1e-9);
    const OracleResult wide = exact_block_prob(d, {10, 31, 1, 2}, 1e-9);
    CHECK(std::fabs(wide.probability - benford_prob({10, 31, 1, 2})) < 1e-9);
}

TEST_CASE("half_normal(1) frozen regression value") {
    const Distribution d = make_half_normal(1.0);
    const OracleResult res = exact_block_prob(d, {10, 1, 1, 1}, 1e-9);
    CHECK(res.probability == doctest::Approx(0.359538440564).epsilon(1e-8));
}

TEST_CASE("full partitions sum to 1") {
    for (const auto& dist : catalog()) {
        CAPTURE(dist.name);
        const LawPrediction table = exact_table(dist, 10, 1, 1e-9);
        double sum = 0;
        for (const auto& [lead, p] : table.probabilities) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            sum += p;
        }
        CHECK(std::fabs(sum - 1.0) < 1e-8);
        CHECK(table.source == Source::oracle);
    }
}

TEST_CASE("batch table agrees with single-block evaluation") {
    const Distribution d = make_exponential(1.0);
    const LawPrediction table = exact_table(d, 10, 2, 1e-9);
    const OracleResult single = exact_block_prob(d, {10, 31, 1, 2}, 1e-9);
    CHECK(std::fabs(table.probabilities.at(31) - single.probability) < 2e-9);
}

TEST_CASE("density-only distributions run through the quadrature path") {
    Distribution stripped = make_exponential(1.0);
    stripped.cdf = nullptr;
    stripped.support.lower = 1e-14;  // certified: mass below is under 1e-14
    const OracleResult res = exact_block_prob(stripped, {10, 1, 1, 1}, 1e-8);
    CHECK(res.probability == doctest::Approx(0.329656978330635).epsilon(1e-7));

    // Tolerances below the support tail cannot be certified.
    stripped.support.tail_mass = 1e-10;
    CHECK_THROWS_AS((void)exact_block_prob(stripped, {10, 1, 1, 1}, 1e-12), numerical_error);
}

TEST_CASE("interval sum agrees with quadrature of density times indicator") {
    // Two independent routes to the same probability. The quadrature runs
    // decade by decade so the indicator's support is visible to the
    // adaptive panels (one giant panel would sample right past it).
    const Distribution d = make_exponential(1.0);
    const DigitBlock block{10, 2, 1, 1};
    const double via_sum = exact_block_prob(d, block, 1e-10).probability;
    double via_indicator = 0;
    for (int k = -9; k <= 1; ++k) {
        via_indicator += integrate_or_throw(
            [&](double x) { return d.density(x) * indicator_g(block, x); },
            std::pow(10.0, k), std::min(std::pow(10.0, k + 1), 30.0), 1e-8, 100000);
    }
    CHECK(std::fabs(via_sum - via_indicator) < 1e-6);
}

TEST_CASE("monte carlo frequencies agree with the oracle at 4 sigma") {
    std::mt19937_64 rng(4242);
    const int n = 100000;
    for (const auto& dist : catalog()) {
        if (!dist.has_sampler()) continue;
        CAPTURE(dist.name);
        const DigitBlock block{10, 1, 1, 1};
        const double p = exact_block_prob(dist, block, 1e-9).probability;
        int hits = 0;
        for (int i = 0; i < n; ++i) {
            hits += indicator_g(block, dist.sampler(rng));
        }
        const double freq = static_cast<double>(hits) / n;
        const double sigma = std::sqrt(p * (1 - p) / n);
        CHECK(std::fabs(freq - p) < 4 * sigma);
    }
}

TEST_CASE("oracle guards") {
    const Distribution d = make_exponential(1.0);
    CHECK_THROWS_AS((void)exact_block_prob(d, {10, 1, 1, 1}, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)exact_block_prob(d, {10, 1, 1, 1}, -1e-9), std::domain_error);
    CHECK_THROWS_AS((void)exact_table(d, 10, 5, 1e-9), std::domain_error);  // 10^5 blocks
    CHECK_THROWS_AS((void)exact_table(d, 1, 1, 1e-9), std::domain_error);
}
