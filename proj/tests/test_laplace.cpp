#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "benford/digit_law.hpp"
#include "benford/errors.hpp"
#include "benford/laplace.hpp"

using namespace benford;

namespace {

double rand_log_t(std::mt19937_64& rng, double lo_exp, double hi_exp) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::pow(10.0, lo_exp + (hi_exp - lo_exp) * u);
}

}  // namespace

TEST_CASE("g_transform stays within the 0.03 band around the closed form") {
    const DigitBlock block{10, 1, 1, 1};
    const double target = std::log10(2.0);
    for (double t : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 250.0}) {
        const SeriesEval eval = g_transform(block, t, 1e-12);
        CHECK(eval.value >= 0.0);
        CHECK(eval.tail_bound < 1e-12);
        const double scaled = t * eval.value;
        CAPTURE(t);
        CHECK(scaled > target - 0.03);
        CHECK(scaled < target + 0.03);
    }
}

TEST_CASE("series is invariant under t -> base*t after rescaling") {
    const DigitBlock block{10, 3, 2, 1};
    for (double t : {0.02, 0.7, 1.0, 13.0}) {
        const double a = t * g_transform(block, t, 1e-13).value;
        const double b = 10.0 * t * g_transform(block, 10.0 * t, 1e-13).value;
        CHECK(std::fabs(a - b) < 1e-10);
    }
}

TEST_CASE("series telescopes across a span decomposition") {
    const DigitBlock whole{10, 1, 9, 1};
    for (double t : {0.1, 1.0, 7.0}) {
        double parts = 0;
        for (std::int64_t d = 1; d <= 9; ++d) {
            parts += t * g_transform({10, d, 1, 1}, t, 1e-13).value;
        }
        const double direct = t * g_transform(whole, t, 1e-13).value;
        CHECK(std::fabs(direct - parts) < 1e-10);
    }
}

TEST_CASE("g_transform guards") {
    CHECK_THROWS_AS((void)g_transform({10, 1, 1, 1}, 0.0, 1e-9), std::domain_error);
    CHECK_THROWS_AS((void)g_transform({10, 1, 1, 1}, -1.0, 1e-9), std::domain_error);
    CHECK_THROWS_AS((void)g_transform({10, 1, 1, 1}, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)delta({10, 1, 1, 1}, 0.0), std::domain_error);
}

TEST_CASE("delta at t=1 for the first-digit block: frozen value") {
    CHECK(delta({10, 1, 1, 1}, 1.0) == doctest::Approx(0.0286269826667).epsilon(1e-9));
    CHECK(std::fabs(delta({10, 1, 1, 1}, 1.0)) < 0.03);
}

TEST_CASE("delta is periodic in log t") {
    std::mt19937_64 rng(31337);
    const std::vector<DigitBlock> blocks{
        {10, 1, 1, 1}, {10, 9, 1, 1}, {10, 47, 3, 2}, {2, 1, 1, 1}, {16, 11, 2, 1}};
    for (const auto& block : blocks) {
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const double t = rand_log_t(rng, -3.0, 3.0);
            worst = std::max(worst,
                             std::fabs(delta(block, block.base * t) - delta(block, t)));
        }
        CAPTURE(to_string(block));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("delta has zero mean over one log period") {
    // Uniform average over the period; exact for smooth periodic integrands.
    for (const auto& block : std::vector<DigitBlock>{{10, 1, 1, 1}, {10, 5, 1, 1}}) {
        const double period = std::log(10.0);
        const int n = 4096;
        double mean = 0;
        for (int i = 0; i < n; ++i) {
            mean += delta(block, std::exp(period * i / n));
        }
        mean /= n;
        CAPTURE(to_string(block));
        CHECK(std::fabs(mean) < 1e-6);
    }
}

TEST_CASE("extrema scan: first-digit block sits inside the published band") {
    const ExtremaScan scan = scan_delta_extrema({10, 1, 1, 1});
    CHECK(scan.max_abs > 0.029);
    CHECK(scan.max_abs < 0.03);
    // Frozen high-precision scan values.
    CHECK(scan.max_abs == doctest::Approx(0.0297374729525003).epsilon(1e-8));
    CHECK(scan.argmax_s == doctest::Approx(1.0844019024).epsilon(1e-5));
}

TEST_CASE("extrema scan: full partition is flat") {
    const ExtremaScan scan = scan_delta_extrema({10, 1, 9, 1});
    CHECK(scan.max_abs < 1e-10);
}

TEST_CASE("extrema scan: frozen regression values for other blocks") {
    CHECK(scan_delta_extrema({10, 9, 1, 1}).max_abs ==
          doctest::Approx(0.00529460057485582).epsilon(1e-7));
    CHECK(scan_delta_extrema({10, 2, 1, 1}).max_abs ==
          doctest::Approx(0.019366946365058).epsilon(1e-7));
    CHECK(scan_delta_extrema({10, 9, 1, 1}).max_abs > 0.0);
}

TEST_CASE("extrema scan guards") {
    CHECK_THROWS_AS((void)scan_delta_extrema({10, 1, 1, 1}, 99), std::domain_error);
    CHECK_NOTHROW((void)scan_delta_extrema({10, 1, 1, 1}, 100));
}

TEST_CASE("total_error worked examples with signed frozen values") {
    const ErrorReport sqrt_report = total_error(make_sqrt_exp(), {10, 1, 1, 1}, 1e-9);
    CHECK(sqrt_report.total_error == doctest::Approx(-0.0005055894134).epsilon(1e-6));
    // By construction, not approximately.
    CHECK(sqrt_report.total_error == sqrt_report.oracle_prob - sqrt_report.benford_term);
    CHECK(sqrt_report.bound_M.has_value());
    CHECK(*sqrt_report.bound_M == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(sqrt_report.bound_certified);
    CHECK(std::fabs(sqrt_report.total_error) <= *sqrt_report.bound_value + 1e-6);

    const ErrorReport quintic_report = total_error(make_quintic_tail(), {10, 1, 1, 1}, 1e-9);
    CHECK(quintic_report.total_error == doctest::Approx(-0.008502937791).epsilon(1e-6));
    CHECK(std::fabs(quintic_report.total_error) <= *quintic_report.bound_value + 1e-6);

    const ErrorReport lu_report = total_error(make_log_uniform(6), {10, 1, 1, 1}, 1e-11);
    CHECK(std::fabs(lu_report.total_error) < 1e-9);
    CHECK_FALSE(lu_report.bound_M.has_value());
}

TEST_CASE("kernel_weighted_error matches total_error on both routes") {
    const DigitBlock block{10, 1, 1, 1};
    {
        const Distribution d = make_sqrt_exp();
        const double direct = total_error(d, block, 1e-9).total_error;
        const double weighted = kernel_weighted_error(d, block, 1e-7);
        CHECK(std::fabs(direct - weighted) < 1e-4);
    }
    {
        const Distribution d = make_quintic_tail();
        const double direct = total_error(d, block, 1e-9).total_error;
        const double weighted = kernel_weighted_error(d, block, 1e-7);
        CHECK(std::fabs(direct - weighted) < 1e-3);
    }
}

TEST_CASE("atomic kernels reduce the weighted error to a point evaluation") {
    const Distribution d = make_exponential(1.0);
    const DigitBlock block{10, 1, 1, 1};
    CHECK(kernel_weighted_error(d, block, 1e-9) == delta(block, 1.0));

    const Distribution d3 = make_exponential(3.0);
    CHECK(kernel_weighted_error(d3, block, 1e-9) == delta(block, 3.0));
}

TEST_CASE("kernel_weighted_error without a kernel is unsupported") {
    CHECK_THROWS_AS((void)kernel_weighted_error(make_uniform01(), {10, 1, 1, 1}, 1e-9),
                    unsupported_error);
}

namespace {

// Sum of independent Exp(1) and Exp(2) variables: density 2e^-x - 2e^-2x,
// whose kernel is two atoms of opposite sign (+2 at t=1, -2 at t=2).
Distribution make_hypoexponential() {
    Distribution d;
    d.name = "hypoexponential(1,2)";
    d.density = [](double x) {
        return x < 0 ? 0.0 : 2.0 * (std::exp(-x) - std::exp(-2.0 * x));
    };
    d.cdf = [](double x) {
        return x <= 0 ? 0.0 : 1.0 - 2.0 * std::exp(-x) + std::exp(-2.0 * x);
    };
    LaplaceKernel k;
    k.atoms = {{1.0, 2.0}, {2.0, -2.0}};
    k.sign_definite = false;
    d.kernel = k;
    d.support = {0.0, 40.0, 1e-13};
    return d;
}

}  // namespace

TEST_CASE("sign-changing atomic kernel: bound reported but not certified") {
    const Distribution d = make_hypoexponential();
    CHECK(std::fabs(kernel_normalization(*d.kernel) - 1.0) < 1e-12);  // 2/1 - 2/2
    CHECK(kernel_abs_mass(*d.kernel) == doctest::Approx(3.0));        // 2/1 + 2/2

    const DigitBlock block{10, 1, 1, 1};
    const ErrorReport report = total_error(d, block, 1e-10);
    CHECK(report.bound_M.has_value());
    CHECK(*report.bound_M == doctest::Approx(3.0));
    CHECK_FALSE(report.bound_certified);

    // Both error routes still agree: the kernel integral reduces to
    // 2 delta(1) - delta(2).
    const double weighted = kernel_weighted_error(d, block, 1e-9);
    CHECK(weighted == doctest::Approx(2.0 * delta(block, 1.0) - delta(block, 2.0)));
    CHECK(std::fabs(weighted - report.total_error) < 1e-9);
}

TEST_CASE("full-partition delta vanishes for every t") {
    const DigitBlock full{2, 1, 1, 1};
    const DigitBlock full10{10, 1, 9, 1};
    for (double t : {1e-3, 0.1, 1.0, 42.0, 1e3}) {
        CHECK(std::fabs(delta(full, t)) < 1e-10);
        CHECK(std::fabs(delta(full10, t)) < 1e-10);
    }
}
