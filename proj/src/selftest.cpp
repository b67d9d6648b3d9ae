#include "benford/selftest.hpp"

#include <array>
#include <cmath>
#include <random>

#include "benford/digit_law.hpp"
#include "benford/distribution.hpp"
#include "benford/empirics.hpp"
#include "benford/laplace.hpp"
#include "benford/oracle.hpp"
#include "benford/report.hpp"

namespace benford {

namespace {

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;

    explicit Check(std::string check_name) : name(std::move(check_name)) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "FAILED: " + what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    CheckResult result() const { return {name, ok, detail}; }
};

CheckResult check_closed_form_table() {
    Check c{"closed-form first-digit table (base 10)"};
    const LawPrediction table = first_digit_table(10);
    double worst = 0;
    for (int d = 1; d <= 9; ++d) {
        const double expected = std::log10(1.0 + 1.0 / d);
        worst = std::max(worst, std::fabs(table.probabilities.at(d) - expected));
    }
    c.require(worst <= 1e-12, "table deviates from log10(1+1/d) by " + format_double(worst));
    const double p1 = table.probabilities.at(1);
    c.require(std::fabs(p1 - 0.3010299957) <= 1e-10,
              "P_1 = " + format_double(p1) + " != 0.3010299957");
    c.note("P_1 = " + format_double(p1) + ", max dev " + format_double(worst));
    return c.result();
}

CheckResult check_extrema_band() {
    Check c{"extrema band for block (10,1,1,1)"};
    const ExtremaScan scan = scan_delta_extrema({10, 1, 1, 1});
    c.require(scan.max_abs > 0.028 && scan.max_abs < 0.031,
              "max |delta~| = " + format_double(scan.max_abs) + " outside (0.028, 0.031)");
    c.note("max |delta~| = " + format_double(scan.max_abs) + " at s = " +
           format_double(scan.argmax_s));
    return c.result();
}

CheckResult check_worked_errors() {
    Check c{"worked total errors (sqrt_exp, quintic_tail)"};
    const double e_sqrt =
        std::fabs(total_error(make_sqrt_exp(), {10, 1, 1, 1}, 1e-9).total_error);
    const double e_quint =
        std::fabs(total_error(make_quintic_tail(), {10, 1, 1, 1}, 1e-9).total_error);
    c.require(std::fabs(e_sqrt - 0.0005) <= 2e-4,
              "sqrt_exp |error| = " + format_double(e_sqrt) + " not 0.0005 +/- 2e-4");
    c.require(std::fabs(e_quint - 0.009) <= 2e-3,
              "quintic_tail |error| = " + format_double(e_quint) + " not 0.009 +/- 2e-3");
    c.note("sqrt_exp " + format_double(e_sqrt) + ", quintic_tail " + format_double(e_quint));
    return c.result();
}

CheckResult check_bound_soundness() {
    Check c{"total-error bound 0.03*M for sign-definite kernels"};
    for (const auto& dist : {make_sqrt_exp(), make_quintic_tail()}) {
        const ErrorReport report = total_error(dist, {10, 1, 1, 1}, 1e-9);
        c.require(report.bound_M.has_value() && report.bound_certified,
                  dist.name + ": missing certified bound");
        const double m = report.bound_M.value_or(0.0);
        c.require(std::fabs(m - 1.0) <= 1e-6,
                  dist.name + ": M = " + format_double(m) + " != 1");
        c.require(std::fabs(report.total_error) <= 0.03 * m + 1e-6,
                  dist.name + ": |error| " + format_double(std::fabs(report.total_error)) +
                      " above 0.03*M");
        c.note(dist.name + ": |error| " + format_double(std::fabs(report.total_error)) +
               " <= 0.03*M = " + format_double(0.03 * m));
    }
    return c.result();
}

CheckResult check_route_equivalence() {
    Check c{"error route equivalence (interval sum vs kernel integral)"};
    const DigitBlock block{10, 1, 1, 1};
    {
        const Distribution dist = make_sqrt_exp();
        const double a = total_error(dist, block, 1e-9).total_error;
        const double b = kernel_weighted_error(dist, block, 1e-7);
        c.require(std::fabs(a - b) <= 1e-4, "sqrt_exp routes differ by " +
                                                format_double(std::fabs(a - b)));
        c.note("sqrt_exp " + format_double(a) + " vs " + format_double(b));
    }
    {
        const Distribution dist = make_quintic_tail();
        const double a = total_error(dist, block, 1e-9).total_error;
        const double b = kernel_weighted_error(dist, block, 1e-7);
        c.require(std::fabs(a - b) <= 1e-3, "quintic_tail routes differ by " +
                                                format_double(std::fabs(a - b)));
        c.note("quintic_tail " + format_double(a) + " vs " + format_double(b));
    }
    return c.result();
}

CheckResult check_periodicity_scale_invariance(unsigned seed) {
    Check c{"delta periodicity and indicator scale invariance"};
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int base = 2 + static_cast<int>(rng() % 15);
        const int width = 1 + static_cast<int>(rng() % 2);
        const std::int64_t lo = pow_int(base, width - 1);
        const std::int64_t hi = pow_int(base, width);
        const std::int64_t lead = lo + static_cast<std::int64_t>(rng() % (hi - lo));
        const std::int64_t span = 1 + static_cast<std::int64_t>(rng() % (hi - lead));
        const DigitBlock block{base, lead, span, width};
        for (int i = 0; i < 1000; ++i) {
            const double t = std::pow(10.0, -3.0 + 6.0 * uniform01(rng));
            worst = std::max(worst, std::fabs(delta(block, base * t) - delta(block, t)));
        }
    }
    c.require(worst < 1e-10,
              "max |delta(b t) - delta(t)| = " + format_double(worst) + " >= 1e-10");
    c.note("max |delta(b t) - delta(t)| = " + format_double(worst));

    int mismatches = 0;
    const int grid = 10000;
    for (int i = 0; i < grid; ++i) {
        const double x = std::exp(-6.0 * std::log(10.0) +
                                  12.0 * std::log(10.0) * (i + 0.5) / grid);
        for (std::int64_t d = 1; d <= 9; ++d) {
            const DigitBlock block{10, d, 1, 1};
            if (indicator_g(block, x) != indicator_g(block, 10.0 * x)) ++mismatches;
        }
        const DigitBlock wide{10, 31, 1, 2};
        if (indicator_g(wide, x) != indicator_g(wide, 10.0 * x)) ++mismatches;
    }
    c.require(mismatches == 0,
              std::to_string(mismatches) + " indicator mismatches under x -> 10x");
    c.note("indicator mismatches: " + std::to_string(mismatches) + "/" +
           std::to_string(grid * 10));
    return c.result();
}

CheckResult check_partition_telescoping() {
    Check c{"oracle partition sums and full-partition delta"};
    for (const auto& dist : catalog()) {
        const LawPrediction table = exact_table(dist, 10, 1, 1e-9);
        double sum = 0;
        for (const auto& [d, p] : table.probabilities) sum += p;
        c.require(std::fabs(sum - 1.0) <= 1e-8,
                  dist.name + ": partition sums to " + format_double(sum));
    }
    c.note("all catalog width-1 tables sum to 1 within 1e-8");

    const DigitBlock full{10, 1, 9, 1};
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        const double t = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
        worst = std::max(worst, std::fabs(delta(full, t)));
    }
    c.require(worst < 1e-10, "full-partition |delta| reaches " + format_double(worst));
    c.note("full-partition max |delta| = " + format_double(worst));
    return c.result();
}

CheckResult check_hill_consistency() {
    Check c{"Hill joint law marginalization"};
    double worst = 0;
    for (int d1 = 1; d1 <= 9; ++d1) {
        double sum = 0;
        for (int d2 = 0; d2 <= 9; ++d2) {
            const std::array<int, 2> digits{d1, d2};
            sum += hill_joint_prob(10, digits);
        }
        worst = std::max(worst, std::fabs(sum - benford_prob({10, d1, 1, 1})));
    }
    c.require(worst <= 1e-12, "joint-to-first-digit sums deviate by " + format_double(worst));

    // Independent brute-force oracle for the second-digit law, summed
    // directly from the closed form.
    double brute = 0;
    for (int k = 1; k <= 9; ++k) brute += std::log10(1.0 + 1.0 / (10.0 * k));
    const double table_value = ith_digit_table(10, 2).probabilities.at(0);
    c.require(std::fabs(table_value - brute) <= 1e-12,
              "second-digit d=0: table " + format_double(table_value) + " vs brute " +
                  format_double(brute));
    c.require(std::fabs(table_value - 0.119679) <= 1e-6,
              "second-digit d=0 marginal = " + format_double(table_value) +
                  " not 0.119679 within 1e-6");
    c.note("max joint-sum dev " + format_double(worst) + ", P(2nd=0) = " +
           format_double(table_value));
    return c.result();
}

double worst_benford_gap(const DigitHistogram& hist) {
    double worst = 0;
    const double n = static_cast<double>(hist.total);
    for (std::int64_t d = 1; d <= 9; ++d) {
        const auto it = hist.counts.find(d);
        const double prop = it == hist.counts.end() ? 0.0 : static_cast<double>(it->second) / n;
        worst = std::max(worst, std::fabs(prop - std::log10(1.0 + 1.0 / d)));
    }
    return worst;
}

CheckResult check_benford_synthetic(unsigned seed) {
    Check c{"exactly-Benford synthetic data (log-uniform)"};
    const Distribution lu = make_log_uniform(6);
    const double err = total_error(lu, {10, 1, 1, 1}, 1e-11).total_error;
    c.require(std::fabs(err) <= 1e-9,
              "log-uniform total error " + format_double(err) + " above 1e-9");

    std::mt19937_64 rng(seed);
    std::vector<double> draws(1000000);
    for (auto& x : draws) x = lu.sampler(rng);

    const double dev_raw = worst_benford_gap(histogram(draws, 10, 1));
    const auto scaled = transform_data(draws, TransformKind::scale, 3.0);
    const double dev_scaled = worst_benford_gap(histogram(scaled, 10, 1));
    const auto powered = transform_data(draws, TransformKind::power, 2.0);
    const double dev_powered = worst_benford_gap(histogram(powered, 10, 1));
    c.require(dev_raw < 0.003, "raw per-digit deviation " + format_double(dev_raw));
    c.require(dev_scaled < 0.003, "scale(3) per-digit deviation " + format_double(dev_scaled));
    c.require(dev_powered < 0.003, "power(2) per-digit deviation " + format_double(dev_powered));
    c.note("per-digit deviations: raw " + format_double(dev_raw) + ", scale(3) " +
           format_double(dev_scaled) + ", power(2) " + format_double(dev_powered));
    return c.result();
}

CheckResult check_violation_case(unsigned seed) {
    Check c{"violation and conformity cases (uniform, exponential)"};
    std::mt19937_64 rng(seed);
    const Distribution uni = make_uniform01();
    std::vector<double> draws(100000);
    for (auto& x : draws) x = uni.sampler(rng);
    const ConformityReport report = conformity(histogram(draws, 10, 1), first_digit_table(10));
    c.require(report.verdict == Verdict::violates,
              "uniform[0,1) verdict '" + to_string(report.verdict) + "', expected 'violates'");
    c.note("uniform mad = " + format_double(report.mad) + " -> " + to_string(report.verdict));

    // Independent CDF interval-sum for P_1 of exponential(1), written out
    // directly: sum_n e^{-10^n} - e^{-2*10^n}.
    double independent = 0;
    for (int n = -14; n <= 2; ++n) {
        const double s = std::pow(10.0, n);
        independent += std::exp(-s) - std::exp(-2.0 * s);
    }
    const double oracle_p1 =
        exact_block_prob(make_exponential(1.0), {10, 1, 1, 1}, 1e-9).probability;
    c.require(std::fabs(oracle_p1 - independent) <= 1e-3,
              "oracle P_1 " + format_double(oracle_p1) + " vs independent " +
                  format_double(independent));
    c.require(std::fabs(oracle_p1 - std::log10(2.0)) <= 0.03,
              "oracle P_1 " + format_double(oracle_p1) + " further than 0.03 from log10 2");
    c.note("exponential P_1 = " + format_double(oracle_p1));
    return c.result();
}

CheckResult check_kernel_normalization() {
    Check c{"kernel normalization: integral of f(t)/t = 1"};
    for (const auto& dist : catalog()) {
        if (!dist.has_kernel()) continue;
        const double norm = kernel_normalization(*dist.kernel, 1e-8);
        c.require(std::fabs(norm - 1.0) <= 1e-6,
                  dist.name + ": integral = " + format_double(norm));
        c.note(dist.name + " " + format_double(norm));
    }
    return c.result();
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(unsigned seed) {
    std::vector<CheckResult> results;
    results.push_back(check_closed_form_table());
    results.push_back(check_extrema_band());
    results.push_back(check_worked_errors());
    results.push_back(check_bound_soundness());
    results.push_back(check_route_equivalence());
    results.push_back(check_periodicity_scale_invariance(seed));
    results.push_back(check_partition_telescoping());
    results.push_back(check_hill_consistency());
    results.push_back(check_benford_synthetic(seed));
    results.push_back(check_violation_case(seed));
    results.push_back(check_kernel_normalization());
    return results;
}

}  // namespace benford
