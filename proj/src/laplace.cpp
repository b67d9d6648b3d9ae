#include "benford/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "benford/digit_law.hpp"
#include "benford/errors.hpp"
#include "benford/oracle.hpp"
#include "benford/quadrature.hpp"

namespace benford {

namespace {

// exp(-x) is exactly 0 in double precision beyond this argument.
constexpr double kExpUnderflow = 745.0;

struct SeriesSum {
    double value = 0;      // sum_n (e^{-t lead b^n} - e^{-t (lead+span) b^n})
    int terms = 0;
    double tail_bound = 0;
};

// Certified evaluation of the dimensionless series t*G(t). Terms are summed
// from the scale where t*lead*b^n is order 1, upward until the exponentials
// underflow to exactly zero and downward until the geometric bound
// t*span*b^n * b/(b-1) on the remaining terms drops below tol.
SeriesSum series_sum(const DigitBlock& block, double t, double tol) {
    const double b = static_cast<double>(block.base);
    const double lead = static_cast<double>(block.lead);
    const double span = static_cast<double>(block.span);

    auto term = [&](int n) {
        const double p = scale_by_pow(t, block.base, n);
        const double a = lead * p;
        if (a > kExpUnderflow || !std::isfinite(a)) return 0.0;
        // e^{-a} - e^{-c} without cancellation, c - a = span * p.
        return std::exp(-a) * -std::expm1(-span * p);
    };

    const int n0 = -static_cast<int>(std::lround(std::log(t * lead) / std::log(b)));
    SeriesSum out;
    double sum = 0, comp = 0;
    auto accumulate = [&](double x) {
        const double y = x - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        ++out.terms;
    };

    const int max_scales = static_cast<int>(2200.0 / std::log2(b)) + 8;
    for (int n = n0; n < n0 + max_scales; ++n) {
        const double a = lead * scale_by_pow(t, block.base, n);
        if (a > kExpUnderflow || !std::isfinite(a)) break;  // all higher terms are exactly 0
        accumulate(term(n));
    }
    for (int n = n0 - 1; n > n0 - max_scales; --n) {
        const double geometric_tail =
            span * scale_by_pow(t, block.base, n) * b / (b - 1.0);
        out.tail_bound = geometric_tail;
        if (geometric_tail < tol) break;
        accumulate(term(n));
    }
    out.value = sum;
    return out;
}

}  // namespace

SeriesEval g_transform(const DigitBlock& block, double t, double tol) {
    validate(block);
    if (!(t > 0)) throw std::domain_error("g_transform: t must be > 0");
    if (!(tol > 0)) throw std::domain_error("g_transform: tol must be > 0");
    const SeriesSum s = series_sum(block, t, tol);
    SeriesEval eval;
    eval.block = block;
    eval.t = t;
    eval.value = s.value / t;
    eval.terms_used = s.terms;
    eval.tail_bound = s.tail_bound;
    return eval;
}

double delta(const DigitBlock& block, double t) {
    validate(block);
    if (!(t > 0)) throw std::domain_error("delta: t must be > 0");
    return series_sum(block, t, 1e-13).value - benford_prob(block);
}

ExtremaScan scan_delta_extrema(const DigitBlock& block, int samples_per_period) {
    validate(block);
    if (samples_per_period < 100) {
        throw std::domain_error("scan_delta_extrema: need at least 100 samples per period");
    }
    const double period = std::log(static_cast<double>(block.base));
    auto abs_delta = [&block](double s) { return std::fabs(delta(block, std::exp(s))); };

    const int n = samples_per_period;
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < n; ++i) {
        const double v = abs_delta(period * i / n);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }

    // Golden-section sharpening of the winning bracket (delta is periodic,
    // so evaluating slightly outside [0, period) is fine).
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = period * (best - 1) / n;
    double c = period * (best + 1) / n;
    double x1 = c - gr * (c - a);
    double x2 = a + gr * (c - a);
    double f1 = abs_delta(x1);
    double f2 = abs_delta(x2);
    for (int iter = 0; iter < 200 && (c - a) > 1e-10; ++iter) {
        if (f1 > f2) {
            c = x2;
            x2 = x1;
            f2 = f1;
            x1 = c - gr * (c - a);
            f1 = abs_delta(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (c - a);
            f2 = abs_delta(x2);
        }
    }
    double s_star = 0.5 * (a + c);
    ExtremaScan out;
    out.max_abs = abs_delta(s_star);
    if (s_star < 0) s_star += period;
    if (s_star >= period) s_star -= period;
    out.argmax_s = s_star;
    return out;
}

ErrorReport total_error(const Distribution& dist, const DigitBlock& block, double tol) {
    validate(block);
    if (!(tol > 0)) throw std::domain_error("total_error: tol must be > 0");

    ErrorReport report;
    report.block = block;
    report.benford_term = benford_prob(block);
    report.oracle_prob = exact_block_prob(dist, block, tol).probability;
    report.total_error = report.oracle_prob - report.benford_term;
    report.periodic_max = scan_delta_extrema(block).max_abs;
    if (dist.has_kernel()) {
        report.bound_M = kernel_abs_mass(*dist.kernel);
        report.bound_value = report.periodic_max * *report.bound_M;
        report.bound_certified = dist.kernel->sign_definite;
    }
    return report;
}

double kernel_weighted_error(const Distribution& dist, const DigitBlock& block, double tol) {
    validate(block);
    if (!(tol > 0)) throw std::domain_error("kernel_weighted_error: tol must be > 0");
    if (!dist.has_kernel()) {
        throw unsupported_error("kernel_weighted_error: distribution '" + dist.name +
                                "' has no inverse-Laplace kernel");
    }
    const LaplaceKernel& k = *dist.kernel;
    if (k.atomic()) {
        double total = 0.0;
        for (const auto& atom : k.atoms) {
            total += atom.weight / atom.t * delta(block, atom.t);
        }
        return total;
    }
    // integral of (f(t)/t) delta(t) dt on the log axis s = ln t.
    return integrate_or_throw(
        [&k, &block](double s) { return k.f(std::exp(s)) * delta(block, std::exp(s)); },
        std::log(k.t_lo), std::log(k.t_hi), tol / 2, 20000);
}

}  // namespace benford
