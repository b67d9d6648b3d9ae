#pragma once

#include <optional>

#include "benford/digit_block.hpp"
#include "benford/distribution.hpp"

namespace benford {

// One evaluation of the Laplace transform G(t) of the block's indicator:
// G(t) = (1/t) * sum_n (e^{-t lead b^n} - e^{-t (lead+span) b^n}).
struct SeriesEval {
    DigitBlock block;
    double t = 0;
    double value = 0;        // G(t)
    int terms_used = 0;
    double tail_bound = 0;   // truncation bound on t * value
};

// Evaluates the series with certified truncation. tol bounds the error of
// t * value (the dimensionless series sum).
SeriesEval g_transform(const DigitBlock& block, double t, double tol);

// Periodic error t G(t) - log_base(1 + span/lead); invariant under t -> base*t.
double delta(const DigitBlock& block, double t);

struct ExtremaScan {
    double max_abs = 0;   // max |delta| over one period
    double argmax_s = 0;  // location in s = ln t, within [0, ln base)
};

// Scans s over one period on a uniform grid, then sharpens the best bracket
// by golden-section search to 1e-10 in s.
ExtremaScan scan_delta_extrema(const DigitBlock& block, int samples_per_period = 4096);

struct ErrorReport {
    DigitBlock block;
    double total_error = 0;   // oracle_prob - benford_term
    double benford_term = 0;
    double oracle_prob = 0;
    double periodic_max = 0;  // max |delta| over one period
    std::optional<double> bound_M;      // integral of |f(t)/t|
    std::optional<double> bound_value;  // periodic_max * bound_M
    bool bound_certified = false;       // true only for sign-definite kernels
};

// How far the distribution's exact block probability sits from the
// closed-form law, with the kernel-based bound when a kernel is available.
ErrorReport total_error(const Distribution& dist, const DigitBlock& block, double tol);

// The same total error computed through the transform side:
// integral of (f(t)/t) delta(t) dt. Requires a kernel.
double kernel_weighted_error(const Distribution& dist, const DigitBlock& block, double tol);

}  // namespace benford
