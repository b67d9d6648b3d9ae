#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "benford/errors.hpp"

namespace benford {

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    int intervals = 0;
    bool converged = false;
    double worst_lo = 0, worst_hi = 0;  // interval with the largest residual error
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
// Column layout: abscissa, Gauss weight (0 for Kronrod-only nodes), Kronrod weight.
inline constexpr double kG7K15[8][3] = {
    {0.000000000000000000000000000000000, 0.417959183673469387755102040816327, 0.209482141084727828012999174891714},
    {0.405845151377397166906606412076961, 0.381830050505118944950369775488975, 0.190350578064785409913256402421014},
    {0.741531185599394439863864773280788, 0.279705391489276667901467771423780, 0.140653259715525918745189590510238},
    {0.949107912342758524526189684047851, 0.129484966168869693270611432679082, 0.063092092629978553290700663189204},
    {0.207784955007898467600689403773245, 0.0,                                 0.204432940075298892414161999234649},
    {0.586087235467691130294144838258730, 0.0,                                 0.169004726639267902826583426598550},
    {0.864864423359769072789712788640926, 0.0,                                 0.104790010322250183839876322541518},
    {0.991455371120812639206854697526329, 0.0,                                 0.022935322010529224963732008058970},
};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = kG7K15[0][1] * f0;
    double k15 = kG7K15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kG7K15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kG7K15[i][1] * fi;
        k15 += kG7K15[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    value = k15;
    // |K15 - G7| is a deliberately conservative bound for the K15 error.
    error = std::fabs(k15 - g7);
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b] to an
// absolute tolerance. Splits the interval with the largest error estimate
// until the summed estimate drops below abs_tol.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, double abs_tol,
                                    int max_intervals = 4000) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }

    struct Piece {
        double lo, hi, value, error;
        bool operator<(const Piece& o) const { return error < o.error; }
    };
    std::priority_queue<Piece> heap;

    double v, e;
    detail::gk15(f, a, b, v, e);
    heap.push({a, b, v, e});
    double active_e = e;
    double settled_v = 0, settled_e = 0;  // intervals at floating-point resolution
    int n = 1;

    while (!heap.empty() && settled_e + active_e > abs_tol && n < max_intervals) {
        Piece p = heap.top();
        heap.pop();
        const double width = p.hi - p.lo;
        if (width <= 8 * std::numeric_limits<double>::epsilon() *
                         std::max(std::fabs(p.lo), std::fabs(p.hi))) {
            // Cannot subdivide further; accept this piece as is.
            settled_v += p.value;
            settled_e += p.error;
            active_e -= p.error;
            continue;
        }
        const double mid = 0.5 * (p.lo + p.hi);
        double v1, e1, v2, e2;
        detail::gk15(f, p.lo, mid, v1, e1);
        detail::gk15(f, mid, p.hi, v2, e2);
        active_e += e1 + e2 - p.error;
        heap.push({p.lo, mid, v1, e1});
        heap.push({mid, p.hi, v2, e2});
        ++n;
    }

    double total_v = settled_v;
    if (!heap.empty()) {
        res.worst_lo = heap.top().lo;
        res.worst_hi = heap.top().hi;
    }
    while (!heap.empty()) {
        total_v += heap.top().value;
        heap.pop();
    }
    res.value = total_v;
    res.error_estimate = settled_e + active_e;
    res.intervals = n;
    res.converged = res.error_estimate <= abs_tol;
    return res;
}

// As integrate_adaptive, but throws numerical_error naming the offending
// interval when the tolerance cannot be met.
template <class F>
double integrate_or_throw(const F& f, double a, double b, double abs_tol,
                          int max_intervals = 4000) {
    const QuadratureResult r = integrate_adaptive(f, a, b, abs_tol, max_intervals);
    if (!r.converged) {
        throw numerical_error("quadrature did not converge on [" + std::to_string(r.worst_lo) +
                              ", " + std::to_string(r.worst_hi) + "]: residual error " +
                              std::to_string(r.error_estimate) + " > " + std::to_string(abs_tol));
    }
    return r.value;
}

}  // namespace benford
