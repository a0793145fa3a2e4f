#pragma once

#include <cmath>
#include <cstddef>
#include <algorithm>
#include <utility>

#include "softgrip/errors.hpp"

namespace softgrip {

struct RootOptions {
    /// Stop once |f(x)| <= residual_tol.
    double residual_tol = 0.0;
    /// Stop once the bracket is narrower than this.
    double x_tol = 0.0;
    std::size_t max_iterations = 200;
};

/**
 * Safeguarded Newton iteration for an increasing function on [lo, hi].
 *
 * `f` returns a pair (value, derivative). The bracket must satisfy
 * f(lo) <= 0 <= f(hi). A Newton step that leaves the current bracket, or
 * that fails to halve the residual, is replaced by bisection, so the
 * iteration always converges for a continuous monotone function.
 *
 * Throws SolverError if neither tolerance is met within the budget.
 */
template <class F>
double solve_increasing(F&& f, double lo, double hi, const RootOptions& opts) {
    auto [f_lo, d_lo] = f(lo);
    if (std::abs(f_lo) <= opts.residual_tol) return lo;
    auto [f_hi, d_hi] = f(hi);
    if (std::abs(f_hi) <= opts.residual_tol) return hi;
    if (f_lo > 0.0 || f_hi < 0.0) {
        throw SolverError("solve_increasing: root not bracketed");
    }

    double x = 0.5 * (lo + hi);
    double prev_abs = std::max(std::abs(f_lo), std::abs(f_hi));
    for (std::size_t it = 0; it < opts.max_iterations; ++it) {
        auto [fx, dfx] = f(x);
        const double abs_fx = std::abs(fx);
        if (abs_fx <= opts.residual_tol) return x;
        if (fx < 0.0) lo = x; else hi = x;
        if (hi - lo <= opts.x_tol) return x;

        // Newton only while it is making good progress.
        double next = 0.5 * (lo + hi);
        if (dfx > 0.0 && abs_fx <= 0.5 * prev_abs) {
            const double newton = x - fx / dfx;
            if (newton > lo && newton < hi) next = newton;
        }
        prev_abs = abs_fx;
        if (next == x) return x;
        x = next;
    }
    throw SolverError("solve_increasing: iteration budget exhausted");
}

/**
 * Smallest x in [lo, hi] with pred(x) true, for a predicate that is false
 * below some threshold and true above it. Requires pred(hi) == true and
 * pred(lo) == false. Returns the upper end of the final bracket, so the
 * result always satisfies the predicate.
 */
template <class Pred>
double bisect_threshold(Pred&& pred, double lo, double hi, double x_tol,
                        std::size_t max_iterations = 200) {
    for (std::size_t it = 0; it < max_iterations && hi - lo > x_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (pred(mid)) hi = mid; else lo = mid;
    }
    return hi;
}

}  // namespace softgrip
