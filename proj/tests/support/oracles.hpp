#pragma once

// Test-side numerical oracles, independent of the library code paths
// they are used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

using Fn = std::function<double(double)>;

namespace detail {

inline double simpson(const Fn& f, double a, double fa, double b, double fb, double m,
                      double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const Fn& f, double a, double fa, double b, double fb, double m,
                            double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature of f over [a, b].
inline double integrate(const Fn& f, double a, double b, double tol = 1e-12,
                        int max_depth = 48) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = detail::simpson(f, a, fa, b, fb, m, fm);
    return detail::adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

/// Integrate a density over (lo, hi) by summing adaptive panels between
/// breakpoints (typically a handful of quantiles), which keeps each
/// panel well scaled for heavy-tailed integrands.
inline double integrate_density(const Fn& density, const std::vector<double>& breakpoints,
                                double tol_per_panel = 1e-8) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        total += integrate(density, breakpoints[i], breakpoints[i + 1], tol_per_panel);
    }
    return total;
}

/// Central-difference derivative with a relative step.
inline double derivative(const Fn& f, double x, double rel_step = 1e-6) {
    const double h = rel_step * std::max(std::abs(x), 1e-8);
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

/// Smallest k with P(Poisson(lambda) <= k) >= p, by direct pmf summation.
inline int poisson_quantile(double lambda, double p) {
    double pmf = std::exp(-lambda);
    double cdf = pmf;
    int k = 0;
    while (cdf < p) {
        ++k;
        pmf *= lambda / k;
        cdf += pmf;
        if (k > 100000) throw std::runtime_error("poisson_quantile: runaway sum");
    }
    return k;
}

/// Empirical CDF of a sample at x.
inline double ecdf(const std::vector<double>& sample, double x) {
    std::size_t count = 0;
    for (double v : sample) {
        if (v <= x) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(sample.size());
}

} // namespace oracles
