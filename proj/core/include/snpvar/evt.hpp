#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "snpvar/kernels.hpp"

namespace snpvar {

struct EdfStats {
    double ks_D = 0.0;
    double cvm_W2 = 0.0;
    double ad_A2 = 0.0;
};

/// Kolmogorov-Smirnov D, Cramer-von Mises W^2 and Anderson-Darling A^2
/// of the sample against a fitted CDF. With z_i = cdf(x_(i)) sorted
/// ascending (clamped to [1e-12, 1-1e-12]):
///   D   = max_i max(i/n - z_i, z_i - (i-1)/n)
///   W^2 = sum (z_i - (2i-1)/(2n))^2 + 1/(12n)
///   A^2 = -n - (1/n) sum (2i-1)(ln z_i + ln(1 - z_(n+1-i)))
EdfStats edf_stats(std::span<const double> data, const std::function<double(double)>& cdf);

struct GofPValues {
    double ks = 1.0;
    double cvm = 1.0;
    double ad = 1.0;
    int refit_failures = 0;
};

/// Parametric bootstrap p-values with refitting: simulate B samples of
/// size n from the fitted model, refit the same family, recompute each
/// statistic; p = (1 + #{boot >= observed}) / (B + 1). Replicates whose
/// refit fails are dropped; more than 10% failures is an error.
GofPValues bootstrap_pvalues(KernelFamily family, const KernelParams& fitted, std::size_t n,
                             const EdfStats& observed, int B, std::uint64_t seed);

/// Fit quality of one tail model at one candidate threshold.
struct GofReport {
    double threshold = 0.0;
    std::size_t n_tail = 0;
    EdfStats stats;
    GofPValues p_values;
};

struct ThresholdScanRow {
    double threshold = 0.0;
    std::size_t n_tail = 0;
    double gpd_shape = 0.0;
    double gpd_scale = 0.0;
    EdfStats stats;
};

struct ThresholdScan {
    std::vector<ThresholdScanRow> rows; // ascending thresholds, strictly decreasing n_tail
    std::size_t selected = 0;           // index of the minimum-AD row (ties: smaller threshold)
};

/// For each admissible candidate u: take exceedances {x - u : x > u},
/// fit a GPD, compute the EDF statistics against the fitted CDF.
/// Candidates leaving fewer than min_tail exceedances are dropped; so
/// are candidates that do not reduce the tail count (duplicates).
/// Throws when no candidate is admissible.
ThresholdScan threshold_scan(std::span<const double> losses, std::span<const double> candidates,
                             std::size_t min_tail = 30);

/// Default candidate grid: empirical quantiles of the losses from 70%
/// to 99% in 1% steps, deduplicated.
std::vector<double> default_threshold_grid(std::span<const double> losses);

struct TailSlope {
    double slope = 0.0;
    double p_lo = 0.0;
    double p_hi = 0.0;     // possibly enlarged when the survival underflowed
    bool p_hi_shrunk = false;
};

/// Least-squares slope of log(survival) against log(x) on a 50-point
/// log-spaced grid between the 1-p_lo and 1-p_hi quantiles (found by
/// inverting the survival function numerically). Requires
/// 0 < p_hi < p_lo <= 1e-3. For a power-law tail the slope estimates
/// -1/xi.
TailSlope tail_slope(const std::function<double(double)>& survival, double p_lo, double p_hi);

} // namespace snpvar
