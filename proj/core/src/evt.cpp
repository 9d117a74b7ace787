#include "snpvar/evt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "snpvar/estimate.hpp"
#include "snpvar/rng.hpp"

namespace snpvar {

EdfStats edf_stats(std::span<const double> data, const std::function<double(double)>& cdf) {
    if (data.empty()) throw std::invalid_argument("edf_stats: data must be nonempty");
    const std::size_t n = data.size();
    std::vector<double> z;
    z.reserve(n);
    for (double x : data) {
        z.push_back(std::clamp(cdf(x), 1e-12, 1.0 - 1e-12));
    }
    std::sort(z.begin(), z.end());

    const double dn = static_cast<double>(n);
    EdfStats out;
    double w2 = 0.0, a2 = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double zi = z[i - 1];
        const double di = static_cast<double>(i);
        out.ks_D = std::max(out.ks_D, std::max(di / dn - zi, zi - (di - 1.0) / dn));
        const double u = zi - (2.0 * di - 1.0) / (2.0 * dn);
        w2 += u * u;
        a2 += (2.0 * di - 1.0) * (std::log(zi) + std::log1p(-z[n - i]));
    }
    out.cvm_W2 = w2 + 1.0 / (12.0 * dn);
    out.ad_A2 = -dn - a2 / dn;
    return out;
}

GofPValues bootstrap_pvalues(KernelFamily family, const KernelParams& fitted, std::size_t n,
                             const EdfStats& observed, int B, std::uint64_t seed) {
    if (B < 100) throw std::domain_error("bootstrap_pvalues: B must be >= 100");
    if (n == 0) throw std::invalid_argument("bootstrap_pvalues: n must be > 0");
    validate(fitted);

    FitOptions fast;
    fast.compute_se = false;
    fast.jitters = 1;
    fast.max_evals = 4000;

    int ge_ks = 0, ge_cvm = 0, ge_ad = 0, failures = 0;
    for (int rep = 0; rep < B; ++rep) {
        RngStream stream(derive_seed(seed, static_cast<std::uint64_t>(rep)));
        std::vector<double> sample = kernel_sample(fitted, stream, n);
        FitResult refit;
        try {
            refit = fit_kernel_mle(family, sample, fast);
        } catch (const std::exception&) {
            ++failures;
            continue;
        }
        const KernelParams params = *refit.kernel;
        EdfStats st = edf_stats(sample, [&](double x) { return kernel_cdf(params, x); });
        if (st.ks_D >= observed.ks_D) ++ge_ks;
        if (st.cvm_W2 >= observed.cvm_W2) ++ge_cvm;
        if (st.ad_A2 >= observed.ad_A2) ++ge_ad;
    }
    if (failures * 10 > B) {
        throw std::runtime_error("bootstrap_pvalues: " + std::to_string(failures) + " of " +
                                 std::to_string(B) + " refits failed");
    }
    const double denom = static_cast<double>(B - failures) + 1.0;
    GofPValues out;
    out.ks = (1.0 + ge_ks) / denom;
    out.cvm = (1.0 + ge_cvm) / denom;
    out.ad = (1.0 + ge_ad) / denom;
    out.refit_failures = failures;
    return out;
}

ThresholdScan threshold_scan(std::span<const double> losses, std::span<const double> candidates,
                             std::size_t min_tail) {
    if (losses.empty()) throw std::invalid_argument("threshold_scan: losses must be nonempty");
    if (candidates.empty()) throw std::invalid_argument("threshold_scan: no candidates");

    std::vector<double> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end());

    FitOptions fast;
    fast.compute_se = false;

    ThresholdScan out;
    std::size_t last_n = 0;
    bool first = true;
    for (double u : sorted) {
        std::vector<double> exceedances;
        for (double x : losses) {
            if (x > u) exceedances.push_back(x - u);
        }
        if (exceedances.size() < min_tail) continue;
        if (!first && exceedances.size() >= last_n) continue; // duplicate candidate
        first = false;
        last_n = exceedances.size();

        FitResult gpd = fit_kernel_mle(KernelFamily::GPD, exceedances, fast);
        const KernelParams params = *gpd.kernel;
        ThresholdScanRow row;
        row.threshold = u;
        row.n_tail = exceedances.size();
        row.gpd_shape = std::get<GpdParams>(params).shape;
        row.gpd_scale = std::get<GpdParams>(params).scale;
        row.stats = edf_stats(exceedances, [&](double x) { return kernel_cdf(params, x); });
        out.rows.push_back(row);
    }
    if (out.rows.empty()) {
        throw std::runtime_error("threshold_scan: no candidate leaves at least " +
                                 std::to_string(min_tail) + " exceedances");
    }
    out.selected = 0;
    for (std::size_t i = 1; i < out.rows.size(); ++i) {
        if (out.rows[i].stats.ad_A2 < out.rows[out.selected].stats.ad_A2) {
            out.selected = i; // strict <: ties keep the smaller threshold
        }
    }
    return out;
}

std::vector<double> default_threshold_grid(std::span<const double> losses) {
    std::vector<double> sorted(losses.begin(), losses.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    std::vector<double> grid;
    for (int pct = 70; pct <= 99; ++pct) {
        std::size_t idx = static_cast<std::size_t>(std::ceil(pct / 100.0 * n));
        idx = std::min(std::max<std::size_t>(idx, 1), n) - 1;
        double q = sorted[idx];
        if (grid.empty() || q > grid.back()) grid.push_back(q);
    }
    return grid;
}

TailSlope tail_slope(const std::function<double(double)>& survival, double p_lo, double p_hi) {
    if (!(p_hi > 0.0 && p_hi < p_lo && p_lo <= 1e-3)) {
        throw std::domain_error("tail_slope: need 0 < p_hi < p_lo <= 1e-3");
    }

    // Invert the (decreasing) survival function by doubling/halving
    // brackets and bisection.
    auto invert = [&](double p) {
        double lo = 1.0, hi = 1.0;
        if (survival(1.0) > p) {
            while (survival(hi) > p) {
                hi *= 2.0;
                if (!std::isfinite(hi)) throw std::runtime_error("tail_slope: bracket overflow");
            }
            lo = hi / 2.0;
        } else {
            while (survival(lo) <= p) {
                lo /= 2.0;
                if (lo < 1e-300) throw std::runtime_error("tail_slope: bracket underflow");
            }
            hi = lo * 2.0;
        }
        for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
            double mid = 0.5 * (lo + hi);
            (survival(mid) > p ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    TailSlope out;
    out.p_lo = p_lo;
    out.p_hi = p_hi;

    constexpr int kPoints = 50;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const double x_lo = invert(p_lo);
        const double x_hi = invert(out.p_hi);
        bool underflow = false;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < kPoints; ++i) {
            double t = static_cast<double>(i) / (kPoints - 1);
            double x = x_lo * std::pow(x_hi / x_lo, t);
            double sv = survival(x);
            if (!(sv > 0.0)) {
                underflow = true;
                break;
            }
            double lx = std::log(x), ls = std::log(sv);
            sx += lx;
            sy += ls;
            sxx += lx * lx;
            sxy += lx * ls;
        }
        if (!underflow) {
            const double dn = kPoints;
            out.slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
            return out;
        }
        out.p_hi *= 10.0; // survival underflowed: shrink the probed tail
        out.p_hi_shrunk = true;
        if (out.p_hi >= p_lo) {
            throw std::runtime_error("tail_slope: survival underflows across the whole range");
        }
    }
    throw std::runtime_error("tail_slope: could not evaluate survival on the grid");
}

} // namespace snpvar
