#include "snpvar/capital.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <thread>

#include "snpvar/math.hpp"
#include "snpvar/optim.hpp"
#include "snpvar/rng.hpp"

namespace snpvar {

double fit_frequency(std::size_t event_count, double years) {
    if (!(years > 0.0)) throw std::domain_error("fit_frequency: years must be > 0");
    return static_cast<double>(event_count) / years;
}

std::pair<TruncLognormalParams, FitResult> fit_body(std::span<const double> body_data,
                                                    double rt, double bt,
                                                    const FitOptions& options) {
    if (!(rt > 0.0) || !(bt > rt)) throw std::domain_error("fit_body: need 0 < rt < bt");
    if (body_data.size() < 10) {
        throw std::invalid_argument("fit_body: need at least 10 body observations");
    }
    for (double x : body_data) {
        if (!(x >= rt && x <= bt) || !std::isfinite(x)) {
            throw std::domain_error("fit_body: observation outside [rt, bt]");
        }
    }

    const std::size_t n = body_data.size();
    const double dn = static_cast<double>(n);
    double s = 0.0;
    for (double x : body_data) s += x;
    s /= dn;

    auto xs = std::make_shared<std::vector<double>>();
    xs->reserve(n);
    double mean_log = 0.0;
    for (double x : body_data) {
        xs->push_back(x / s);
        mean_log += std::log(x / s);
    }
    mean_log /= dn;
    double var_log = 0.0;
    for (double x : *xs) {
        double d = std::log(x) - mean_log;
        var_log += d * d;
    }
    var_log /= dn;
    if (!(var_log > 0.0)) {
        throw std::runtime_error("fit_body: degenerate data (all observations equal)");
    }

    const double rt_s = rt / s;
    const double bt_s = bt / s;
    ObjectiveFn mean_neg = [xs, rt_s, bt_s](const std::vector<double>& p) {
        if (!std::isfinite(p[0]) || std::abs(p[0]) > 60.0) return std::numeric_limits<double>::infinity();
        if (!std::isfinite(p[1]) || std::abs(p[1]) > 60.0) return std::numeric_limits<double>::infinity();
        TruncLognormalParams tp{p[0], std::exp(p[1]), rt_s, bt_s};
        double lo = (std::log(tp.rt) - tp.mu) / tp.sigma;
        double hi = (std::log(tp.bt) - tp.mu) / tp.sigma;
        double mass = normal_cdf_interval(lo, hi);
        if (!(mass > 0.0)) return std::numeric_limits<double>::infinity();
        const double log_mass = std::log(mass);
        double acc = 0.0;
        for (double x : *xs) {
            double z = (std::log(x) - tp.mu) / tp.sigma;
            acc += -std::log(x) - std::log(tp.sigma) - 0.5 * kLogTwoPi - 0.5 * z * z - log_mass;
        }
        return -acc / static_cast<double>(xs->size());
    };

    // start from the untruncated lognormal MLE on logs
    std::vector<double> start{mean_log, 0.5 * std::log(var_log)};
    OptimOptions oo;
    oo.max_evals = options.max_evals;
    oo.grad_tol = options.grad_tol;
    OptimResult r = minimize(mean_neg, start, oo);
    if (!std::isfinite(r.f)) {
        throw std::runtime_error("fit_body: truncated likelihood non-finite at optimum");
    }

    FitResult fit;
    fit.model = ModelId{KernelFamily::Lognormal, -1};
    fit.internal = r.x;
    fit.scale_factor = s;
    fit.n = n;
    fit.converged = r.converged;
    fit.grad_inf_norm = r.grad_inf_norm;
    fit.logL = -dn * r.f - dn * std::log(s);

    auto to_report = [s](const std::vector<double>& p) {
        return std::vector<double>{p[0] + std::log(s), std::exp(p[1])};
    };
    if (options.compute_se) {
        ObjectiveFn total = [&mean_neg, dn](const std::vector<double>& p) {
            return dn * mean_neg(p);
        };
        fit.report = observed_info_report(total, fit.internal, to_report, {"mu", "sigma"});
    } else {
        fit.report.names = {"mu", "sigma"};
        fit.report.estimates = to_report(fit.internal);
    }

    TruncLognormalParams params{fit.report.estimates[0], fit.report.estimates[1], rt, bt};
    validate(params);
    fit.kernel = LognormalParams{params.mu, params.sigma};
    return {params, fit};
}

double var_at(std::span<const double> losses, double p) {
    if (losses.empty()) throw std::invalid_argument("var_at: empty sample");
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("var_at: p must lie in (0,1)");
    const std::size_t n = losses.size();
    // ceil(p*n) with a guard against the product rounding just above
    // an integer
    double t = p * static_cast<double>(n);
    std::size_t k = static_cast<std::size_t>(std::ceil(t - 1e-9 * static_cast<double>(n)));
    k = std::min(std::max<std::size_t>(k, 1), n);
    std::vector<double> tmp(losses.begin(), losses.end());
    std::nth_element(tmp.begin(), tmp.begin() + (k - 1), tmp.end());
    return tmp[k - 1];
}

CapitalResult simulate_aggregate(const SplicedSeverity& severity, const FrequencyFit& freq,
                                 const McOptions& options) {
    if (options.iterations < 1000) {
        throw std::invalid_argument("simulate_aggregate: need at least 1000 iterations");
    }
    if (freq.lambda_body < 0.0 || freq.lambda_tail < 0.0) {
        throw std::domain_error("simulate_aggregate: negative frequency");
    }
    if (freq.lambda_body > 0.0) validate(severity.body);
    if (freq.lambda_tail > 0.0 && !severity.tail.quantile) {
        throw std::invalid_argument("simulate_aggregate: tail model has no quantile");
    }

    const std::size_t iters = options.iterations;
    const double bt = severity.body.bt;
    std::vector<double> annual(iters, 0.0);

    auto one_iteration = [&](std::size_t i) {
        RngStream stream(derive_seed(options.seed, static_cast<std::uint64_t>(i)));
        double sum = 0.0;
        const std::uint64_t n_body = poisson_draw(stream, freq.lambda_body);
        for (std::uint64_t k = 0; k < n_body; ++k) {
            sum += trunc_lgn_quantile(severity.body, stream.next_unit());
        }
        const std::uint64_t n_tail = poisson_draw(stream, freq.lambda_tail);
        for (std::uint64_t k = 0; k < n_tail; ++k) {
            double y = severity.tail.quantile(stream.next_unit());
            if (!std::isfinite(y) || y < 0.0) {
                throw std::runtime_error("simulate_aggregate: tail sampler failed at iteration " +
                                         std::to_string(i));
            }
            sum += bt + y;
        }
        annual[i] = sum;
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < iters; ++i) one_iteration(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        const std::size_t chunk = (iters + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                const std::size_t lo = static_cast<std::size_t>(t) * chunk;
                const std::size_t hi = std::min(iters, lo + chunk);
                try {
                    for (std::size_t i = lo; i < hi; ++i) one_iteration(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& err : errors) {
            if (err) std::rethrow_exception(err);
        }
    }

    CapitalResult out;
    out.iterations = iters;
    out.seed = options.seed;
    out.var_999 = var_at(annual, 0.999);
    double mean = 0.0, mx = 0.0;
    for (double v : annual) {
        mean += v;
        mx = std::max(mx, v);
    }
    out.mean_annual = mean / static_cast<double>(iters);
    out.max_annual = mx;
    if (options.keep_sample) out.annual_losses = std::move(annual);
    return out;
}

} // namespace snpvar
