#include "snpvar/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "snpvar/math.hpp"
#include "snpvar/rng.hpp"

namespace snpvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEulerGamma = 0.57721566490153286060651209;

struct Moments {
    double mean = 0.0;
    double var = 0.0;      // 1/n variance
    double mean_log = 0.0;
    double sd_log = 0.0;   // 1/n
    double median = 0.0;
};

Moments moments(const std::vector<double>& x) {
    Moments m;
    const double n = static_cast<double>(x.size());
    for (double v : x) {
        m.mean += v;
        m.mean_log += std::log(v);
    }
    m.mean /= n;
    m.mean_log /= n;
    double sv = 0.0, sl = 0.0;
    for (double v : x) {
        sv += (v - m.mean) * (v - m.mean);
        double d = std::log(v) - m.mean_log;
        sl += d * d;
    }
    m.var = sv / n;
    m.sd_log = std::sqrt(sl / n);
    std::vector<double> tmp = x;
    std::nth_element(tmp.begin(), tmp.begin() + tmp.size() / 2, tmp.end());
    m.median = tmp[tmp.size() / 2];
    return m;
}

void check_data(std::span<const double> data) {
    if (data.empty()) throw std::invalid_argument("fit: data must be nonempty");
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!(data[i] > 0.0) || !std::isfinite(data[i])) {
            throw std::domain_error("fit: observation " + std::to_string(i) +
                                    " is not a positive finite loss");
        }
    }
}

// Everything the fit loop needs for one model on one (scaled) dataset.
struct Binding {
    ObjectiveFn mean_neg_logL;
    std::function<std::vector<double>(const std::vector<double>&)> to_report;
    std::vector<std::string> names;
    std::function<void(FitResult&, const std::vector<double>&)> attach_model;
};

KernelParams kernel_from_internal(KernelFamily family, const std::vector<double>& p, double s) {
    switch (family) {
        case KernelFamily::GPD:
            return GpdParams{std::exp(p[0]), s * std::exp(p[1])};
        case KernelFamily::LogLogistic:
            return LogLogisticParams{std::exp(p[0]), s * std::exp(p[1])};
        case KernelFamily::Lognormal:
            return LognormalParams{p[0] + std::log(s), std::exp(p[1])};
        case KernelFamily::Weibull: {
            double shape = std::exp(p[0]);
            return WeibullParams{shape, std::exp(p[1]) * std::pow(s, -shape)};
        }
        case KernelFamily::Exponential:
            return ExponentialParams{1.0 / (s * std::exp(p[0]))}; // internal is log scale
        case KernelFamily::GB2:
            return Gb2Params{std::exp(p[0]), s * std::exp(p[1]), std::exp(p[2]), std::exp(p[3])};
    }
    throw std::logic_error("kernel_from_internal: unknown family");
}

SnpModelSpec snp_from_internal(KernelFamily family, int K, const std::vector<double>& p, double s) {
    SnpModelSpec spec;
    spec.family = family;
    const bool pinned = (family == KernelFamily::Exponential);
    spec.shape = pinned ? 1.0 : std::exp(p[0]);
    const std::size_t base = pinned ? 0 : 1;
    spec.theta.theta.resize(K + 1);
    spec.theta.theta[0] = std::exp(p[base]) * std::pow(s, -0.5);
    for (int k = 1; k <= K; ++k) {
        spec.theta.theta[k] = p[base + k] * std::pow(s, -(k + 0.5));
    }
    return spec;
}

Binding kernel_binding(KernelFamily family, std::shared_ptr<const std::vector<double>> xs, double s) {
    Binding b;
    b.mean_neg_logL = [family, xs](const std::vector<double>& p) {
        for (double v : p) {
            if (!std::isfinite(v) || std::abs(v) > 60.0) return kInf;
        }
        KernelParams params = kernel_from_internal(family, p, 1.0);
        double acc = 0.0;
        for (double x : *xs) {
            double l = kernel_logpdf(params, x);
            if (!std::isfinite(l)) return kInf;
            acc += l;
        }
        return -acc / static_cast<double>(xs->size());
    };
    switch (family) {
        case KernelFamily::GPD:
            b.names = {"shape", "scale"};
            b.to_report = [s](const std::vector<double>& p) {
                return std::vector<double>{std::exp(p[0]), s * std::exp(p[1])};
            };
            break;
        case KernelFamily::LogLogistic:
            // Reported as (location, dispersion) of log X: location is
            // the log of the scale, dispersion the inverse shape.
            b.names = {"location", "dispersion"};
            b.to_report = [s](const std::vector<double>& p) {
                return std::vector<double>{p[1] + std::log(s), std::exp(-p[0])};
            };
            break;
        case KernelFamily::Lognormal:
            b.names = {"mu", "sigma"};
            b.to_report = [s](const std::vector<double>& p) {
                return std::vector<double>{p[0] + std::log(s), std::exp(p[1])};
            };
            break;
        case KernelFamily::Weibull:
            b.names = {"shape", "rate"};
            b.to_report = [s](const std::vector<double>& p) {
                double shape = std::exp(p[0]);
                return std::vector<double>{shape, std::exp(p[1]) * std::pow(s, -shape)};
            };
            break;
        case KernelFamily::Exponential:
            b.names = {"scale"};
            b.to_report = [s](const std::vector<double>& p) {
                return std::vector<double>{s * std::exp(p[0])};
            };
            break;
        case KernelFamily::GB2:
            b.names = {"a", "b", "p", "q"};
            b.to_report = [s](const std::vector<double>& p) {
                return std::vector<double>{std::exp(p[0]), s * std::exp(p[1]),
                                           std::exp(p[2]), std::exp(p[3])};
            };
            break;
    }
    b.attach_model = [family, s](FitResult& fit, const std::vector<double>& p) {
        fit.kernel = kernel_from_internal(family, p, s);
    };
    return b;
}

Binding snp_binding(KernelFamily family, int K, std::shared_ptr<const std::vector<double>> xs,
                    double s) {
    const bool pinned = (family == KernelFamily::Exponential);
    Binding b;
    b.mean_neg_logL = [family, K, pinned, xs](const std::vector<double>& p) {
        const std::size_t base = pinned ? 0 : 1;
        if (!pinned && (!std::isfinite(p[0]) || std::abs(p[0]) > 60.0)) return kInf;
        if (!std::isfinite(p[base]) || std::abs(p[base]) > 60.0) return kInf;
        for (int k = 1; k <= K; ++k) {
            if (!std::isfinite(p[base + k]) || std::abs(p[base + k]) > 1e8) return kInf;
        }
        SnpTheta theta;
        theta.theta.resize(K + 1);
        theta.theta[0] = std::exp(p[base]);
        for (int k = 1; k <= K; ++k) theta.theta[k] = p[base + k];
        const SnpGamma gamma = gamma_from_theta(theta);
        const double shape = pinned ? 1.0 : std::exp(p[0]);
        double acc = 0.0;
        for (double x : *xs) {
            double l = snp_logpdf_given(family, shape, gamma, x);
            if (!std::isfinite(l)) return kInf;
            acc += l;
        }
        return -acc / static_cast<double>(xs->size());
    };
    if (!pinned) b.names.push_back("c");
    for (int k = 0; k <= K; ++k) b.names.push_back("theta" + std::to_string(k));
    b.to_report = [family, K, s](const std::vector<double>& p) {
        SnpModelSpec spec = snp_from_internal(family, K, p, s);
        std::vector<double> out;
        if (family != KernelFamily::Exponential) out.push_back(spec.shape);
        out.insert(out.end(), spec.theta.theta.begin(), spec.theta.theta.end());
        return out;
    };
    b.attach_model = [family, K, s](FitResult& fit, const std::vector<double>& p) {
        fit.snp = snp_from_internal(family, K, p, s);
    };
    return b;
}

void attach_se(FitResult& fit, const Binding& binding, std::size_t n) {
    const double dn = static_cast<double>(n);
    ObjectiveFn total = [&binding, dn](const std::vector<double>& p) {
        return dn * binding.mean_neg_logL(p);
    };
    fit.report = observed_info_report(total, fit.internal, binding.to_report, binding.names);
}

struct StartSet {
    std::vector<std::vector<double>> starts;
};

StartSet kernel_starts(KernelFamily family, const Moments& m, const FitOptions& options) {
    StartSet out;
    switch (family) {
        case KernelFamily::GPD: {
            // method-of-moments seed; scaled data have mean 1
            double xi = (m.var > 1.0) ? 0.5 * (1.0 - 1.0 / m.var) : 0.1;
            xi = std::clamp(xi, 0.05, 0.45);
            out.starts.push_back({std::log(xi), std::log(1.0 - xi)});
            out.starts.push_back({std::log(0.5), 0.0});
            out.starts.push_back({std::log(1.2), std::log(0.5)});
            break;
        }
        case KernelFamily::LogLogistic: {
            double c0 = std::clamp(kPi / (std::sqrt(3.0) * std::max(m.sd_log, 1e-6)), 0.05, 50.0);
            out.starts.push_back({std::log(c0), m.mean_log});
            out.starts.push_back({0.0, 0.0});
            break;
        }
        case KernelFamily::Weibull: {
            double c0 = std::clamp(kPi / (std::sqrt(6.0) * std::max(m.sd_log, 1e-6)), 0.02, 50.0);
            double log_rate = -kEulerGamma - c0 * m.mean_log;
            out.starts.push_back({std::log(c0), std::clamp(log_rate, -40.0, 40.0)});
            out.starts.push_back({0.0, 0.0});
            break;
        }
        default:
            break;
    }
    if (!out.starts.empty() && options.jitters > 0) {
        RngStream jrng(derive_seed(options.seed, static_cast<std::uint64_t>(family)));
        const std::vector<double> base = out.starts.front();
        for (int j = 0; j < options.jitters; ++j) {
            std::vector<double> jit = base;
            for (double& v : jit) v += 0.35 * (2.0 * jrng.next_unit() - 1.0);
            out.starts.push_back(std::move(jit));
        }
    }
    return out;
}

FitResult run_starts(const Binding& binding, const ModelId& id,
                     const std::vector<std::vector<double>>& starts, std::size_t n, double s,
                     const FitOptions& options) {
    FitResult best;
    best.model = id;
    best.scale_factor = s;
    best.n = n;
    double best_f = kInf;
    bool any = false;
    for (const auto& start : starts) {
        OptimOptions oo;
        oo.max_evals = options.max_evals;
        oo.grad_tol = options.grad_tol;
        OptimResult r = minimize(binding.mean_neg_logL, start, oo);
        if (!std::isfinite(r.f)) continue;
        if (!any || r.f < best_f) {
            any = true;
            best_f = r.f;
            best.internal = r.x;
            best.converged = r.converged;
            best.grad_inf_norm = r.grad_inf_norm;
        }
    }
    if (!any) {
        throw std::runtime_error("fit " + model_name(id) +
                                 ": likelihood non-finite at every start (" +
                                 std::to_string(starts.size()) + " starts, n=" +
                                 std::to_string(n) + ")");
    }
    const double dn = static_cast<double>(n);
    best.logL = -dn * best_f - dn * std::log(s);
    best.report.names = binding.names;
    best.report.estimates = binding.to_report(best.internal);
    binding.attach_model(best, best.internal);
    return best;
}

} // namespace

std::string model_name(const ModelId& id) {
    if (!id.is_snp()) return std::string(family_name(id.family));
    const char* kernel = "";
    switch (id.family) {
        case KernelFamily::GPD: kernel = "GPD"; break;
        case KernelFamily::LogLogistic: kernel = "LGT"; break;
        case KernelFamily::Lognormal: kernel = "LGN"; break;
        case KernelFamily::Weibull: kernel = "WBL"; break;
        case KernelFamily::Exponential: kernel = "EXP"; break;
        case KernelFamily::GB2:
            throw std::domain_error("GB2 has no transformed variant");
    }
    return "SNP" + std::string(kernel) + std::to_string(id.K) + "p";
}

int model_param_count(const ModelId& id) {
    if (!id.is_snp()) return kernel_param_count(id.family);
    return id.K + (id.family == KernelFamily::Exponential ? 1 : 2);
}

FitResult fit_kernel_mle(KernelFamily family, std::span<const double> data,
                         const FitOptions& options) {
    check_data(data);
    const std::size_t n = data.size();
    const double dn = static_cast<double>(n);

    double s = 0.0;
    for (double x : data) s += x;
    s /= dn;

    auto xs = std::make_shared<std::vector<double>>();
    xs->reserve(n);
    for (double x : data) xs->push_back(x / s);
    const Moments m = moments(*xs);

    const ModelId id{family, -1};
    Binding binding = kernel_binding(family, xs, s);

    FitResult fit;
    if (family == KernelFamily::Exponential) {
        fit.model = id;
        fit.scale_factor = s;
        fit.n = n;
        fit.internal = {std::log(m.mean)}; // closed form: scale = sample mean
        fit.converged = true;
        fit.logL = -dn * binding.mean_neg_logL(fit.internal) - dn * std::log(s);
        fit.report.names = binding.names;
        fit.report.estimates = binding.to_report(fit.internal);
        binding.attach_model(fit, fit.internal);
    } else if (family == KernelFamily::Lognormal) {
        if (!(m.sd_log > 0.0)) {
            throw std::runtime_error("fit LGN: degenerate data (zero variance on logs)");
        }
        fit.model = id;
        fit.scale_factor = s;
        fit.n = n;
        fit.internal = {m.mean_log, std::log(m.sd_log)};
        fit.converged = true;
        fit.logL = -dn * binding.mean_neg_logL(fit.internal) - dn * std::log(s);
        fit.report.names = binding.names;
        fit.report.estimates = binding.to_report(fit.internal);
        binding.attach_model(fit, fit.internal);
    } else if (family == KernelFamily::GB2) {
        std::vector<std::vector<double>> starts;
        try {
            FitOptions fast = options;
            fast.compute_se = false;
            fast.jitters = 1;
            FitResult lgt = fit_kernel_mle(KernelFamily::LogLogistic, data, fast);
            // GB2 nests the log-logistic at p = q = 1
            starts.push_back({lgt.internal[0], lgt.internal[1], 0.0, 0.0});
        } catch (const std::exception&) {
            // fall through to generic starts
        }
        starts.push_back({0.0, std::log(std::max(m.median, 1e-8)), 0.0, 0.0});
        starts.push_back({std::log(2.0), std::log(std::max(m.median, 1e-8)),
                          std::log(0.5), std::log(0.5)});
        RngStream jrng(derive_seed(options.seed, static_cast<std::uint64_t>(family)));
        const std::vector<double> base = starts.front();
        for (int j = 0; j < options.jitters; ++j) {
            std::vector<double> jit = base;
            for (double& v : jit) v += 0.35 * (2.0 * jrng.next_unit() - 1.0);
            starts.push_back(std::move(jit));
        }
        fit = run_starts(binding, id, starts, n, s, options);
    } else {
        StartSet ss = kernel_starts(family, m, options);
        fit = run_starts(binding, id, ss.starts, n, s, options);
    }

    if (options.compute_se) attach_se(fit, binding, n);
    return fit;
}

namespace {

// Map a fitted kernel (internal coordinates, scaled data) onto the
// equivalent transformed model with theta_1..K = 0.
std::vector<double> warm_from_kernel(KernelFamily family, int K,
                                     const std::vector<double>& kp) {
    std::vector<double> start;
    switch (family) {
        case KernelFamily::GPD:
        case KernelFamily::LogLogistic:
            start = {kp[0], -0.5 * kp[1]}; // log c, log theta0 = -log(b)/2
            break;
        case KernelFamily::Weibull:
            // rate b = theta0^(2c)  =>  log theta0 = log(b)/(2c)
            start = {kp[0], 0.5 * kp[1] / std::exp(kp[0])};
            break;
        case KernelFamily::Lognormal:
            // mu = -log(theta0^2)   =>  log theta0 = -mu/2; c = sigma
            start = {kp[1], -0.5 * kp[0]};
            break;
        case KernelFamily::Exponential:
            start = {-0.5 * kp[0]}; // rate = theta0^2 = 1/scale
            break;
        case KernelFamily::GB2:
            throw std::domain_error("GB2 has no transformed variant");
    }
    start.resize(start.size() + K, 0.0);
    return start;
}

} // namespace

FitResult fit_snp_mle(KernelFamily family, int K, std::span<const double> data,
                      const FitOptions& options, const FitResult* warm_prev) {
    if (family == KernelFamily::GB2) {
        throw std::domain_error("fit_snp_mle: GB2 is not a transform kernel");
    }
    if (K < 0) throw std::domain_error("fit_snp_mle: K must be >= 0");
    check_data(data);
    const std::size_t n = data.size();
    const double dn = static_cast<double>(n);

    double s = 0.0;
    for (double x : data) s += x;
    s /= dn;

    auto xs = std::make_shared<std::vector<double>>();
    xs->reserve(n);
    for (double x : data) xs->push_back(x / s);

    FitOptions inner = options;
    inner.compute_se = false;

    const FitResult kernel_fit = fit_kernel_mle(family, data, inner);

    std::vector<std::vector<double>> starts;
    const std::vector<double> warm = warm_from_kernel(family, K, kernel_fit.internal);
    starts.push_back(warm);

    const std::size_t base = (family == KernelFamily::Exponential) ? 0 : 1;
    if (K > 0) {
        std::vector<double> prev;
        if (warm_prev != nullptr && warm_prev->model.is_snp() &&
            warm_prev->model.family == family && warm_prev->model.K == K - 1 &&
            !warm_prev->internal.empty()) {
            prev = warm_prev->internal;
        } else {
            prev = fit_snp_mle(family, K - 1, data, inner).internal;
        }
        for (double pad : {1e-3, -1e-3, 0.25, -0.25}) {
            std::vector<double> st = prev;
            st.push_back(pad);
            starts.push_back(std::move(st));
        }
        // probe a nontrivial transform directly from the kernel warm start
        for (double tip : {0.5, -0.5}) {
            std::vector<double> st = warm;
            st.back() = tip;
            starts.push_back(std::move(st));
        }
    }

    RngStream jrng(derive_seed(options.seed, 0x534e50u + 16 * static_cast<std::uint64_t>(family) + K));
    for (int j = 0; j < options.jitters; ++j) {
        std::vector<double> jit = warm;
        for (std::size_t i = 0; i < jit.size(); ++i) {
            // wider spread on the polynomial coefficients than on the
            // log-reparameterized positives
            const double spread = (i <= base) ? 0.6 : 2.0;
            jit[i] += spread * (2.0 * jrng.next_unit() - 1.0);
        }
        starts.push_back(std::move(jit));
    }

    const ModelId id{family, K};
    Binding binding = snp_binding(family, K, xs, s);
    FitResult fit = run_starts(binding, id, starts, n, s, options);

    if (fit.logL < kernel_fit.logL - 1e-6) {
        // nesting guard: the kernel warm start evaluates to the kernel
        // optimum, so falling below it means the optimizer diverged
        throw std::runtime_error("fit " + model_name(id) + ": logL " +
                                 std::to_string(fit.logL) + " below kernel logL " +
                                 std::to_string(kernel_fit.logL));
    }

    if (options.compute_se) attach_se(fit, binding, n);
    return fit;
}

ParamReport observed_info_report(
    const ObjectiveFn& total_neg_logL, const std::vector<double>& internal,
    const std::function<std::vector<double>(const std::vector<double>&)>& to_report,
    std::vector<std::string> names) {
    ParamReport report;
    report.names = std::move(names);
    report.estimates = to_report(internal);

    const auto info = fd_hessian(total_neg_logL, internal, 1e-4);
    std::vector<std::vector<double>> cov;
    if (!spd_inverse(info, cov)) {
        report.se_available = false;
        return report;
    }

    // delta method: J = d report / d internal
    const std::size_t k = internal.size();
    const std::size_t r = report.estimates.size();
    std::vector<std::vector<double>> J(r, std::vector<double>(k, 0.0));
    std::vector<double> xp = internal;
    for (std::size_t i = 0; i < k; ++i) {
        const double h = 1e-6 * std::max(std::abs(internal[i]), 1.0);
        xp[i] = internal[i] + h;
        std::vector<double> up = to_report(xp);
        xp[i] = internal[i] - h;
        std::vector<double> dn = to_report(xp);
        xp[i] = internal[i];
        for (std::size_t j = 0; j < r; ++j) J[j][i] = (up[j] - dn[j]) / (2.0 * h);
    }

    report.se.assign(r, 0.0);
    report.t_stats.assign(r, 0.0);
    for (std::size_t j = 0; j < r; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t l = 0; l < k; ++l) acc += J[j][i] * cov[i][l] * J[j][l];
        }
        if (!(acc > 0.0) || !std::isfinite(acc)) {
            report.se.clear();
            report.t_stats.clear();
            report.se_available = false;
            return report;
        }
        report.se[j] = std::sqrt(acc);
        report.t_stats[j] = report.estimates[j] / report.se[j];
    }
    report.se_available = true;
    return report;
}

ParamReport standard_errors(const FitResult& fit, std::span<const double> data) {
    if (!fit.converged) {
        throw std::invalid_argument("standard_errors: fit did not converge");
    }
    check_data(data);
    const double s = fit.scale_factor;
    auto xs = std::make_shared<std::vector<double>>();
    xs->reserve(data.size());
    for (double x : data) xs->push_back(x / s);

    Binding binding = fit.model.is_snp()
                          ? snp_binding(fit.model.family, fit.model.K, xs, s)
                          : kernel_binding(fit.model.family, xs, s);
    const double dn = static_cast<double>(data.size());
    ObjectiveFn total = [&binding, dn](const std::vector<double>& p) {
        return dn * binding.mean_neg_logL(p);
    };
    return observed_info_report(total, fit.internal, binding.to_report, binding.names);
}

LrTest lr_test(double logL_restricted, double logL_full, int df, double alpha) {
    if (df < 1) throw std::domain_error("lr_test: df must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("lr_test: alpha must lie in (0,1)");
    double stat = 2.0 * (logL_full - logL_restricted);
    if (stat < -2e-6) {
        throw std::invalid_argument("lr_test: nesting violation, statistic " +
                                    std::to_string(stat));
    }
    LrTest out;
    out.statistic = std::max(0.0, stat);
    out.df = df;
    out.alpha = alpha;
    out.critical = chi_squared_quantile(static_cast<double>(df), 1.0 - alpha);
    out.reject = out.statistic > out.critical;
    return out;
}

LadderResult fit_ladder(KernelFamily family, std::span<const double> data, int Kmax,
                        double alpha, const FitOptions& options) {
    if (Kmax < 0) throw std::domain_error("fit_ladder: Kmax must be >= 0");
    LadderResult out;
    out.alpha = alpha;
    out.fits.reserve(static_cast<std::size_t>(Kmax) + 1); // keep warm-start pointers stable

    const FitResult* prev = nullptr;
    for (int K = 0; K <= Kmax; ++K) {
        try {
            FitResult fit = fit_snp_mle(family, K, data, options, prev);
            out.fits.push_back(std::move(fit));
            prev = &out.fits.back();
        } catch (const std::exception& e) {
            FitResult failed;
            failed.model = ModelId{family, K};
            failed.converged = false;
            failed.message = e.what();
            failed.n = data.size();
            out.fits.push_back(std::move(failed));
            out.annotations.push_back("K=" + std::to_string(K) + ": " + e.what());
        }
    }

    for (int K = 1; K <= Kmax; ++K) {
        const FitResult& lo = out.fits[K - 1];
        const FitResult& hi = out.fits[K];
        if (lo.internal.empty() || hi.internal.empty()) {
            out.steps.push_back(LrTest{0.0, 0.0, 1, alpha, false});
            continue;
        }
        LrTest step = lr_test(lo.logL, hi.logL, 1, alpha);
        if (step.reject) out.selected_K = K;
        out.steps.push_back(step);
    }
    return out;
}

double model_quantile(const FitResult& fit, double p) {
    if (fit.snp) return snp_quantile(*fit.snp, p);
    if (fit.kernel) return kernel_quantile(*fit.kernel, p);
    throw std::invalid_argument("model_quantile: fit carries no model");
}

double model_cdf(const FitResult& fit, double x) {
    if (fit.snp) return snp_cdf(*fit.snp, x);
    if (fit.kernel) return kernel_cdf(*fit.kernel, x);
    throw std::invalid_argument("model_cdf: fit carries no model");
}

double model_logpdf(const FitResult& fit, double x) {
    if (fit.snp) return snp_logpdf(*fit.snp, x);
    if (fit.kernel) return kernel_logpdf(*fit.kernel, x);
    throw std::invalid_argument("model_logpdf: fit carries no model");
}

} // namespace snpvar
