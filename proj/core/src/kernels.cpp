#include "snpvar/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "snpvar/math.hpp"

namespace snpvar {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

double lbeta(double p, double q) {
    return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

} // namespace

std::string_view family_name(KernelFamily family) {
    switch (family) {
        case KernelFamily::GPD: return "GPD";
        case KernelFamily::LogLogistic: return "LogLGT";
        case KernelFamily::Lognormal: return "LGN";
        case KernelFamily::Weibull: return "WBL";
        case KernelFamily::Exponential: return "EXP";
        case KernelFamily::GB2: return "GB2";
    }
    throw std::logic_error("family_name: unknown family");
}

KernelFamily parse_family(std::string_view token) {
    const std::string t = lower(token);
    if (t == "gpd" || t == "pareto") return KernelFamily::GPD;
    if (t == "loglgt" || t == "loglogistic" || t == "lgt") return KernelFamily::LogLogistic;
    if (t == "lgn" || t == "lognormal") return KernelFamily::Lognormal;
    if (t == "wbl" || t == "weibull") return KernelFamily::Weibull;
    if (t == "exp" || t == "exponential") return KernelFamily::Exponential;
    if (t == "gb2") return KernelFamily::GB2;
    throw std::domain_error("unknown family token: " + std::string(token));
}

KernelFamily family_of(const KernelParams& params) {
    struct Visitor {
        KernelFamily operator()(const GpdParams&) const { return KernelFamily::GPD; }
        KernelFamily operator()(const LogLogisticParams&) const { return KernelFamily::LogLogistic; }
        KernelFamily operator()(const LognormalParams&) const { return KernelFamily::Lognormal; }
        KernelFamily operator()(const WeibullParams&) const { return KernelFamily::Weibull; }
        KernelFamily operator()(const ExponentialParams&) const { return KernelFamily::Exponential; }
        KernelFamily operator()(const Gb2Params&) const { return KernelFamily::GB2; }
    };
    return std::visit(Visitor{}, params);
}

void validate(const KernelParams& params) {
    struct Visitor {
        void operator()(const GpdParams& p) const {
            require(p.shape > 0.0 && std::isfinite(p.shape), "GPD shape must be > 0");
            require(p.scale > 0.0 && std::isfinite(p.scale), "GPD scale must be > 0");
        }
        void operator()(const LogLogisticParams& p) const {
            require(p.shape > 0.0 && std::isfinite(p.shape), "log-logistic shape must be > 0");
            require(p.scale > 0.0 && std::isfinite(p.scale), "log-logistic scale must be > 0");
        }
        void operator()(const LognormalParams& p) const {
            require(std::isfinite(p.mu), "lognormal mu must be finite");
            require(p.sigma > 0.0 && std::isfinite(p.sigma), "lognormal sigma must be > 0");
        }
        void operator()(const WeibullParams& p) const {
            require(p.shape > 0.0 && std::isfinite(p.shape), "Weibull shape must be > 0");
            require(p.rate > 0.0 && std::isfinite(p.rate), "Weibull rate must be > 0");
        }
        void operator()(const ExponentialParams& p) const {
            require(p.rate > 0.0 && std::isfinite(p.rate), "exponential rate must be > 0");
        }
        void operator()(const Gb2Params& p) const {
            require(p.a > 0.0 && std::isfinite(p.a), "GB2 a must be > 0");
            require(p.b > 0.0 && std::isfinite(p.b), "GB2 b must be > 0");
            require(p.p > 0.0 && std::isfinite(p.p), "GB2 p must be > 0");
            require(p.q > 0.0 && std::isfinite(p.q), "GB2 q must be > 0");
        }
    };
    std::visit(Visitor{}, params);
}

double kernel_cdf(const KernelParams& params, double x) {
    validate(params);
    require(x >= 0.0, "kernel_cdf: x must be >= 0");
    if (x == 0.0) return 0.0;

    struct Visitor {
        double x;
        double operator()(const GpdParams& p) const {
            return -std::expm1(-std::log1p(p.shape * x / p.scale) / p.shape);
        }
        double operator()(const LogLogisticParams& p) const {
            // (x/b)^c / (1 + (x/b)^c) as a logistic in log space
            double t = p.shape * (std::log(x) - std::log(p.scale));
            return 1.0 / (1.0 + std::exp(-t));
        }
        double operator()(const LognormalParams& p) const {
            return normal_cdf((std::log(x) - p.mu) / p.sigma);
        }
        double operator()(const WeibullParams& p) const {
            return -std::expm1(-p.rate * std::pow(x, p.shape));
        }
        double operator()(const ExponentialParams& p) const {
            return -std::expm1(-p.rate * x);
        }
        double operator()(const Gb2Params& p) const {
            double t = p.a * (std::log(x) - std::log(p.b));
            double u = 1.0 / (1.0 + std::exp(-t));
            if (u <= 0.0) return 0.0;
            if (u >= 1.0) return 1.0;
            return reg_inc_beta(p.p, p.q, u);
        }
    };
    return std::visit(Visitor{x}, params);
}

double kernel_logpdf(const KernelParams& params, double x) {
    validate(params);
    require(x > 0.0, "kernel_logpdf: x must be > 0");

    struct Visitor {
        double x;
        double operator()(const GpdParams& p) const {
            return -std::log(p.scale) -
                   (1.0 + 1.0 / p.shape) * std::log1p(p.shape * x / p.scale);
        }
        double operator()(const LogLogisticParams& p) const {
            double lx = std::log(x) - std::log(p.scale);
            return std::log(p.shape) - std::log(p.scale) + (p.shape - 1.0) * lx -
                   2.0 * log1pexp(p.shape * lx);
        }
        double operator()(const LognormalParams& p) const {
            double z = (std::log(x) - p.mu) / p.sigma;
            return -std::log(x) - std::log(p.sigma) - 0.5 * kLogTwoPi - 0.5 * z * z;
        }
        double operator()(const WeibullParams& p) const {
            return std::log(p.rate) + std::log(p.shape) + (p.shape - 1.0) * std::log(x) -
                   p.rate * std::pow(x, p.shape);
        }
        double operator()(const ExponentialParams& p) const {
            return std::log(p.rate) - p.rate * x;
        }
        double operator()(const Gb2Params& p) const {
            double lx = std::log(x);
            double lb = std::log(p.b);
            return std::log(p.a) + (p.a * p.p - 1.0) * lx - p.a * p.p * lb -
                   lbeta(p.p, p.q) - (p.p + p.q) * log1pexp(p.a * (lx - lb));
        }
    };
    return std::visit(Visitor{x}, params);
}

double kernel_quantile(const KernelParams& params, double p) {
    validate(params);
    require(p > 0.0 && p < 1.0, "kernel_quantile: p must lie in (0,1)");

    struct Visitor {
        double p;
        double operator()(const GpdParams& k) const {
            return k.scale / k.shape * std::expm1(-k.shape * std::log1p(-p));
        }
        double operator()(const LogLogisticParams& k) const {
            return k.scale * std::exp((std::log(p) - std::log1p(-p)) / k.shape);
        }
        double operator()(const LognormalParams& k) const {
            return std::exp(k.mu + k.sigma * normal_quantile(p));
        }
        double operator()(const WeibullParams& k) const {
            return std::pow(-std::log1p(-p) / k.rate, 1.0 / k.shape);
        }
        double operator()(const ExponentialParams& k) const {
            return -std::log1p(-p) / k.rate;
        }
        double operator()(const Gb2Params& k) const {
            IncBetaInv u = reg_inc_beta_inv(k.p, k.q, p);
            // x = b (u/(1-u))^(1/a); the complement keeps the upper
            // tail accurate.
            return k.b * std::exp((std::log(u.x) - std::log(u.xc)) / k.a);
        }
    };
    return std::visit(Visitor{p}, params);
}

std::vector<double> kernel_sample(const KernelParams& params, RngStream& rng, std::size_t n) {
    validate(params);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(kernel_quantile(params, rng.next_unit()));
    }
    return out;
}

int kernel_param_count(KernelFamily family) {
    switch (family) {
        case KernelFamily::Exponential: return 1;
        case KernelFamily::GB2: return 4;
        default: return 2;
    }
}

void validate(const TruncLognormalParams& params) {
    require(std::isfinite(params.mu), "truncated lognormal mu must be finite");
    require(params.sigma > 0.0 && std::isfinite(params.sigma),
            "truncated lognormal sigma must be > 0");
    require(params.rt > 0.0, "truncated lognormal rt must be > 0");
    require(params.bt > params.rt, "truncated lognormal needs rt < bt");
    double lo = (std::log(params.rt) - params.mu) / params.sigma;
    double hi = (std::log(params.bt) - params.mu) / params.sigma;
    require(normal_cdf_interval(lo, hi) > 0.0,
            "truncated lognormal has no mass on [rt, bt]");
}

namespace {

double trunc_lgn_log_mass(const TruncLognormalParams& p) {
    double lo = (std::log(p.rt) - p.mu) / p.sigma;
    double hi = (std::log(p.bt) - p.mu) / p.sigma;
    return std::log(normal_cdf_interval(lo, hi));
}

} // namespace

double trunc_lgn_logpdf(const TruncLognormalParams& params, double x) {
    validate(params);
    require(x >= params.rt && x <= params.bt,
            "trunc_lgn_logpdf: x outside [rt, bt]");
    double z = (std::log(x) - params.mu) / params.sigma;
    double log_f = -std::log(x) - std::log(params.sigma) - 0.5 * kLogTwoPi - 0.5 * z * z;
    return log_f - trunc_lgn_log_mass(params);
}

double trunc_lgn_cdf(const TruncLognormalParams& params, double x) {
    validate(params);
    if (x <= params.rt) return 0.0;
    if (x >= params.bt) return 1.0;
    double lo = (std::log(params.rt) - params.mu) / params.sigma;
    double z = (std::log(x) - params.mu) / params.sigma;
    return normal_cdf_interval(lo, z) / std::exp(trunc_lgn_log_mass(params));
}

double trunc_lgn_quantile(const TruncLognormalParams& params, double p) {
    validate(params);
    require(p > 0.0 && p < 1.0, "trunc_lgn_quantile: p must lie in (0,1)");
    double flo = normal_cdf((std::log(params.rt) - params.mu) / params.sigma);
    double fhi = normal_cdf((std::log(params.bt) - params.mu) / params.sigma);
    double target = flo + p * (fhi - flo);
    target = std::min(std::max(target, 1e-300), 1.0 - 1e-16);
    double x = std::exp(params.mu + params.sigma * normal_quantile(target));
    return std::min(std::max(x, params.rt), params.bt);
}

} // namespace snpvar
