#include "snpvar/snp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "snpvar/math.hpp"

namespace snpvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_snp_family(KernelFamily family) {
    if (family == KernelFamily::GB2) {
        throw std::domain_error("GB2 is not a transform kernel");
    }
}

} // namespace

void validate(const SnpModelSpec& spec) {
    check_snp_family(spec.family);
    if (spec.theta.theta.empty()) {
        throw std::domain_error("SnpModelSpec: theta must be nonempty");
    }
    if (!(spec.theta.theta[0] > 0.0)) {
        throw std::domain_error("SnpModelSpec: theta_0 must be > 0");
    }
    if (!(spec.shape > 0.0) || !std::isfinite(spec.shape)) {
        throw std::domain_error("SnpModelSpec: kernel shape must be > 0");
    }
    if (spec.family == KernelFamily::Exponential && spec.shape != 1.0) {
        throw std::domain_error("SnpModelSpec: exponential kernel fixes shape = 1");
    }
}

SnpGamma gamma_from_theta(const SnpTheta& theta) {
    const auto& t = theta.theta;
    const int kp1 = static_cast<int>(t.size());
    if (kp1 == 0) throw std::domain_error("gamma_from_theta: empty theta");
    const int m = 2 * kp1 - 1;
    SnpGamma out;
    out.gamma.assign(m, 0.0);
    for (int j = 0; j < kp1; ++j) {
        for (int k = 0; k < kp1; ++k) {
            out.gamma[j + k] += t[j] * t[k];
        }
    }
    for (int i = 0; i < m; ++i) {
        out.gamma[i] /= static_cast<double>(i + 1);
    }
    return out;
}

double h_eval(const SnpGamma& gamma, double x) {
    double acc = 0.0;
    for (auto it = gamma.gamma.rbegin(); it != gamma.gamma.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc * x;
}

double h_grad(const SnpGamma& gamma, double x) {
    const int m = gamma.order();
    double acc = 0.0;
    for (int i = m - 1; i >= 0; --i) {
        acc = acc * x + (i + 1) * gamma.gamma[i];
    }
    return acc;
}

double h_inverse(const SnpGamma& gamma, double y) {
    if (y < 0.0) throw std::domain_error("h_inverse: y must be >= 0");
    if (y == 0.0) return 0.0;

    // Bracket the root by doubling from 1.
    double lo = 0.0;
    double hi = 1.0;
    int iter = 0;
    while (h_eval(gamma, hi) < y) {
        lo = hi;
        hi *= 2.0;
        if (++iter > 200 || !std::isfinite(hi)) {
            throw std::runtime_error("h_inverse: failed to bracket target");
        }
    }

    // Safeguarded Newton: fall back to bisection whenever the Newton
    // step leaves the bracket or the gradient is too small.
    double x = 0.5 * (lo + hi);
    const double f_tol = std::max(1e-12, 1e-12 * y);
    for (iter = 0; iter < 200; ++iter) {
        double f = h_eval(gamma, x) - y;
        if (std::abs(f) <= f_tol && (hi - lo) <= 1e-12 * std::max(1.0, hi)) {
            return x;
        }
        if (f > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        double d = h_grad(gamma, x);
        double step = (d > 0.0) ? x - f / d : kInf;
        if (d > 0.0 && step > lo && step < hi && step != x) {
            x = step;
        } else {
            x = 0.5 * (lo + hi);
        }
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
            return 0.5 * (lo + hi);
        }
    }
    throw std::runtime_error("h_inverse: no convergence after 200 iterations");
}

double snp_logpdf_given(KernelFamily family, double shape, const SnpGamma& gamma, double x) {
    if (!(x > 0.0)) throw std::domain_error("snp_logpdf: x must be > 0");
    const double grad = h_grad(gamma, x);
    if (!(grad > 0.0)) return -kInf; // root of the squared polynomial
    const double h = h_eval(gamma, x);
    const double log_grad = std::log(grad);
    const double log_h = std::log(h);
    const double c = shape;

    switch (family) {
        case KernelFamily::GPD:
            return log_grad - (1.0 + 1.0 / c) * std::log1p(c * h);
        case KernelFamily::LogLogistic:
            return std::log(c) + log_grad + (c - 1.0) * log_h - 2.0 * log1pexp(c * log_h);
        case KernelFamily::Lognormal:
            return -0.5 * std::log(2.0 * kPi * c * c) - log_h -
                   log_h * log_h / (2.0 * c * c) + log_grad;
        case KernelFamily::Weibull:
        case KernelFamily::Exponential: {
            const double cc = (family == KernelFamily::Exponential) ? 1.0 : c;
            return std::log(cc) + log_grad + (cc - 1.0) * log_h - std::exp(cc * log_h);
        }
        case KernelFamily::GB2:
            break;
    }
    throw std::domain_error("snp_logpdf: unsupported kernel family");
}

double snp_cdf_given(KernelFamily family, double shape, const SnpGamma& gamma, double x) {
    if (x < 0.0) throw std::domain_error("snp_cdf: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double h = h_eval(gamma, x);
    const double c = shape;
    switch (family) {
        case KernelFamily::GPD:
            return -std::expm1(-std::log1p(c * h) / c);
        case KernelFamily::LogLogistic: {
            if (h <= 0.0) return 0.0;
            return 1.0 / (1.0 + std::exp(-c * std::log(h)));
        }
        case KernelFamily::Lognormal: {
            if (h <= 0.0) return 0.0;
            return normal_cdf(std::log(h) / c);
        }
        case KernelFamily::Weibull: {
            if (h <= 0.0) return 0.0;
            return -std::expm1(-std::pow(h, c));
        }
        case KernelFamily::Exponential:
            return -std::expm1(-h);
        case KernelFamily::GB2:
            break;
    }
    throw std::domain_error("snp_cdf: unsupported kernel family");
}

double snp_kernel_quantile(KernelFamily family, double shape, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("snp_quantile: p must lie in (0,1)");
    const double c = shape;
    const double log_a = std::log1p(-p); // a = 1 - p
    switch (family) {
        case KernelFamily::GPD:
            return std::expm1(-c * log_a) / c;
        case KernelFamily::LogLogistic:
            return std::exp((std::log(p) - log_a) / c);
        case KernelFamily::Weibull:
            return std::pow(-log_a, 1.0 / c);
        case KernelFamily::Exponential:
            return -log_a;
        case KernelFamily::Lognormal:
            return std::exp(c * normal_quantile(p));
        case KernelFamily::GB2:
            break;
    }
    throw std::domain_error("snp_quantile: unsupported kernel family");
}

double snp_logpdf(const SnpModelSpec& spec, double x) {
    validate(spec);
    return snp_logpdf_given(spec.family, spec.shape, gamma_from_theta(spec.theta), x);
}

double snp_cdf(const SnpModelSpec& spec, double x) {
    validate(spec);
    return snp_cdf_given(spec.family, spec.shape, gamma_from_theta(spec.theta), x);
}

double snp_quantile(const SnpModelSpec& spec, double p) {
    validate(spec);
    const double target = snp_kernel_quantile(spec.family, spec.shape, p);
    return h_inverse(gamma_from_theta(spec.theta), target);
}

std::vector<double> snp_sample(const SnpModelSpec& spec, RngStream& rng, std::size_t n) {
    validate(spec);
    const SnpGamma gamma = gamma_from_theta(spec.theta);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(h_inverse(gamma, snp_kernel_quantile(spec.family, spec.shape, rng.next_unit())));
    }
    return out;
}

TailIndex snp_tail_index(const SnpModelSpec& spec) {
    validate(spec);
    const double m = static_cast<double>(spec.theta.order());
    switch (spec.family) {
        case KernelFamily::GPD:
            return {MdaClass::Frechet, spec.shape / m};
        case KernelFamily::LogLogistic:
            return {MdaClass::Frechet, 1.0 / (spec.shape * m)};
        case KernelFamily::Lognormal:
        case KernelFamily::Weibull:
        case KernelFamily::Exponential:
            // Unbounded-support kernels in the Gumbel class for maxima;
            // the transform preserves the class.
            return {MdaClass::Gumbel, 0.0};
        case KernelFamily::GB2:
            break;
    }
    throw std::domain_error("snp_tail_index: unsupported kernel family");
}

} // namespace snpvar
