#pragma once

#include <cstddef>
#include <vector>

#include "snpvar/kernels.hpp"
#include "snpvar/rng.hpp"

namespace snpvar {

/// Coefficients theta_0..theta_K of the polynomial whose square is the
/// transform gradient. theta_0 > 0 pins down the sign (theta and
/// -theta induce the same transform).
struct SnpTheta {
    std::vector<double> theta;

    int truncation() const { return static_cast<int>(theta.size()) - 1; } // K
    int order() const { return 2 * truncation() + 1; }                    // m = 2K + 1
};

/// Coefficients gamma_1..gamma_m of the integrated transform
/// h(x) = sum_i gamma_i x^i. gamma[i] stores gamma_{i+1}.
struct SnpGamma {
    std::vector<double> gamma;

    int order() const { return static_cast<int>(gamma.size()); } // m
};

/// Expand the squared polynomial:
///   gamma_i = (1/i) * sum_{j+k=i-1} theta_j theta_k,  i = 1..2K+1,
/// so that sum_i gamma_i x^i integrates (sum_k theta_k t^k)^2 exactly.
SnpGamma gamma_from_theta(const SnpTheta& theta);

/// h(x) = sum_i gamma_i x^i, Horner evaluation. h(0) = 0.
double h_eval(const SnpGamma& gamma, double x);

/// dh/dx = sum_i i gamma_i x^(i-1); equals the squared polynomial, so
/// it is nonnegative everywhere.
double h_grad(const SnpGamma& gamma, double x);

/// Inverse of the monotone transform: the x >= 0 with h(x) = y.
/// Brackets by doubling from x = 1, then safeguarded Newton/bisection;
/// throws std::runtime_error if 200 iterations do not converge and
/// std::domain_error for y < 0.
double h_inverse(const SnpGamma& gamma, double y);

/// Transformed severity model: F(x) = G(h(x)) with a unit-scale kernel
/// G. The kernel scale (and the lognormal location) is absorbed by
/// theta, so the free parameters are the kernel shape plus theta.
struct SnpModelSpec {
    KernelFamily family; // GPD, LogLogistic, Lognormal, Weibull or Exponential
    double shape;        // kernel shape c; sigma for Lognormal; fixed 1 for Exponential
    SnpTheta theta;
};

void validate(const SnpModelSpec& spec);

/// Log-density at x > 0. Returns -infinity when the transform gradient
/// vanishes exactly at x (a root of the squared polynomial); callers
/// treat that as a zero-likelihood point rather than an error.
double snp_logpdf(const SnpModelSpec& spec, double x);

/// F(x) = G(h(x)) with the unit-scale kernel.
double snp_cdf(const SnpModelSpec& spec, double x);

/// Quantile: maps p through the unit-kernel quantile a~ and then
/// inverts the transform, x = h^{-1}(a~).
double snp_quantile(const SnpModelSpec& spec, double p);

/// n i.i.d. draws by inverse-CDF sampling.
std::vector<double> snp_sample(const SnpModelSpec& spec, RngStream& rng, std::size_t n);

enum class MdaClass { Frechet, Gumbel, WeibullMda };

struct TailIndex {
    MdaClass mda;
    double xi; // 0 for the Gumbel class
};

/// Extreme-value class of the transformed distribution. A degree-m
/// transform multiplies a Frechet kernel's tail exponent by m:
/// GPD kernel -> xi = shape/m, log-logistic -> xi = 1/(shape*m).
/// Lognormal, Weibull and exponential kernels stay in the Gumbel class
/// (unbounded support), reported with xi = 0.
TailIndex snp_tail_index(const SnpModelSpec& spec);

// Lower-level entry points used by the fitting loop; gamma must come
// from gamma_from_theta for the same spec.
double snp_logpdf_given(KernelFamily family, double shape, const SnpGamma& gamma, double x);
double snp_cdf_given(KernelFamily family, double shape, const SnpGamma& gamma, double x);

/// a~(shape, p): the unit-kernel quantile fed into h_inverse.
double snp_kernel_quantile(KernelFamily family, double shape, double p);

} // namespace snpvar
