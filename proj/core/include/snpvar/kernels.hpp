#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "snpvar/rng.hpp"

namespace snpvar {

/// The six parametric severity families. Every operation taking a
/// family (or a KernelParams alternative) handles all six.
enum class KernelFamily { GPD, LogLogistic, Lognormal, Weibull, Exponential, GB2 };

/// Display names used in reports and CSV output:
/// GPD, LogLGT, LGN, WBL, EXP, GB2.
std::string_view family_name(KernelFamily family);

/// Parse a family token ("gpd", "loglgt", "lgn", "wbl", "exp", "gb2",
/// case-insensitive, display names also accepted).
KernelFamily parse_family(std::string_view token);

// G(v) = 1 - (1 + shape * v / scale)^(-1/shape)
struct GpdParams {
    double shape; // > 0
    double scale; // > 0
};

// G(v) = (v/scale)^shape / (1 + (v/scale)^shape)
struct LogLogisticParams {
    double shape; // > 0
    double scale; // > 0
};

struct LognormalParams {
    double mu;
    double sigma; // > 0
};

// G(v) = 1 - exp(-rate * v^shape); the rate multiplies v^shape.
struct WeibullParams {
    double shape; // > 0
    double rate;  // > 0
};

// Weibull with shape = 1.
struct ExponentialParams {
    double rate; // > 0
};

// f(x) = a x^(ap-1) / (b^(ap) B(p,q) (1 + (x/b)^a)^(p+q))
struct Gb2Params {
    double a; // > 0
    double b; // > 0
    double p; // > 0
    double q; // > 0
};

using KernelParams = std::variant<GpdParams, LogLogisticParams, LognormalParams,
                                  WeibullParams, ExponentialParams, Gb2Params>;

KernelFamily family_of(const KernelParams& params);

/// Throws std::domain_error when a positivity constraint is violated.
void validate(const KernelParams& params);

/// G(x) for x >= 0. Nondecreasing, G(0) = 0 for every family.
double kernel_cdf(const KernelParams& params, double x);

/// log g(x) for x > 0, evaluated in log space throughout.
double kernel_logpdf(const KernelParams& params, double x);

/// Inverse CDF for p in (0,1). Closed form except GB2, which inverts
/// the regularized incomplete beta.
double kernel_quantile(const KernelParams& params, double p);

/// n i.i.d. draws by inverse-CDF sampling from the given stream.
std::vector<double> kernel_sample(const KernelParams& params, RngStream& rng, std::size_t n);

/// Number of free parameters in the family (EXP 1, GB2 4, others 2).
int kernel_param_count(KernelFamily family);

/// Lognormal restricted to [rt, bt]; the body piece of a spliced
/// severity. rt is the reporting threshold, bt the body-tail cutoff.
struct TruncLognormalParams {
    double mu;
    double sigma; // > 0
    double rt;    // > 0
    double bt;    // > rt
};

void validate(const TruncLognormalParams& params);

/// Log-density of the truncated lognormal; x must lie in [rt, bt].
double trunc_lgn_logpdf(const TruncLognormalParams& params, double x);

/// CDF of the truncated lognormal (0 below rt, 1 above bt).
double trunc_lgn_cdf(const TruncLognormalParams& params, double x);

/// Inverse CDF for p in (0,1); maps into [rt, bt].
double trunc_lgn_quantile(const TruncLognormalParams& params, double p);

} // namespace snpvar
