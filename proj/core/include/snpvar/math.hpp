#pragma once

#include <cmath>

namespace snpvar {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLogTwoPi = 1.8378770664093454835606594728112353;
inline constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110453;

/// Standard normal CDF via erfc; accurate in both tails.
double normal_cdf(double x);

/// Phi(b) - Phi(a) for a <= b, computed on the complementary side when
/// both endpoints sit in the same tail to avoid cancellation.
double normal_cdf_interval(double a, double b);

/// Standard normal quantile. Rational approximation refined with one
/// Halley step against the erfc-based CDF; absolute error in
/// probability is well below 1e-9 across (0,1).
double normal_quantile(double p);

/// log(1 + exp(t)) without overflow.
inline double log1pexp(double t) {
    if (t <= -37.0) return std::exp(t);
    if (t <= 18.0) return std::log1p(std::exp(t));
    if (t <= 33.3) return t + std::exp(-t);
    return t;
}

/// Regularized incomplete beta I_x(a,b).
double reg_inc_beta(double a, double b, double x);

/// Inverse of the regularized incomplete beta: returns (x, 1-x).
struct IncBetaInv {
    double x;
    double xc;
};
IncBetaInv reg_inc_beta_inv(double a, double b, double p);

/// Chi-squared quantile, used for likelihood-ratio critical values.
double chi_squared_quantile(double df, double p);

} // namespace snpvar
