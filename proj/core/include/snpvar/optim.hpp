#pragma once

#include <functional>
#include <vector>

namespace snpvar {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

struct OptimOptions {
    int max_evals = 10000;
    double grad_tol = 1e-7;     // infinity norm of the central-difference gradient
    double simplex_step = 0.25; // initial simplex edge length
};

struct OptimResult {
    std::vector<double> x;
    double f = 0.0;
    int evals = 0;
    bool converged = false;
    double grad_inf_norm = 0.0;
};

/// Local minimizer for smooth objectives without analytic gradients:
/// a Nelder-Mead phase to escape poor starts, then BFGS with
/// central-difference gradients until the gradient norm drops below
/// grad_tol or the evaluation budget runs out. Non-finite objective
/// values are treated as +infinity, so likelihoods may signal
/// impossible parameters that way. Returns the best point seen.
OptimResult minimize(const ObjectiveFn& f, std::vector<double> x0,
                     const OptimOptions& options = {});

/// Central-difference gradient with per-coordinate steps
/// h_i = step_scale * max(|x_i|, 1).
std::vector<double> fd_gradient(const ObjectiveFn& f, const std::vector<double>& x,
                                double step_scale = 1e-6);

/// Central-difference Hessian (symmetric), same step rule.
std::vector<std::vector<double>> fd_hessian(const ObjectiveFn& f, const std::vector<double>& x,
                                            double step_scale = 1e-4);

/// Inverse of a symmetric positive-definite matrix via Cholesky;
/// returns false (output untouched) when the matrix is not PD.
bool spd_inverse(const std::vector<std::vector<double>>& m,
                 std::vector<std::vector<double>>& inverse);

} // namespace snpvar
