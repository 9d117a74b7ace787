#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snpvar/kernels.hpp"
#include "snpvar/optim.hpp"
#include "snpvar/snp.hpp"

namespace snpvar {

/// Identifies a fitted model: a bare kernel (K = -1) or a transformed
/// model with truncation point K >= 0.
struct ModelId {
    KernelFamily family;
    int K = -1;

    bool is_snp() const { return K >= 0; }
};

/// "GPD", "LGN", ... for kernels; "SNPGPD3p", "SNPLGT2p", ... for
/// transformed models (the suffix counts the additional parameters).
std::string model_name(const ModelId& id);

/// Free parameters: kernel counts, or K+2 for transformed models
/// (K+1 when the kernel is exponential, whose shape is pinned).
int model_param_count(const ModelId& id);

/// Estimates, standard errors and t-statistics in the reporting
/// parameterization (original data units). se/t_stats are empty when
/// the observed information was not positive definite.
struct ParamReport {
    std::vector<std::string> names;
    std::vector<double> estimates;
    std::vector<double> se;
    std::vector<double> t_stats;
    bool se_available = false;
};

struct FitResult {
    ModelId model{KernelFamily::GPD, -1};
    std::vector<double> internal; // optimizer coordinates, scaled-data units
    double scale_factor = 1.0;    // data were divided by this before fitting
    double logL = 0.0;            // maximized log-likelihood, original units
    std::size_t n = 0;
    bool converged = false;
    double grad_inf_norm = 0.0;
    ParamReport report;
    std::optional<KernelParams> kernel; // fitted model, original units
    std::optional<SnpModelSpec> snp;    // fitted model, original units
    std::string message;
};

struct FitOptions {
    int max_evals = 10000; // per start
    double grad_tol = 1e-7;
    std::uint64_t seed = 0x51a7e5u; // jittered starts
    int jitters = 3;
    bool compute_se = true;
};

/// Maximum-likelihood fit of a parametric kernel. Exponential and
/// lognormal use their closed forms; the rest run multi-start
/// Nelder-Mead + BFGS on log-reparameterized positives. Data are
/// rescaled by their mean internally; reported logL and parameters are
/// mapped back to original units.
FitResult fit_kernel_mle(KernelFamily family, std::span<const double> data,
                         const FitOptions& options = {});

/// Maximum-likelihood fit of the transformed model with truncation K.
/// Starts: (i) the kernel fit with theta_1..K = 0, (ii) the K-1 fit
/// padded with +-1e-3 (computed recursively unless warm_prev is
/// given), (iii) seeded jitters of (i). Best final logL wins; the
/// result never falls below the kernel logL by more than 1e-6.
FitResult fit_snp_mle(KernelFamily family, int K, std::span<const double> data,
                      const FitOptions& options = {},
                      const FitResult* warm_prev = nullptr);

/// Recompute (se, t) for a converged fit from the observed information
/// (central-difference Hessian, step 1e-4 * max(|p|,1)), delta-mapped
/// into the reporting parameterization.
ParamReport standard_errors(const FitResult& fit, std::span<const double> data);

/// Observed-information report for an arbitrary smooth negative
/// log-likelihood in internal coordinates; shared by the body fit.
ParamReport observed_info_report(
    const ObjectiveFn& total_neg_logL, const std::vector<double>& internal,
    const std::function<std::vector<double>(const std::vector<double>&)>& to_report,
    std::vector<std::string> names);

struct LrTest {
    double statistic = 0.0;
    double critical = 0.0;
    int df = 1;
    double alpha = 0.10;
    bool reject = false;
};

/// Nested likelihood-ratio test: 2(logL_full - logL_restricted)
/// against the chi-squared critical value at the given level. A
/// statistic below -2e-6 is a nesting violation and throws.
LrTest lr_test(double logL_restricted, double logL_full, int df, double alpha = 0.10);

struct LadderResult {
    std::vector<FitResult> fits; // K = 0..Kmax (failed rungs flagged, not dropped)
    std::vector<LrTest> steps;   // step K-1 -> K for K = 1..Kmax, df = 1
    int selected_K = 0;          // largest K whose step rejects at alpha
    double alpha = 0.10;
    std::vector<std::string> annotations; // convergence failures by rung
};

/// Fit K = 0..Kmax sequentially with warm starts and select the
/// truncation by stepwise LR tests.
LadderResult fit_ladder(KernelFamily family, std::span<const double> data, int Kmax,
                        double alpha = 0.10, const FitOptions& options = {});

// Evaluation of a fitted model on original-unit losses.
double model_quantile(const FitResult& fit, double p);
double model_cdf(const FitResult& fit, double x);
double model_logpdf(const FitResult& fit, double x);

} // namespace snpvar
