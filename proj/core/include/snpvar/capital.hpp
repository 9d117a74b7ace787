#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "snpvar/estimate.hpp"
#include "snpvar/kernels.hpp"

namespace snpvar {

/// Severity model for tail exceedances: anything with an inverse CDF.
struct SeverityModel {
    std::string name;
    std::function<double(double)> quantile; // p in (0,1) -> exceedance > 0
};

/// Spliced severity: truncated lognormal body on [rt, bt], tail draws
/// are bt + Y with Y from the exceedance model.
struct SplicedSeverity {
    TruncLognormalParams body;
    SeverityModel tail;
};

/// Independent Poisson frequencies for body and tail events.
struct FrequencyFit {
    double lambda_body = 0.0; // expected annual body count
    double lambda_tail = 0.0; // expected annual tail count
    double years = 1.0;       // observation window
};

/// lambda = count / T. T must be positive and is always user-supplied.
double fit_frequency(std::size_t event_count, double years);

/// MLE of the truncated lognormal body on observations in [rt, bt].
/// Requires n >= 10; all-equal data is a failure.
std::pair<TruncLognormalParams, FitResult> fit_body(std::span<const double> body_data,
                                                    double rt, double bt,
                                                    const FitOptions& options = {});

struct McOptions {
    std::size_t iterations = 10000;
    std::uint64_t seed = 0;
    int threads = 1;          // any value yields bit-identical results
    bool keep_sample = false; // retain the annual-loss vector
};

struct CapitalResult {
    double var_999 = 0.0; // ceil(0.999 n)-th order statistic of annual losses
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
    double mean_annual = 0.0;
    double max_annual = 0.0;
    std::vector<double> annual_losses; // only when keep_sample
};

/// Compound-Poisson Monte Carlo: per iteration draw independent body
/// and tail counts, sum inverse-CDF severity draws (tail draws offset
/// by bt). Each iteration consumes its own counter-derived substream,
/// so results do not depend on the thread count.
CapitalResult simulate_aggregate(const SplicedSeverity& severity, const FrequencyFit& freq,
                                 const McOptions& options);

/// ceil(p*n)-th order statistic of the sample.
double var_at(std::span<const double> losses, double p);

} // namespace snpvar
