#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "snpvar/kernels.hpp"

namespace snpvar {

struct MixtureComponentSpec {
    KernelParams params;
    std::size_t n = 0;
    std::string label;
};

/// Draws concatenated in component order, each value tagged with its
/// source label.
struct LabeledSample {
    std::vector<double> values;
    std::vector<std::string> labels; // aligned with values
};

/// Deterministic given the seed: each component samples from its own
/// derived stream, so components may be generated concurrently.
LabeledSample generate_mixture(std::span<const MixtureComponentSpec> specs, std::uint64_t seed);

/// The built-in three-component study mixture (n per component each):
///   Weibull     G(v) = 1 - exp(-(v/(5/3))^(1/3))
///   Pareto      GPD(shape 4/3, scale 1/4)
///   Log-Logistic(shape 2/3, scale 1/20)
/// The Weibull component is parameterized in the (v/lambda)^kappa form
/// with lambda = 5/3, kappa = 1/3, stored here in rate form
/// (rate = (3/5)^(1/3)).
std::vector<MixtureComponentSpec> reference_mixture(std::size_t n_per_component = 1000);

struct ExceedanceDataset {
    double threshold = 0.0;
    std::vector<double> exceedances; // x - threshold for x > threshold
    std::vector<std::string> labels; // aligned
};

/// Peaks over threshold: keep x > u, store x - u with source labels.
ExceedanceDataset extract_exceedances(const LabeledSample& sample, double threshold);

struct LabelSummary {
    std::string label;
    std::size_t count = 0;
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
};

/// Per-label count/min/mean/max, labels in first-appearance order.
std::vector<LabelSummary> summarize(const ExceedanceDataset& dataset);

} // namespace snpvar
