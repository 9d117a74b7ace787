#include "snpvar/simgen.hpp"

#include <cmath>
#include <stdexcept>

#include "snpvar/rng.hpp"

namespace snpvar {

LabeledSample generate_mixture(std::span<const MixtureComponentSpec> specs, std::uint64_t seed) {
    if (specs.empty()) throw std::invalid_argument("generate_mixture: no components");
    LabeledSample out;
    std::size_t total = 0;
    for (const auto& spec : specs) total += spec.n;
    out.values.reserve(total);
    out.labels.reserve(total);

    for (std::size_t c = 0; c < specs.size(); ++c) {
        const auto& spec = specs[c];
        if (spec.n == 0) throw std::domain_error("generate_mixture: component size must be > 0");
        RngStream stream(derive_seed(seed, static_cast<std::uint64_t>(c)));
        std::vector<double> draws = kernel_sample(spec.params, stream, spec.n);
        for (double v : draws) {
            out.values.push_back(v);
            out.labels.push_back(spec.label);
        }
    }
    return out;
}

std::vector<MixtureComponentSpec> reference_mixture(std::size_t n_per_component) {
    const double weibull_rate = std::pow(3.0 / 5.0, 1.0 / 3.0);
    return {
        {WeibullParams{1.0 / 3.0, weibull_rate}, n_per_component, "Weibull"},
        {GpdParams{4.0 / 3.0, 0.25}, n_per_component, "Pareto"},
        {LogLogisticParams{2.0 / 3.0, 0.05}, n_per_component, "Log-Logistic"},
    };
}

ExceedanceDataset extract_exceedances(const LabeledSample& sample, double threshold) {
    if (threshold < 0.0) throw std::domain_error("extract_exceedances: threshold must be >= 0");
    ExceedanceDataset out;
    out.threshold = threshold;
    for (std::size_t i = 0; i < sample.values.size(); ++i) {
        if (sample.values[i] > threshold) {
            out.exceedances.push_back(sample.values[i] - threshold);
            out.labels.push_back(sample.labels[i]);
        }
    }
    return out;
}

std::vector<LabelSummary> summarize(const ExceedanceDataset& dataset) {
    std::vector<LabelSummary> out;
    auto find = [&](const std::string& label) -> LabelSummary& {
        for (auto& row : out) {
            if (row.label == label) return row;
        }
        out.push_back(LabelSummary{label, 0, 0.0, 0.0, 0.0});
        return out.back();
    };
    for (std::size_t i = 0; i < dataset.exceedances.size(); ++i) {
        const double v = dataset.exceedances[i];
        LabelSummary& row = find(dataset.labels[i]);
        if (row.count == 0) {
            row.min = row.max = v;
        } else {
            row.min = std::min(row.min, v);
            row.max = std::max(row.max, v);
        }
        row.mean += v;
        ++row.count;
    }
    for (auto& row : out) {
        if (row.count > 0) row.mean /= static_cast<double>(row.count);
    }
    return out;
}

} // namespace snpvar
