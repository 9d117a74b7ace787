#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snpvar/estimate.hpp"

namespace snpvar {

/// Q-Q points: (x_(i), model_quantile((i-0.5)/n)), ascending in both
/// coordinates.
struct QqSeries {
    std::string model;
    std::vector<std::pair<double, double>> points; // (empirical, model)
};

QqSeries qq_points(std::span<const double> data,
                   const std::function<double(double)>& model_quantile,
                   std::string model_name);

/// Survival curve (x, 1 - F(x)) on the given ascending grid.
std::vector<std::pair<double, double>> tail_curve(const std::function<double(double)>& cdf,
                                                  std::span<const double> x_grid);

/// Log-spaced grid from the model median to its 1-1e-6 quantile.
std::vector<double> default_tail_grid(const std::function<double(double)>& quantile,
                                      std::size_t points = 200);

struct ComparisonRow {
    std::string model;
    double logL = 0.0;
    double q999 = 0.0;
    int param_count = 0;
    bool converged = false;
};

/// One row per fit: name, logL, quantile at p, parameter count.
/// Unconverged fits are flagged, not dropped.
std::vector<ComparisonRow> comparison_table(std::span<const FitResult> fits, double p = 0.999);

// Plot-ready CSV emitters.
void write_qq_csv(const std::string& path, const QqSeries& series);
void write_tail_csv(const std::string& path, std::span<const std::pair<double, double>> curve);
void write_comparison_csv(const std::string& path, std::span<const ComparisonRow> rows);

} // namespace snpvar
