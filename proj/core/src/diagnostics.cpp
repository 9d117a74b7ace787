#include "snpvar/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "snpvar/csv.hpp"

namespace snpvar {

QqSeries qq_points(std::span<const double> data,
                   const std::function<double(double)>& model_quantile,
                   std::string model_name) {
    if (data.empty()) throw std::invalid_argument("qq_points: data must be nonempty");
    QqSeries out;
    out.model = std::move(model_name);
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    out.points.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double p = (static_cast<double>(i) + 0.5) / n; // Hazen positions
        out.points.emplace_back(sorted[i], model_quantile(p));
    }
    return out;
}

std::vector<std::pair<double, double>> tail_curve(const std::function<double(double)>& cdf,
                                                  std::span<const double> x_grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(x_grid.size());
    double prev = -1.0;
    for (double x : x_grid) {
        if (x < prev) throw std::invalid_argument("tail_curve: grid must be ascending");
        prev = x;
        out.emplace_back(x, 1.0 - cdf(x));
    }
    return out;
}

std::vector<double> default_tail_grid(const std::function<double(double)>& quantile,
                                      std::size_t points) {
    if (points < 2) throw std::invalid_argument("default_tail_grid: need at least 2 points");
    const double lo = quantile(0.5);
    const double hi = quantile(1.0 - 1e-6);
    if (!(lo > 0.0) || !(hi > lo)) {
        throw std::runtime_error("default_tail_grid: degenerate quantile range");
    }
    std::vector<double> grid;
    grid.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        grid.push_back(lo * std::pow(hi / lo, t));
    }
    return grid;
}

std::vector<ComparisonRow> comparison_table(std::span<const FitResult> fits, double p) {
    std::vector<ComparisonRow> out;
    out.reserve(fits.size());
    for (const FitResult& fit : fits) {
        ComparisonRow row;
        row.model = model_name(fit.model);
        row.logL = fit.logL;
        row.param_count = model_param_count(fit.model);
        row.converged = fit.converged;
        row.q999 = (fit.kernel || fit.snp) ? model_quantile(fit, p) : 0.0;
        out.push_back(std::move(row));
    }
    return out;
}

void write_qq_csv(const std::string& path, const QqSeries& series) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "empirical,model\n";
    for (const auto& [emp, mod] : series.points) {
        out << format_double(emp) << ',' << format_double(mod) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_tail_csv(const std::string& path, std::span<const std::pair<double, double>> curve) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "x,survival\n";
    for (const auto& [x, sv] : curve) {
        out << format_double(x) << ',' << format_double(sv) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_comparison_csv(const std::string& path, std::span<const ComparisonRow> rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "model,logL,q999,params,converged\n";
    for (const ComparisonRow& row : rows) {
        out << row.model << ',' << format_double(row.logL) << ',' << format_double(row.q999)
            << ',' << row.param_count << ',' << (row.converged ? 1 : 0) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace snpvar
