#pragma once

#include <span>
#include <string>
#include <vector>

namespace snpvar {

/// Shortest decimal representation that round-trips the double.
std::string format_double(double v);

struct LossData {
    std::vector<double> values;
    std::vector<std::string> labels; // empty when the file has no label column
};

/// Read a losses CSV: one loss per row, optional header, optional
/// second `label` column. Values must be positive and finite;
/// malformed rows raise errors carrying the 1-based line number.
LossData read_losses_csv(const std::string& path);

/// Write `value,label` rows (header included) at full round-trip
/// precision; labels may be empty, in which case only `value` is
/// written.
void write_labeled_csv(const std::string& path, std::span<const double> values,
                       std::span<const std::string> labels);

} // namespace snpvar
