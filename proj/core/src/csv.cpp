#include "snpvar/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace snpvar {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& token, double& out) {
    const std::string t = strip(token);
    if (t.empty()) return false;
    auto res = std::from_chars(t.data(), t.data() + t.size(), out);
    return res.ec == std::errc{} && res.ptr == t.data() + t.size();
}

} // namespace

LossData read_losses_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);

    LossData out;
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    bool has_labels = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string row = strip(line);
        if (row.empty()) continue;

        std::string first_tok, second_tok;
        std::size_t comma = row.find(',');
        if (comma == std::string::npos) {
            first_tok = row;
        } else {
            first_tok = row.substr(0, comma);
            second_tok = strip(row.substr(comma + 1));
        }

        double v = 0.0;
        if (first && !parse_double(first_tok, v)) {
            // header row
            first = false;
            has_labels = !second_tok.empty();
            continue;
        }
        first = false;
        if (!parse_double(first_tok, v)) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": not a number: '" + strip(first_tok) + "'");
        }
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": losses must be positive and finite, got " +
                                     format_double(v));
        }
        out.values.push_back(v);
        if (!second_tok.empty()) has_labels = true;
        out.labels.push_back(second_tok);
    }
    if (out.values.empty()) {
        throw std::runtime_error(path + ": no loss values found");
    }
    if (!has_labels) out.labels.clear();
    return out;
}

void write_labeled_csv(const std::string& path, std::span<const double> values,
                       std::span<const std::string> labels) {
    std::ofstream outf(path);
    if (!outf) throw std::runtime_error("cannot write " + path);
    const bool with_labels = !labels.empty();
    if (with_labels && labels.size() != values.size()) {
        throw std::invalid_argument("write_labeled_csv: label/value size mismatch");
    }
    outf << (with_labels ? "value,label\n" : "value\n");
    for (std::size_t i = 0; i < values.size(); ++i) {
        outf << format_double(values[i]);
        if (with_labels) outf << ',' << labels[i];
        outf << '\n';
    }
    if (!outf) throw std::runtime_error("write failed: " + path);
}

} // namespace snpvar
