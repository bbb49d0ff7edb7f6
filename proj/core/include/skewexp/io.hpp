#pragma once

#include <string>
#include <vector>

#include "skewexp/dense.hpp"

namespace skewexp {

/// Parse error carrying the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number;
};

/// Real matrix file: line 1 = N, then N lines of N space-separated
/// decimals. Lines starting with '#' are comments. 17 significant digits
/// on write, so round trips are bit-exact.
struct RealMatrixFile {
    std::size_t dim = 0;
    std::vector<double> entries;  // row-major
};

RealMatrixFile read_real_matrix(const std::string& path);
void write_real_matrix(const std::string& path, std::size_t dim,
                       const std::vector<double>& entries);

/// Complex variant (--unitary): entries serialized as `re,im` pairs.
ComplexDense read_complex_matrix(const std::string& path);
void write_complex_matrix(const std::string& path, const ComplexDense& m);

/// Format a double with 17 significant digits (round-trip exact).
std::string format_full(double v);

struct CsvRow {
    std::string run_id;
    int n_q = 0;
    std::string family;
    std::uint64_t seed = 0;
    int restart = 0;
    int iteration = 0;
    double loss = 0.0;
};

/// Header exactly `run_id,n_q,family,seed,restart,iteration,loss`; UTF-8,
/// LF line endings. Rows are written in the order given.
void write_loss_csv(const std::string& path, const std::vector<CsvRow>& rows);

struct LossCurve {
    std::string label;
    std::vector<double> losses;  // y values, x = iteration index
};

/// Self-contained SVG: one polyline per curve, loss on a linear y axis,
/// iteration on x.
void write_loss_svg(const std::string& path, const std::string& title,
                    const std::vector<LossCurve>& curves);

}  // namespace skewexp
