#include "skewexp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace skewexp {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

double parse_double(const std::string& tok, int line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("cannot parse number '" + tok + "'", line_no);
    }
}

// shared scaffolding: yields the dimension line then row lines
template <typename RowFn>
std::size_t read_matrix_lines(const std::string& path, RowFn&& on_row) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::string line;
    int line_no = 0;
    std::size_t dim = 0;
    std::size_t rows_seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        if (dim == 0) {
            const auto toks = tokenize(line);
            if (toks.size() != 1) throw ParseError("expected a single dimension value", line_no);
            const double d = parse_double(toks[0], line_no);
            if (d < 1 || d != std::floor(d)) throw ParseError("invalid dimension", line_no);
            dim = static_cast<std::size_t>(d);
            continue;
        }
        if (rows_seen == dim) throw ParseError("extra data after last matrix row", line_no);
        on_row(rows_seen, tokenize(line), line_no, dim);
        ++rows_seen;
    }
    if (dim == 0) throw ParseError("empty matrix file", line_no);
    if (rows_seen != dim)
        throw ParseError("expected " + std::to_string(dim) + " rows, got " +
                             std::to_string(rows_seen), line_no);
    return dim;
}

}  // namespace

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RealMatrixFile read_real_matrix(const std::string& path) {
    RealMatrixFile out;
    std::vector<double> entries;
    out.dim = read_matrix_lines(path, [&](std::size_t, const std::vector<std::string>& toks,
                                          int line_no, std::size_t dim) {
        if (toks.size() != dim)
            throw ParseError("expected " + std::to_string(dim) + " entries, got " +
                                 std::to_string(toks.size()), line_no);
        for (const auto& t : toks) entries.push_back(parse_double(t, line_no));
    });
    out.entries = std::move(entries);
    return out;
}

void write_real_matrix(const std::string& path, std::size_t dim,
                       const std::vector<double>& entries) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << dim << "\n";
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (j) out << ' ';
            out << format_full(entries[i * dim + j]);
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

ComplexDense read_complex_matrix(const std::string& path) {
    ComplexDense m;
    read_matrix_lines(path, [&](std::size_t row, const std::vector<std::string>& toks,
                                int line_no, std::size_t dim) {
        if (m.dim() == 0) m = ComplexDense(dim);
        if (toks.size() != dim)
            throw ParseError("expected " + std::to_string(dim) + " entries, got " +
                                 std::to_string(toks.size()), line_no);
        for (std::size_t j = 0; j < dim; ++j) {
            const auto comma = toks[j].find(',');
            if (comma == std::string::npos)
                throw ParseError("expected re,im pair '" + toks[j] + "'", line_no);
            const double re = parse_double(toks[j].substr(0, comma), line_no);
            const double im = parse_double(toks[j].substr(comma + 1), line_no);
            m.at(row, j) = cdouble(re, im);
        }
    });
    return m;
}

void write_complex_matrix(const std::string& path, const ComplexDense& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << m.dim() << "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << format_full(m.at(i, j).real()) << ',' << format_full(m.at(i, j).imag());
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_loss_csv(const std::string& path, const std::vector<CsvRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "run_id,n_q,family,seed,restart,iteration,loss\n";
    for (const auto& r : rows)
        out << r.run_id << ',' << r.n_q << ',' << r.family << ',' << r.seed << ','
            << r.restart << ',' << r.iteration << ',' << format_full(r.loss) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_loss_svg(const std::string& path, const std::string& title,
                    const std::vector<LossCurve>& curves) {
    constexpr double kW = 720.0, kH = 480.0;
    constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;
    const double plot_w = kW - kLeft - kRight;
    const double plot_h = kH - kTop - kBottom;

    double ymax = 0.0;
    std::size_t xmax = 1;
    for (const auto& c : curves) {
        xmax = std::max(xmax, c.losses.size() > 1 ? c.losses.size() - 1 : std::size_t{1});
        for (double v : c.losses) ymax = std::max(ymax, v);
    }
    if (ymax <= 0.0) ymax = 1.0;

    auto px = [&](double it) { return kLeft + plot_w * it / static_cast<double>(xmax); };
    auto py = [&](double loss) { return kTop + plot_h * (1.0 - loss / ymax); };

    static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
        << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\" "
           "font-family=\"sans-serif\">" << title << "</text>\n";
    // axes
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kTop + plot_h << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kH - 12
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">iteration"
           "</text>\n";
    out << "<text x=\"16\" y=\"" << kTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 16 " << kTop + plot_h / 2 << ")\">loss</text>\n";
    // y ticks
    for (int t = 0; t <= 4; ++t) {
        const double v = ymax * t / 4.0;
        char lbl[32];
        std::snprintf(lbl, sizeof(lbl), "%.3g", v);
        out << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << py(v) << "\" x2=\"" << kLeft
            << "\" y2=\"" << py(v) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kLeft - 8 << "\" y=\"" << py(v) + 4
            << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << lbl
            << "</text>\n";
    }
    // x ticks
    for (int t = 0; t <= 4; ++t) {
        const double v = static_cast<double>(xmax) * t / 4.0;
        out << "<text x=\"" << px(v) << "\" y=\"" << kTop + plot_h + 18
            << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
            << static_cast<long>(v) << "</text>\n";
    }

    std::size_t ci = 0;
    for (const auto& c : curves) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[ci++ % 10]
            << "\" stroke-width=\"1\" opacity=\"0.8\" points=\"";
        for (std::size_t i = 0; i < c.losses.size(); ++i) {
            if (i) out << ' ';
            out << px(static_cast<double>(i)) << ',' << py(c.losses[i]);
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace skewexp
