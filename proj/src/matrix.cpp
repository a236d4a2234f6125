#include "maxenergy/matrix.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "maxenergy/errors.hpp"

namespace maxenergy {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0)
        throw DimensionError("matrix dimensions must be at least 1x1");
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw DimensionError("matrix dimensions must be at least 1x1");
    const std::size_t n = rows.front().size();
    RealMatrix a(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n)
            throw DimensionError("ragged row lengths in matrix construction");
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
    }
    return a;
}

RealMatrix RealMatrix::constant(std::size_t rows, std::size_t cols, double value) {
    return RealMatrix(rows, cols, value);
}

RealMatrix RealMatrix::transposed() const {
    RealMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool RealMatrix::is_symmetric() const noexcept {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RealMatrix::is_nonnegative() const noexcept {
    for (double v : data_)
        if (!(v >= 0.0)) return false;
    return true;
}

bool RealMatrix::is_finite() const noexcept {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

EntrywiseNorms entrywise_norms(const RealMatrix& a) {
    if (!a.is_finite()) throw DomainError("matrix has non-finite entries");
    EntrywiseNorms n{0.0, 0.0, 0.0};
    for (double v : a.data()) {
        const double av = std::fabs(v);
        n.l1 += av;
        n.frob_sq += v * v;
        if (av > n.max_abs) n.max_abs = av;
    }
    return n;
}

namespace {

struct Line {
    std::string text;
    std::size_t number;  // 1-based position in the original input
};

// Content lines only: blanks and '#' comments dropped, numbering kept.
std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        out.push_back({line, no});
    }
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double parse_real(const std::string& tok, std::size_t line_no) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("invalid real token '" + tok + "'", line_no);
    if (!std::isfinite(v))
        throw ParseError("non-finite token '" + tok + "'", line_no);
    return v;
}

std::size_t parse_count(const std::string& tok, std::size_t line_no) {
    std::size_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("invalid integer token '" + tok + "'", line_no);
    return v;
}

}  // namespace

RealMatrix parse_matrix(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty matrix input", 1);

    const auto header = tokens(lines[0].text);
    if (header.size() != 2)
        throw ParseError("matrix header must be 'm n'", lines[0].number);
    const std::size_t m = parse_count(header[0], lines[0].number);
    const std::size_t n = parse_count(header[1], lines[0].number);
    if (m == 0 || n == 0)
        throw ParseError("matrix dimensions must be at least 1x1", lines[0].number);

    if (lines.size() < m + 1) {
        const std::size_t last = lines.back().number;
        throw ParseError("expected " + std::to_string(m) + " rows, got " +
                             std::to_string(lines.size() - 1),
                         last);
    }
    if (lines.size() > m + 1)
        throw ParseError("unexpected content after matrix rows", lines[m + 1].number);

    RealMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const Line& row = lines[i + 1];
        const auto toks = tokens(row.text);
        if (toks.size() != n)
            throw ParseError("expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(toks.size()),
                             row.number);
        for (std::size_t j = 0; j < n; ++j) a(i, j) = parse_real(toks[j], row.number);
    }
    return a;
}

std::string serialize_matrix(const RealMatrix& a) {
    std::ostringstream out;
    out << a.rows() << ' ' << a.cols() << '\n';
    char buf[64];
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", a(i, j));
            out << (j ? " " : "") << buf;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace maxenergy
