#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace maxenergy {

/// Dense row-major m x n real matrix, m >= 1 and n >= 1.
class RealMatrix {
public:
    RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static RealMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static RealMatrix constant(std::size_t rows, std::size_t cols, double value);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const noexcept { return data_; }

    RealMatrix transposed() const;

    bool is_square() const noexcept { return rows_ == cols_; }
    /// Exact entrywise equality a(i,j) == a(j,i).
    bool is_symmetric() const noexcept;
    bool is_nonnegative() const noexcept;
    bool is_finite() const noexcept;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

struct EntrywiseNorms {
    double l1;       // sum of |a_ij|
    double frob_sq;  // sum of a_ij^2
    double max_abs;  // max |a_ij|
};

EntrywiseNorms entrywise_norms(const RealMatrix& a);

/// Text format: first line "m n", then m lines of n space-separated reals.
/// Blank lines and lines starting with '#' are ignored. The parser rejects
/// wrong counts and non-finite tokens.
RealMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const RealMatrix& a);

}  // namespace maxenergy
