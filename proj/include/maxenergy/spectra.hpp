#pragma once

#include <vector>

#include "maxenergy/matrix.hpp"

namespace maxenergy {

/// Eigenvalues of a symmetric matrix, descending, signed.
struct EigenSpectrum {
    std::vector<double> values;
};

/// Singular values, descending, nonnegative.
struct SingularSpectrum {
    std::vector<double> values;
};

/// All n eigenvalues of a symmetric matrix, values only, via Householder
/// tridiagonalization followed by implicitly shifted QL iteration.
/// Deterministic: identical input bits give identical output bits.
EigenSpectrum symmetric_eigenvalues(const RealMatrix& m);

/// min(m, n) singular values via eigendecomposition of the Gram matrix of
/// the smaller dimension (A A^T if m <= n, else A^T A). Gram eigenvalues in
/// [-1e-10 * scale, 0) are clamped to zero; anything more negative is a
/// NumericError.
SingularSpectrum singular_values(const RealMatrix& a);

/// Sum of all singular values.
double energy(const RealMatrix& a);

namespace detail {

/// In-place Householder reduction of a symmetric matrix (row-major, n x n,
/// destroyed) to tridiagonal form. d receives the diagonal, e the
/// subdiagonal with e[0] = 0.
void householder_tridiagonalize(std::vector<double>& a, std::size_t n,
                                std::vector<double>& d, std::vector<double>& e);

/// QL iteration with implicit shifts on a tridiagonal matrix; d holds the
/// eigenvalues on return, unordered. Throws NumericError after 50 sweeps
/// for any single eigenvalue.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, std::size_t n);

}  // namespace detail

}  // namespace maxenergy
