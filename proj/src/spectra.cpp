#include "maxenergy/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "maxenergy/errors.hpp"

namespace maxenergy {

namespace detail {

// Off-diagonal convergence threshold, relative to the local diagonal scale.
constexpr double kOffdiagTol = 1e-14;
constexpr int kMaxSweeps = 50;

void householder_tridiagonalize(std::vector<double>& a, std::size_t n,
                                std::vector<double>& d, std::vector<double>& e) {
    auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    d.assign(n, 0.0);
    e.assign(n, 0.0);

    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = A(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (std::size_t k = 0; k <= j; ++k)
                        A(j, k) -= f * e[k] + g * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
    }
    for (std::size_t i = 0; i < n; ++i) d[i] = A(i, i);
    e[0] = 0.0;
}

void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, std::size_t n) {
    if (n <= 1) return;
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= kOffdiagTol * dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxSweeps)
                    throw NumericError("eigenvalue QL iteration exceeded 50 sweeps");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                const double sr = (g >= 0.0) ? std::fabs(r) : -std::fabs(r);
                g = d[m] - d[l] + e[l] / (g + sr);
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace detail

namespace {

void sort_descending(std::vector<double>& v) {
    std::stable_sort(v.begin(), v.end(), [](double a, double b) { return a > b; });
}

std::vector<double> eigenvalues_of_symmetric_data(std::vector<double> a, std::size_t n) {
    std::vector<double> d, e;
    detail::householder_tridiagonalize(a, n, d, e);
    detail::ql_implicit_shift(d, e, n);
    sort_descending(d);
    return d;
}

}  // namespace

EigenSpectrum symmetric_eigenvalues(const RealMatrix& m) {
    if (!m.is_square())
        throw DimensionError("eigendecomposition requires a square matrix");
    if (!m.is_finite()) throw DomainError("matrix has non-finite entries");
    if (!m.is_symmetric())
        throw DimensionError("eigendecomposition requires a symmetric matrix");
    return EigenSpectrum{eigenvalues_of_symmetric_data(m.data(), m.rows())};
}

SingularSpectrum singular_values(const RealMatrix& a) {
    if (!a.is_finite()) throw DomainError("matrix has non-finite entries");

    // Gram matrix of the smaller dimension; work on rows for locality.
    const RealMatrix work = (a.rows() <= a.cols()) ? a : a.transposed();
    const std::size_t k = work.rows();
    const std::size_t n = work.cols();
    std::vector<double> gram(k * k);
    const std::vector<double>& w = work.data();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            double s = 0.0;
            const double* ri = w.data() + i * n;
            const double* rj = w.data() + j * n;
            for (std::size_t t = 0; t < n; ++t) s += ri[t] * rj[t];
            gram[i * k + j] = s;
            gram[j * k + i] = s;
        }
    }

    std::vector<double> lambda = eigenvalues_of_symmetric_data(std::move(gram), k);

    double scale = 0.0;
    for (double v : lambda) scale = std::max(scale, std::fabs(v));
    const double clamp = 1e-10 * scale;
    std::vector<double> sigma(k);
    for (std::size_t i = 0; i < k; ++i) {
        double v = lambda[i];
        if (v < 0.0) {
            if (v < -clamp)
                throw NumericError("Gram eigenvalue significantly negative; "
                                   "singular values unreliable");
            v = 0.0;
        }
        sigma[i] = std::sqrt(v);
    }
    // lambda descending and sqrt monotone, so sigma is already descending.
    return SingularSpectrum{std::move(sigma)};
}

double energy(const RealMatrix& a) {
    const SingularSpectrum s = singular_values(a);
    double sum = 0.0;
    for (double v : s.values) sum += v;
    return sum;
}

}  // namespace maxenergy
