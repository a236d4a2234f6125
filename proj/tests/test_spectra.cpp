#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "maxenergy/errors.hpp"
#include "maxenergy/graph.hpp"
#include "maxenergy/matrix.hpp"
#include "maxenergy/spectra.hpp"
#include "test_support.hpp"

using namespace maxenergy;
namespace ts = testsupport;

namespace {

RealMatrix k2_adjacency() { return RealMatrix::from_rows({{0, 1}, {1, 0}}); }

RealMatrix c5_adjacency() {
    RealMatrix a(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        a(i, (i + 1) % 5) = 1.0;
        a((i + 1) % 5, i) = 1.0;
    }
    return a;
}

}  // namespace

TEST_CASE("eigenvalues of tiny matrices") {
    const EigenSpectrum k2 = symmetric_eigenvalues(k2_adjacency());
    REQUIRE(k2.values.size() == 2);
    CHECK(k2.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k2.values[1] == doctest::Approx(-1.0).epsilon(1e-12));

    const EigenSpectrum zero = symmetric_eigenvalues(RealMatrix(3, 3, 0.0));
    for (double v : zero.values) CHECK(v == 0.0);

    const EigenSpectrum one = symmetric_eigenvalues(RealMatrix::from_rows({{7.5}}));
    REQUIRE(one.values.size() == 1);
    CHECK(one.values[0] == doctest::Approx(7.5));
}

TEST_CASE("cycle C5: closed-form spectrum, cross-checked by its characteristic polynomial") {
    const RealMatrix a = c5_adjacency();
    const EigenSpectrum eig = symmetric_eigenvalues(a);

    // 2 cos(2 pi k / 5): one eigenvalue 2, two golden-ratio pairs.
    std::vector<double> expected;
    for (int k = 0; k < 5; ++k)
        expected.push_back(2.0 * std::cos(2.0 * std::numbers::pi * k / 5.0));
    std::sort(expected.begin(), expected.end(), std::greater<>());

    REQUIRE(eig.values.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(eig.values[i] == doctest::Approx(expected[i]).epsilon(1e-8));

    // Independent oracle: every computed eigenvalue is a root of the
    // characteristic polynomial x^5 - 5x^3 + 5x - 2, and the power sums of
    // the spectrum match the traces of matrix powers.
    const std::vector<double> coeffs = ts::charpoly_coefficients(a);
    REQUIRE(coeffs.size() == 5);
    CHECK(coeffs[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(coeffs[1] == doctest::Approx(-5.0));
    CHECK(coeffs[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(coeffs[3] == doctest::Approx(5.0));
    CHECK(coeffs[4] == doctest::Approx(-2.0));
    for (double v : eig.values)
        CHECK(std::fabs(ts::charpoly_eval(coeffs, v)) < 1e-8);

    RealMatrix power = a;
    for (int k = 1; k <= 5; ++k) {
        double power_sum = 0.0;
        for (double v : eig.values) power_sum += std::pow(v, k);
        CHECK(power_sum == doctest::Approx(ts::trace(power)).epsilon(1e-10));
        if (k < 5) power = ts::matmul(power, a);
    }
}

TEST_CASE("singular values of tiny matrices") {
    const SingularSpectrum k2 = singular_values(k2_adjacency());
    CHECK(k2.values[0] == doctest::Approx(1.0));
    CHECK(k2.values[1] == doctest::Approx(1.0));

    const SingularSpectrum row = singular_values(RealMatrix::from_rows({{3, 0, 4}}));
    REQUIRE(row.values.size() == 1);
    CHECK(row.values[0] == doctest::Approx(5.0));
}

TEST_CASE("Paley graph order 13: closed-form singular values") {
    const Graph g = paley_graph(13);
    const SingularSpectrum sv = singular_values(adjacency_matrix(g));
    const double hi = (std::sqrt(13.0) + 1.0) / 2.0;
    const double lo = (std::sqrt(13.0) - 1.0) / 2.0;
    REQUIRE(sv.values.size() == 13);
    CHECK(sv.values[0] == doctest::Approx(6.0).epsilon(1e-10));
    for (std::size_t i = 1; i <= 6; ++i)
        CHECK(sv.values[i] == doctest::Approx(hi).epsilon(1e-10));
    for (std::size_t i = 7; i <= 12; ++i)
        CHECK(sv.values[i] == doctest::Approx(lo).epsilon(1e-10));
}

TEST_CASE("energy: closed forms") {
    CHECK(energy(k2_adjacency()) == doctest::Approx(2.0));
    CHECK(energy(c5_adjacency()) ==
          doctest::Approx(2.0 + 2.0 * std::sqrt(5.0)).epsilon(1e-10));
    CHECK(energy(adjacency_matrix(paley_graph(13))) ==
          doctest::Approx(6.0 * (std::sqrt(13.0) + 1.0)).epsilon(1e-10));
}

TEST_CASE("entrywise norms") {
    const EntrywiseNorms ones = entrywise_norms(RealMatrix::constant(2, 2, 1.0));
    CHECK(ones.l1 == 4.0);
    CHECK(ones.frob_sq == 4.0);
    CHECK(ones.max_abs == 1.0);

    const EntrywiseNorms c5 = entrywise_norms(c5_adjacency());
    CHECK(c5.l1 == 10.0);
    CHECK(c5.frob_sq == 10.0);
    CHECK(c5.max_abs == 1.0);

    const EntrywiseNorms mixed =
        entrywise_norms(RealMatrix::from_rows({{0.5, -2}, {0, 1}}));
    CHECK(mixed.l1 == doctest::Approx(3.5));
    CHECK(mixed.frob_sq == doctest::Approx(5.25));
    CHECK(mixed.max_abs == doctest::Approx(2.0));
}

TEST_CASE("absolute eigenvalues equal singular values on random symmetric matrices") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + ts::bounded(rng, 30);
        const RealMatrix a = ts::random_symmetric(n, rng, -3.0, 3.0);
        const EigenSpectrum eig = symmetric_eigenvalues(a);
        const SingularSpectrum sv = singular_values(a);
        std::vector<double> abs_sorted;
        for (double v : eig.values) abs_sorted.push_back(std::fabs(v));
        std::sort(abs_sorted.begin(), abs_sorted.end(), std::greater<>());
        REQUIRE(abs_sorted.size() == sv.values.size());
        for (std::size_t i = 0; i < n; ++i) {
            const double scale = std::max(1.0, std::fabs(abs_sorted[i]));
            CHECK(std::fabs(abs_sorted[i] - sv.values[i]) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("eigenvalues agree with the Jacobi oracle on random symmetric matrices") {
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + ts::bounded(rng, 20);
        const RealMatrix a = ts::random_symmetric(n, rng, -2.0, 2.0);
        const EigenSpectrum eig = symmetric_eigenvalues(a);
        const std::vector<double> oracle = ts::jacobi_eigenvalues(a);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::fabs(eig.values[i] - oracle[i]) <=
                  1e-9 * std::max(1.0, std::fabs(oracle[i])));
    }
}

TEST_CASE("sum of squared singular values equals the squared Frobenius norm") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + ts::bounded(rng, 40);
        const std::size_t n = 1 + ts::bounded(rng, 60);
        const RealMatrix a = ts::random_rect(m, n, rng, -2.0, 2.0);
        const SingularSpectrum sv = singular_values(a);
        double sum_sq = 0.0;
        for (double v : sv.values) sum_sq += v * v;
        const double frob = entrywise_norms(a).frob_sq;
        const double k = static_cast<double>(std::min(m, n));
        CHECK(std::fabs(sum_sq - frob) <= 1e-9 * k * std::max(1.0, frob));
    }
}

TEST_CASE("energy is invariant under transposition and permutation") {
    std::mt19937_64 rng(40);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 2 + ts::bounded(rng, 12);
        const std::size_t n = 2 + ts::bounded(rng, 12);
        const RealMatrix a = ts::random_rect(m, n, rng, -1.0, 1.0);
        const double e = energy(a);
        CHECK(energy(a.transposed()) == doctest::Approx(e).epsilon(1e-9));

        std::vector<std::size_t> rp(m), cp(n);
        for (std::size_t i = 0; i < m; ++i) rp[i] = i;
        for (std::size_t j = 0; j < n; ++j) cp[j] = j;
        for (std::size_t i = m; i-- > 1;)
            std::swap(rp[i], rp[ts::bounded(rng, i + 1)]);
        for (std::size_t j = n; j-- > 1;)
            std::swap(cp[j], cp[ts::bounded(rng, j + 1)]);
        RealMatrix b(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = a(rp[i], cp[j]);
        CHECK(energy(b) == doctest::Approx(e).epsilon(1e-9));
    }
}

TEST_CASE("sum of squared singular values of a graph equals twice its edge count") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + ts::bounded(rng, 30);
        const Graph g = ts::random_graph(n, ts::uniform01(rng), rng);
        const SingularSpectrum sv = singular_values(adjacency_matrix(g));
        double sum_sq = 0.0;
        for (double v : sv.values) sum_sq += v * v;
        CHECK(std::fabs(sum_sq - 2.0 * static_cast<double>(g.edge_count())) <=
              1e-8 * static_cast<double>(n));
    }
}

TEST_CASE("eigenvalue sum matches the trace") {
    std::mt19937_64 rng(9001);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + ts::bounded(rng, 25);
        const RealMatrix a = ts::random_symmetric(n, rng, -4.0, 4.0);
        const EigenSpectrum eig = symmetric_eigenvalues(a);
        double sum = 0.0, max_abs = 0.0;
        for (double v : eig.values) sum += v;
        for (double v : a.data()) max_abs = std::max(max_abs, std::fabs(v));
        CHECK(std::fabs(sum - ts::trace(a)) <=
              1e-9 * static_cast<double>(n) * std::max(1.0, max_abs));
    }
}

TEST_CASE("determinism: identical inputs give identical bits") {
    std::mt19937_64 rng(3);
    const RealMatrix a = ts::random_symmetric(24, rng, -1.0, 1.0);
    const EigenSpectrum e1 = symmetric_eigenvalues(a);
    const EigenSpectrum e2 = symmetric_eigenvalues(a);
    CHECK(e1.values == e2.values);
    const RealMatrix r = ts::random_rect(17, 29, rng);
    CHECK(singular_values(r).values == singular_values(r).values);
}

TEST_CASE("error paths") {
    RealMatrix bad(2, 2, 0.0);
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    bad(1, 0) = bad(0, 1);
    CHECK_THROWS_AS(singular_values(bad), DomainError);
    CHECK_THROWS_AS(entrywise_norms(bad), DomainError);

    RealMatrix asym(2, 2, 0.0);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(symmetric_eigenvalues(asym), DimensionError);
    CHECK_THROWS_AS(symmetric_eigenvalues(RealMatrix(2, 3, 0.0)), DimensionError);
    CHECK_THROWS_AS(RealMatrix(0, 2, 0.0), DimensionError);
}

TEST_CASE("matrix text format round trip and rejection") {
    const RealMatrix a = RealMatrix::from_rows({{0.5, -2.0}, {0.0, 1.0}});
    const RealMatrix b = parse_matrix(serialize_matrix(a));
    CHECK(b.rows() == 2);
    CHECK(b.cols() == 2);
    CHECK(b.data() == a.data());

    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n"), ParseError);        // missing row
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3\n4 5\n"), ParseError); // wrong count
    CHECK_THROWS_AS(parse_matrix("1 2\n1 inf\n"), ParseError);      // non-finite
    CHECK_THROWS_AS(parse_matrix("1 1\nx\n"), ParseError);          // bad token
    CHECK_THROWS_AS(parse_matrix("1 1\n3\n7\n"), ParseError);       // trailing row

    // Comments and blank lines are ignored.
    const RealMatrix c = parse_matrix("# header\n2 2\n\n1 2\n3 4\n");
    CHECK(c(1, 0) == 3.0);

    try {
        parse_matrix("2 2\n1 2\nbad bad\n");
        CHECK(false);
    } catch (const ParseError& err) {
        CHECK(err.line() == 3);
    }
}
