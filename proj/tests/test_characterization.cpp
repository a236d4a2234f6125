#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "maxenergy/characterization.hpp"
#include "maxenergy/construction.hpp"
#include "maxenergy/errors.hpp"
#include "maxenergy/graph.hpp"
#include "maxenergy/spectra.hpp"
#include "test_support.hpp"

using namespace maxenergy;
namespace ts = testsupport;

namespace {

RealMatrix star_adjacency(std::size_t n) {
    RealMatrix a(n, n, 0.0);
    for (std::size_t j = 1; j < n; ++j) {
        a(0, j) = 1.0;
        a(j, 0) = 1.0;
    }
    return a;
}

RealMatrix scaled(const RealMatrix& a, double c) {
    RealMatrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = c * a(i, j);
    return b;
}

}  // namespace

TEST_CASE("grading the order-101 Paley adjacency at eps 0.2, delta 0.1") {
    const RealMatrix a = adjacency_matrix(paley_graph(101));
    const CharacterizationReport r = grade_near_maximal(a, 0.2, 0.1);

    CHECK(r.alpha == 1.0);
    CHECK(r.energy == doctest::Approx(50.0 * (std::sqrt(101.0) + 1.0)).epsilon(1e-9));
    CHECK(r.hypothesis_met);  // 552.49 >= 0.4 * 101^{3/2} = 406.02
    CHECK(r.alpha_exceeds_2eps);

    CHECK(r.cond_i.value == 5050.0);  // 2 * 2525 unit entries
    CHECK(r.cond_i.threshold == doctest::Approx(0.3 * 101.0 * 101.0));
    CHECK(r.cond_i.passed);

    CHECK(r.cond_ii.value == 5151.0);  // zeros, diagonal included
    CHECK(r.cond_ii.passed);

    CHECK(r.cond_iii.value == doctest::Approx(0.5).epsilon(1e-9));  // |50 - 50.5|
    CHECK(r.cond_iii.threshold == doctest::Approx(20.2));
    CHECK(r.cond_iii.passed);

    CHECK(r.cond_iv.value ==
          doctest::Approx((std::sqrt(101.0) + 1.0) / 2.0).epsilon(1e-9));
    CHECK(r.cond_iv.passed);

    CHECK(r.cond_v_index_lo == 21);
    CHECK(r.cond_v_index_hi == 80);
    CHECK(r.cond_v.value == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(r.cond_v.threshold == doctest::Approx(0.2 * std::sqrt(101.0)));
    CHECK(r.cond_v.passed);
}

TEST_CASE("grading a star: hypothesis fails but everything is measured") {
    const CharacterizationReport r = grade_near_maximal(star_adjacency(50), 0.2, 0.1);
    CHECK_FALSE(r.hypothesis_met);
    CHECK(r.energy == doctest::Approx(14.0).epsilon(1e-9));  // 2 sqrt(49)
    CHECK(r.cond_iii.value > 0.0);   // sigma1 = 7 far from n/2
    CHECK_FALSE(r.cond_iii.passed);  // |7 - 25| = 18 >= 10
    CHECK(r.cond_i.value == 98.0);   // 2 (n - 1) unit entries
}

TEST_CASE("grading the all-ones matrix") {
    const CharacterizationReport r =
        grade_near_maximal(RealMatrix::constant(50, 50, 1.0), 0.2, 0.1);
    CHECK(r.cond_i.passed);        // every entry is maximal
    CHECK(r.cond_i.value == 2500.0);
    CHECK_FALSE(r.cond_ii.passed); // no small entries at all
    CHECK(r.cond_ii.value == 0.0);
    CHECK_FALSE(r.hypothesis_met); // E = n < 0.4 n^{3/2}
}

TEST_CASE("grading rejections") {
    CHECK_THROWS_AS(grade_near_maximal(RealMatrix(4, 4, 0.0), 0.2, 0.1), DomainError);
    CHECK_THROWS_AS(grade_near_maximal(RealMatrix(2, 3, 1.0), 0.2, 0.1),
                    DimensionError);
    RealMatrix neg(3, 3, 1.0);
    neg(0, 1) = -1.0;
    CHECK_THROWS_AS(grade_near_maximal(neg, 0.2, 0.1), DomainError);
    const RealMatrix ok = RealMatrix::constant(3, 3, 1.0);
    CHECK_THROWS_AS(grade_near_maximal(ok, 0.0, 0.1), PreconditionError);
    CHECK_THROWS_AS(grade_near_maximal(ok, 0.5, 0.1), PreconditionError);
    CHECK_THROWS_AS(grade_near_maximal(ok, 0.2, 0.5), PreconditionError);
}

TEST_CASE("grading is invariant under simultaneous row+column permutation") {
    const RealMatrix a = adjacency_matrix(paley_graph(29));
    std::mt19937_64 rng(77);
    std::vector<std::size_t> perm(29);
    for (std::size_t i = 0; i < 29; ++i) perm[i] = i;
    for (std::size_t i = 29; i-- > 1;) std::swap(perm[i], perm[ts::bounded(rng, i + 1)]);
    RealMatrix b(29, 29);
    for (std::size_t i = 0; i < 29; ++i)
        for (std::size_t j = 0; j < 29; ++j) b(i, j) = a(perm[i], perm[j]);

    const CharacterizationReport ra = grade_near_maximal(a, 0.2, 0.1);
    const CharacterizationReport rb = grade_near_maximal(b, 0.2, 0.1);
    CHECK(ra.cond_i.value == rb.cond_i.value);
    CHECK(ra.cond_ii.value == rb.cond_ii.value);
    CHECK(ra.cond_iii.value == doctest::Approx(rb.cond_iii.value).epsilon(1e-9));
    CHECK(ra.cond_iv.value == doctest::Approx(rb.cond_iv.value).epsilon(1e-9));
    CHECK(ra.cond_v.value == doctest::Approx(rb.cond_v.value).epsilon(1e-9));
    CHECK(ra.hypothesis_met == rb.hypothesis_met);
}

TEST_CASE("grading flags are scale covariant") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 3 + ts::bounded(rng, 20);
        RealMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = ts::uniform01(rng);
        const double c = 0.1 + 5.0 * ts::uniform01(rng);
        const CharacterizationReport ra = grade_near_maximal(a, 0.2, 0.1);
        const CharacterizationReport rb = grade_near_maximal(scaled(a, c), 0.2, 0.1);
        CHECK(ra.hypothesis_met == rb.hypothesis_met);
        CHECK(ra.cond_i.passed == rb.cond_i.passed);
        CHECK(ra.cond_ii.passed == rb.cond_ii.passed);
        CHECK(ra.cond_iii.passed == rb.cond_iii.passed);
        CHECK(ra.cond_iv.passed == rb.cond_iv.passed);
        CHECK(ra.cond_v.passed == rb.cond_v.passed);
    }
}

TEST_CASE("complement energy") {
    CHECK(complement_energy(RealMatrix::constant(7, 7, 1.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(complement_energy(RealMatrix(7, 7, 0.0)) == doctest::Approx(7.0));

    const RealMatrix g13 = adjacency_matrix(paley_graph(13));
    const double ce = complement_energy(g13);
    // J - A(G_13) = A(complement) + I; complement of a Paley graph is
    // Paley-isomorphic, so the value is (p+1)/2 + (p-1) sqrt(p) / 2.
    CHECK(ce == doctest::Approx(7.0 + 6.0 * std::sqrt(13.0)).epsilon(1e-9));
    CHECK(ce >= (0.5 - 0.25) * std::pow(13.0, 1.5));

    RealMatrix big(3, 3, 0.5);
    big(1, 1) = 1.5;
    CHECK_THROWS_AS(complement_energy(big), DomainError);
    CHECK_THROWS_AS(complement_energy(RealMatrix(2, 3, 0.5)), DimensionError);
}

TEST_CASE("complement-energy check on reference matrices") {
    const ComplementEnergyCheck paley =
        complement_energy_check(adjacency_matrix(paley_graph(101)), 0.2, 0.1);
    CHECK(paley.premise);
    CHECK(paley.conclusion);

    const ComplementEnergyCheck zero =
        complement_energy_check(RealMatrix(12, 12, 0.0), 0.2, 0.1);
    CHECK_FALSE(zero.premise);      // E = 0
    CHECK_FALSE(zero.conclusion);   // E(J) = 12 < 0.3 * 12^{3/2}

    const ComplementEnergyCheck half =
        complement_energy_check(RealMatrix::constant(25, 25, 0.5), 0.2, 0.1);
    CHECK_FALSE(half.premise);      // rank one, E = n/2
}

TEST_CASE("complement of a Paley adjacency has the Paley spectrum") {
    for (std::uint64_t p : {13ull, 17ull, 29ull}) {
        const Graph g = paley_graph(p);
        const Graph c = complement(g);
        const EigenSpectrum eg = symmetric_eigenvalues(adjacency_matrix(g));
        const EigenSpectrum ec = symmetric_eigenvalues(adjacency_matrix(c));
        for (std::size_t i = 0; i < eg.values.size(); ++i)
            CHECK(eg.values[i] == doctest::Approx(ec.values[i]).epsilon(1e-9));
    }
}

TEST_CASE("bulk-spectrum converse: cond_v forces near-maximal energy") {
    // Corpus: Paley adjacencies, their dense induced subgraphs, and the
    // degenerate references. Whenever cond_v passes, the energy must exceed
    // alpha (1 - 2 eps)(1/2 - eps) n^{3/2}.
    std::vector<RealMatrix> corpus;
    for (std::uint64_t p : {13ull, 17ull, 29ull, 53ull, 101ull})
        corpus.push_back(adjacency_matrix(paley_graph(p)));
    corpus.push_back(adjacency_matrix(induced_subgraph(
        paley_graph(101), select_dense_subset(paley_graph(101), 90, 0, 5))));
    corpus.push_back(RealMatrix::constant(40, 40, 1.0));
    corpus.push_back(star_adjacency(50));

    const double eps = 0.2;
    for (const RealMatrix& a : corpus) {
        const CharacterizationReport r = grade_near_maximal(a, eps, 0.1);
        if (!r.cond_v.passed) continue;
        const double floor = r.alpha * (1.0 - 2.0 * eps) * (0.5 - eps) *
                             std::pow(static_cast<double>(r.n), 1.5);
        CHECK(r.energy >= floor - 1e-8 * std::max(1.0, floor));
    }
}

TEST_CASE("complement-energy transfer holds on the Paley corpus") {
    // Paley adjacencies and dense induced subgraphs, orders up to 500, with
    // eps = 2 delta. The premise should force the conclusion throughout.
    const std::vector<std::uint64_t> primes{13, 17, 29, 37, 53, 101, 149,
                                            197, 257, 313, 401, 449};
    for (double delta : {0.05, 0.1}) {
        const double eps = 2.0 * delta;
        for (std::uint64_t p : primes) {
            const Graph g = paley_graph(p);
            const RealMatrix a = adjacency_matrix(g);
            const ComplementEnergyCheck chk = complement_energy_check(a, eps, delta);
            CAPTURE(p);
            CAPTURE(delta);
            if (chk.premise) CHECK(chk.conclusion);

            if (p <= 101) {
                const std::size_t k = static_cast<std::size_t>(p - p / 10);
                const VertexSet x = select_dense_subset(g, k, 0, 5);
                const RealMatrix sub = adjacency_matrix(induced_subgraph(g, x));
                const ComplementEnergyCheck sc = complement_energy_check(sub, eps, delta);
                if (sc.premise) CHECK(sc.conclusion);
            }
        }
    }
}

TEST_CASE("characterization report serialization") {
    const CharacterizationReport r =
        grade_near_maximal(adjacency_matrix(paley_graph(13)), 0.2, 0.1);
    const std::string text = r.to_text();
    for (const char* key : {"n: ", "epsilon: ", "delta: ", "alpha: ", "energy: ",
                            "hypothesis_met: ", "cond_i_value: ", "cond_v_pass: ",
                            "cond_v_index_lo: "}) {
        CAPTURE(key);
        CHECK(text.find(key) != std::string::npos);
    }
    const std::string json = r.to_json();
    CHECK(json.find("\"cond_v\":{") != std::string::npos);
    CHECK(json.front() == '{');
    CHECK(json.back() == '}');
}
