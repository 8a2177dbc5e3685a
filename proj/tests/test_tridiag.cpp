#include "wcpswf/tridiag.hpp"

#include "helpers.hpp"
#include "wcpswf/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wcpswf;

namespace {

TridiagSym random_tridiag(std::mt19937& rng, int n, double scale = 3.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    TridiagSym T;
    T.diag.resize(n);
    T.off.resize(n - 1);
    for (auto& d : T.diag) d = u(rng);
    for (auto& e : T.off) e = u(rng);
    return T;
}

std::vector<std::vector<double>> densify(const TridiagSym& T) {
    const std::size_t n = T.size();
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        A[i][i] = T.diag[i];
        if (i + 1 < n) A[i][i + 1] = A[i + 1][i] = T.off[i];
    }
    return A;
}

} // namespace

TEST_CASE("tiny matrices") {
    const auto id2 = eig_tridiag({{1.0, 1.0}, {0.0}});
    CHECK(id2[0].value == doctest::Approx(1.0));
    CHECK(id2[1].value == doctest::Approx(1.0));

    // diag {2,2}, off {1} -> eigenvalues {1,3}
    const auto p = eig_tridiag({{2.0, 2.0}, {1.0}});
    CHECK(p[0].value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p[1].value == doctest::Approx(3.0).epsilon(1e-14));

    const auto single = eig_tridiag({{4.2}, {}});
    CHECK(single[0].value == 4.2);
    CHECK(single[0].vector[0] == 1.0);
}

TEST_CASE("agreement with the dense rotation oracle") {
    auto rng = testutil::seeded_rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const TridiagSym T = random_tridiag(rng, 6);
        const auto mine = eig_tridiag(T);
        const auto dense = testutil::dense_jacobi_eigenvalues(densify(T));
        for (int i = 0; i < 6; ++i)
            CHECK(std::abs(mine[i].value - dense[i]) <= 1e-10 * (1.0 + std::abs(dense[i])));
    }
}

TEST_CASE("residuals and orthonormality") {
    auto rng = testutil::seeded_rng(55);
    for (int n : {2, 3, 7, 16, 33}) {
        const TridiagSym T = random_tridiag(rng, n);
        const double bound = T.norm_bound();
        const auto pairs = eig_tridiag(T);
        REQUIRE(static_cast<int>(pairs.size()) == n);
        for (int a = 0; a < n; ++a) {
            const auto& v = pairs[a].vector;
            double res = 0.0;
            for (int i = 0; i < n; ++i) {
                double tv = T.diag[i] * v[i];
                if (i > 0) tv += T.off[i - 1] * v[i - 1];
                if (i + 1 < n) tv += T.off[i] * v[i + 1];
                res += (tv - pairs[a].value * v[i]) * (tv - pairs[a].value * v[i]);
            }
            CHECK(std::sqrt(res) <= 1e-12 * std::max(bound, 1.0));
            for (int b = 0; b <= a; ++b) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += v[i] * pairs[b].vector[i];
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-11);
            }
        }
        // Ascending order.
        for (int a = 1; a < n; ++a) CHECK(pairs[a].value >= pairs[a - 1].value);
    }
}

TEST_CASE("sturm count brackets the spectrum") {
    auto rng = testutil::seeded_rng(77);
    const TridiagSym T = random_tridiag(rng, 12);
    const auto pairs = eig_tridiag(T);
    const double lo = pairs.front().value, hi = pairs.back().value;
    CHECK(sturm_count(T, lo - 1.0) == 0);
    CHECK(sturm_count(T, hi + 1.0) == 12);
    CHECK(sturm_count(T, 0.5 * (pairs[3].value + pairs[4].value)) == 4);
}

TEST_CASE("lowest-count variant matches the full solve") {
    auto rng = testutil::seeded_rng(99);
    const TridiagSym T = random_tridiag(rng, 20);
    const auto full = eig_tridiag(T);
    const auto low = eig_tridiag_lowest(T, 5);
    REQUIRE(low.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(low[i].value == doctest::Approx(full[i].value).epsilon(1e-13));
        double dot = 0.0;
        for (std::size_t j = 0; j < T.size(); ++j) dot += low[i].vector[j] * full[i].vector[j];
        CHECK(std::abs(std::abs(dot) - 1.0) <= 1e-11);
    }
    CHECK_THROWS_AS(eig_tridiag_lowest(T, 21), std::invalid_argument);
}

TEST_CASE("input validation") {
    TridiagSym bad;
    bad.diag = {1.0, 2.0};
    bad.off = {};
    CHECK_THROWS_AS(eig_tridiag(bad), std::invalid_argument);
}
