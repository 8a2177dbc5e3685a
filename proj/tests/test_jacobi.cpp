#include "wcpswf/jacobi.hpp"

#include "helpers.hpp"
#include "wcpswf/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wcpswf;

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3.7, 0) == 1.0);
    CHECK(pochhammer(-5.0, 0) == 1.0);
    CHECK(pochhammer(3.0, 2) == 12.0);
    CHECK(pochhammer(0.5, 3) == doctest::Approx(1.875).epsilon(1e-15));
    CHECK(std::exp(log_pochhammer(0.5, 3)) == doctest::Approx(1.875).epsilon(1e-13));
}

TEST_CASE("evaluation basics") {
    CHECK(jacobi_eval({0, 1.3, -0.4}, 0.77) == 1.0);
    CHECK(jacobi_eval({2, 0, 0}, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // P_1^(a,b)(x) = (a+1) + (a+b+2)(x-1)/2
    CHECK(jacobi_eval({1, 0.5, -0.5}, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(jacobi_eval_explicit({1, 0.5, -0.5}, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(jacobi_eval({1, -1.0, 0.0}, 0.5), std::invalid_argument);
}

TEST_CASE("recurrence path agrees with the explicit sum") {
    auto rng = testutil::seeded_rng(11);
    // Strict tolerance where the sum is well conditioned (the expansion
    // variable (x-1)/2 stays in [-0.4, 0] and the Pochhammer growth is mild).
    std::uniform_real_distribution<double> ua0(-0.9, 1.0), ux0(0.2, 1.0);
    for (int n = 0; n <= 10; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const double a = ua0(rng), b = ua0(rng), x = ux0(rng);
            const double v1 = jacobi_eval({n, a, b}, x);
            const double v2 = jacobi_eval_explicit({n, a, b}, x);
            CHECK(std::abs(v1 - v2) <= 1e-11 * (std::abs(v1) + 1.0));
        }
    }
    // Full range with the tolerance scaled by the sum's term magnitudes.
    std::uniform_real_distribution<double> ua(-0.9, 3.0), ux(-1.0, 1.0);
    for (int n = 0; n <= 15; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const double a = ua(rng), b = ua(rng), x = ux(rng);
            const double v1 = jacobi_eval({n, a, b}, x);
            const double v2 = jacobi_eval_explicit({n, a, b}, x);
            double cond = 0.0, hpow = 1.0;
            for (int s = 0; s <= n; ++s) {
                cond += pochhammer(a + s + 1.0, n - s) * pochhammer(a + b + n + 1.0, s) /
                        (std::tgamma(s + 1.0) * std::tgamma(n - s + 1.0)) *
                        std::abs(hpow);
                hpow *= 0.5 * (x - 1.0);
            }
            CHECK(std::abs(v1 - v2) <= 1e-11 * (std::abs(v1) + 1.0) + 2e-14 * cond);
        }
    }
}

TEST_CASE("contiguous-parameter recurrences") {
    auto rng = testutil::seeded_rng(19);
    std::uniform_real_distribution<double> ua(-0.9, 3.0), ux(-1.0, 1.0);
    for (int n = 0; n <= 20; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            const double a = ua(rng), b = ua(rng), t = ux(rng);
            // (2n+a+b+1) P_n^(a,b) = (n+a+b+1) P_n^(a,b+1) + (n+a) P_(n-1)^(a,b+1)
            const double lhs = (2.0 * n + a + b + 1.0) * jacobi_eval({n, a, b}, t);
            double rhs = (n + a + b + 1.0) * jacobi_eval({n, a, b + 1.0}, t);
            if (n >= 1) rhs += (n + a) * jacobi_eval({n - 1, a, b + 1.0}, t);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(lhs) + std::abs(rhs) + 1.0));

            // (n+a/2+b/2+1)(1+t) P_n^(a,b+1) = (n+1) P_(n+1)^(a,b) + (n+b+1) P_n^(a,b)
            const double lhs2 =
                (n + 0.5 * a + 0.5 * b + 1.0) * (1.0 + t) * jacobi_eval({n, a, b + 1.0}, t);
            const double rhs2 = (n + 1.0) * jacobi_eval({n + 1, a, b}, t) +
                                (n + b + 1.0) * jacobi_eval({n, a, b}, t);
            CHECK(std::abs(lhs2 - rhs2) <= 1e-12 * (std::abs(lhs2) + std::abs(rhs2) + 1.0));
        }
    }
}

TEST_CASE("reflection identity") {
    auto rng = testutil::seeded_rng(5);
    std::uniform_real_distribution<double> ua(-0.9, 3.0), ux(-1.0, 1.0);
    for (int n = 0; n <= 20; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            const double a = ua(rng), b = ua(rng), z = ux(rng);
            const double lhs = jacobi_eval({n, a, b}, -z);
            const double rhs = ((n % 2 == 0) ? 1.0 : -1.0) * jacobi_eval({n, b, a}, z);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(lhs) + 1.0));
        }
    }
}

TEST_CASE("derivatives against central differences") {
    CHECK(jacobi_deriv({0, 0.7, 0.2}, 0.3, 1) == 0.0);
    CHECK(jacobi_deriv({0, 0.7, 0.2}, 0.3, 2) == 0.0);
    CHECK(jacobi_deriv({1, 0, 0}, -0.4, 1) == doctest::Approx(1.0).epsilon(1e-14));

    const JacobiIndex idx{3, 0.3, 1.2};
    const double x = 0.4, h = 1e-5;
    const double fd1 = (jacobi_eval(idx, x + h) - jacobi_eval(idx, x - h)) / (2.0 * h);
    CHECK(jacobi_deriv(idx, x, 1) == doctest::Approx(fd1).epsilon(1e-7));
    const double fd2 =
        (jacobi_eval(idx, x + h) - 2.0 * jacobi_eval(idx, x) + jacobi_eval(idx, x - h)) /
        (h * h);
    CHECK(jacobi_deriv(idx, x, 2) == doctest::Approx(fd2).epsilon(1e-5));
}

TEST_CASE("differential equation residual") {
    CHECK(jacobi_ode_residual({0, 0.2, 0.9}, 0.5) == 0.0);
    for (const JacobiIndex idx : {JacobiIndex{5, 0, 0}, JacobiIndex{4, -0.5, 1.0}}) {
        for (double x : {0.37, -0.8, 0.05}) {
            const double y = jacobi_eval(idx, x);
            const double scale =
                std::abs(idx.n * (idx.n + idx.alpha + idx.beta + 1.0) * y) + 1.0;
            CHECK(std::abs(jacobi_ode_residual(idx, x)) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("orthogonality against the closed-form norms") {
    const std::pair<double, double> params[] = {{0.0, 0.0}, {-0.5, 1.0}, {2.0, 0.3}};
    for (const auto& [a, b] : params) {
        const QuadRule rule = gauss_jacobi_rule(40, a, b);
        for (int mdeg = 0; mdeg <= 12; ++mdeg) {
            for (int ndeg = mdeg; ndeg <= 12; ++ndeg) {
                double acc = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                    acc += rule.weights[i] * jacobi_eval({mdeg, a, b}, rule.nodes[i]) *
                           jacobi_eval({ndeg, a, b}, rule.nodes[i]);
                const double hm = jacobi_norm({mdeg, a, b});
                const double hn = jacobi_norm({ndeg, a, b});
                if (mdeg == ndeg)
                    CHECK(std::abs(acc - hn) <= 1e-10 * hn);
                else
                    CHECK(std::abs(acc) <= 1e-10 * std::sqrt(hm * hn));
            }
        }
    }
}
