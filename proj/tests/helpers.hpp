#ifndef WCPSWF_TESTS_HELPERS_HPP
#define WCPSWF_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace testutil {

// Cyclic Jacobi rotations on a dense symmetric matrix; the brute-force
// oracle for the tridiagonal solver.  Returns eigenvalues ascending.
inline std::vector<double> dense_jacobi_eigenvalues(std::vector<std::vector<double>> A) {
    const std::size_t n = A.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += A[p][q] * A[p][q];
        if (off < 1e-300) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (A[p][q] == 0.0) continue;
                const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = A[i][p], aiq = A[i][q];
                    A[i][p] = cs * aip - sn * aiq;
                    A[i][q] = sn * aip + cs * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = A[p][i], aqi = A[q][i];
                    A[p][i] = cs * api - sn * aqi;
                    A[q][i] = sn * api + cs * aqi;
                }
            }
        }
    }
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = A[i][i];
    std::sort(vals.begin(), vals.end());
    return vals;
}

inline std::mt19937 seeded_rng(unsigned seed) { return std::mt19937(seed); }

} // namespace testutil

#endif
