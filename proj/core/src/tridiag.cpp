#include "wcpswf/tridiag.hpp"

#include "wcpswf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace wcpswf {

double TridiagSym::norm_bound() const {
    const std::size_t n = size();
    double bound = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(off[i - 1]);
        if (i + 1 < n) row += std::abs(off[i]);
        bound = std::max(bound, row);
    }
    return bound;
}

int sturm_count(const TridiagSym& T, double x) {
    // LDL^T pivots of T - xI; the number of negative pivots equals the
    // number of eigenvalues below x (Wilkinson's bisection count).
    const std::size_t n = T.size();
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = (i == 0) ? 0.0 : T.off[i - 1];
        d = T.diag[i] - x - e * e / d;
        if (std::abs(d) < tiny) d = -tiny; // pivot breakdown: nudge as if negative
        if (d < 0.0) ++count;
    }
    return count;
}

namespace {

// Deterministic start vectors for inverse iteration.
struct SplitMix64 {
    std::uint64_t state;
    double next_unit() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return 2.0 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1.0;
    }
};

double bisect_eigenvalue(const TridiagSym& T, int index, double lo, double hi) {
    // Shrink [lo, hi) until it brackets only eigenvalue #index to ~4 ulp.
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval at rounding limit
        if (sturm_count(T, mid) > index)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Solve (T - lambda I) y = rhs in place by Gaussian elimination with
// partial pivoting (one extra superdiagonal of fill-in).
void solve_shifted(const TridiagSym& T, double lambda, std::vector<double>& y) {
    const std::size_t n = T.size();
    std::vector<double> a(n), b(n, 0.0), c(n, 0.0); // diag, super1, super2
    std::vector<double> sub(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = T.diag[i] - lambda;
        if (i + 1 < n) { b[i] = T.off[i]; sub[i + 1] = T.off[i]; }
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double floor_pivot = eps * std::max(T.norm_bound(), 1.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(sub[i + 1]) > std::abs(a[i])) {
            std::swap(a[i], sub[i + 1]);
            std::swap(b[i], a[i + 1]);
            std::swap(c[i], b[i + 1]);
            std::swap(y[i], y[i + 1]);
        }
        if (std::abs(a[i]) < floor_pivot) a[i] = (a[i] < 0 ? -1.0 : 1.0) * floor_pivot;
        const double m = sub[i + 1] / a[i];
        a[i + 1] -= m * b[i];
        b[i + 1] -= m * c[i];
        y[i + 1] -= m * y[i];
    }
    if (std::abs(a[n - 1]) < floor_pivot)
        a[n - 1] = (a[n - 1] < 0 ? -1.0 : 1.0) * floor_pivot;
    for (std::size_t ii = n; ii-- > 0;) {
        double v = y[ii];
        if (ii + 1 < n) v -= b[ii] * y[ii + 1];
        if (ii + 2 < n) v -= c[ii] * y[ii + 2];
        y[ii] = v / a[ii];
    }
}

void normalize(std::vector<double>& v) {
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw NumericalError("eig_tridiag: zero vector in inverse iteration");
    for (double& x : v) x /= nrm;
}

void orthogonalize_against(std::vector<double>& v, const std::vector<double>& u) {
    double dot = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * u[i];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * u[i];
}

} // namespace

std::vector<Eigenpair> eig_tridiag_lowest(const TridiagSym& T, int count) {
    const std::size_t n = T.size();
    if (T.off.size() + 1 != n && n != 0)
        throw std::invalid_argument("eig_tridiag: off-diagonal length must be n-1");
    if (count < 0 || static_cast<std::size_t>(count) > n)
        throw std::invalid_argument("eig_tridiag_lowest: count out of range");
    if (n == 0 || count == 0) return {};
    if (n == 1) return {{T.diag[0], {1.0}}};

    const double bound = T.norm_bound();
    const double pad = std::max(bound, 1.0) * 16.0 * std::numeric_limits<double>::epsilon();

    const std::size_t want = static_cast<std::size_t>(count);
    std::vector<double> values(want);
    for (std::size_t idx = 0; idx < want; ++idx)
        values[idx] = bisect_eigenvalue(T, static_cast<int>(idx), -bound - pad, bound + pad);

    const double cluster_gap = std::max(bound, 1.0) * 1e-10;
    std::vector<Eigenpair> out(want);
    for (std::size_t idx = 0; idx < want; ++idx) {
        std::vector<double> v(n);
        SplitMix64 rng{0x2545f4914f6cdd1dull ^ (static_cast<std::uint64_t>(idx) << 17) ^ n};
        for (double& x : v) x = rng.next_unit();
        normalize(v);
        bool converged = false;
        for (int iter = 0; iter < 8 && !converged; ++iter) {
            solve_shifted(T, values[idx], v);
            // Re-orthogonalize inside eigenvalue clusters before normalizing.
            for (std::size_t j = idx; j-- > 0;) {
                if (values[idx] - values[j] > cluster_gap) break;
                orthogonalize_against(v, out[j].vector);
            }
            normalize(v);
            // Residual check: ||Tv - lambda v||.
            double res = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double tv = T.diag[i] * v[i];
                if (i > 0) tv += T.off[i - 1] * v[i - 1];
                if (i + 1 < n) tv += T.off[i] * v[i + 1];
                const double r = tv - values[idx] * v[i];
                res += r * r;
            }
            converged = std::sqrt(res) <= 64.0 * std::numeric_limits<double>::epsilon() *
                                             std::max(bound, 1.0);
        }
        if (!converged)
            throw NumericalError("eig_tridiag: inverse iteration failed to converge");
        // Sign convention: largest-magnitude component positive.
        std::size_t imax = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
        if (v[imax] < 0.0)
            for (double& x : v) x = -x;
        out[idx] = {values[idx], std::move(v)};
    }
    return out;
}

std::vector<Eigenpair> eig_tridiag(const TridiagSym& T) {
    return eig_tridiag_lowest(T, static_cast<int>(T.size()));
}

} // namespace wcpswf
