#include "wcpswf/cpswf.hpp"

#include "wcpswf/errors.hpp"
#include "wcpswf/jacobi.hpp"
#include "wcpswf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wcpswf {

namespace {

void check_family(int k, int m, double alpha, double c) {
    if (k < 0) throw std::invalid_argument("cpswf: k must be >= 0");
    if (m < 2) throw std::invalid_argument("cpswf: m must be >= 2");
    if (alpha <= -1.0) throw std::invalid_argument("cpswf: alpha must exceed -1");
    if (c < 0.0) throw std::invalid_argument("cpswf: c must be >= 0");
}

constexpr double kTruncCap = 4096;

} // namespace

TridiagSym build_matrix_even(int k, int m, double alpha, double c, int size) {
    check_family(k, m, alpha, c);
    if (size < 2) throw std::invalid_argument("build_matrix_even: size must be >= 2");
    const double mu = k + 0.5 * m;
    const double q = 4.0 * std::numbers::pi * std::numbers::pi * c * c;
    TridiagSym T;
    T.diag.resize(size);
    T.off.resize(size - 1);
    for (int i = 0; i < size; ++i) {
        // The i(alpha+i)/(alpha+mu+2i-1) term vanishes at i = 0; skipping it
        // avoids 0/0 when alpha+mu = 1.
        double bracket = (alpha + mu + i) * (mu + i) / (alpha + mu + 2.0 * i + 1.0);
        if (i > 0) bracket += i * (alpha + i) / (alpha + mu + 2.0 * i - 1.0);
        T.diag[i] = 4.0 * i * (alpha + mu + i) + q / (alpha + mu + 2.0 * i) * bracket;
    }
    for (int i = 0; i + 1 < size; ++i) {
        const double num =
            std::sqrt((alpha + i + 1.0) * (i + 1.0) * (mu + i) * (alpha + mu + i));
        const double den = (alpha + mu + 2.0 * i + 1.0) *
                           std::sqrt((alpha + mu + 2.0 * i + 2.0) * (alpha + mu + 2.0 * i));
        T.off[i] = -q * num / den;
    }
    return T;
}

TridiagSym build_matrix_odd(int k, int m, double alpha, double c, int size) {
    check_family(k, m, alpha, c);
    if (size < 2) throw std::invalid_argument("build_matrix_odd: size must be >= 2");
    const double mu = k + 0.5 * m;
    const double q = 4.0 * std::numbers::pi * std::numbers::pi * c * c;
    TridiagSym T;
    T.diag.resize(size);
    T.off.resize(size - 1);
    for (int i = 0; i < size; ++i) {
        const double bracket =
            (alpha + mu + i) * (mu + i) / (alpha + mu + 2.0 * i) +
            (i + 1.0) * (alpha + i + 1.0) / (alpha + mu + 2.0 * i + 2.0);
        T.diag[i] =
            4.0 * (alpha + i + 1.0) * (mu + i) + q / (alpha + mu + 2.0 * i + 1.0) * bracket;
    }
    for (int i = 0; i + 1 < size; ++i) {
        const double num = std::sqrt((alpha + i + 1.0) * (i + 1.0) * (mu + i + 1.0) *
                                     (alpha + mu + i + 1.0));
        const double den =
            (alpha + mu + 2.0 * i + 2.0) *
            std::sqrt((alpha + mu + 2.0 * i + 1.0) * (alpha + mu + 2.0 * i + 3.0));
        T.off[i] = -q * num / den;
    }
    return T;
}

double parity_shift(double alpha, int k, int m) {
    return 4.0 * (alpha + 1.0) * (k + 0.5 * m);
}

namespace {

std::vector<CpswfEigenpair> extract_pairs(Parity parity, int k, int m, double alpha, double c,
                                          int count, int size) {
    const TridiagSym T = (parity == Parity::Even) ? build_matrix_even(k, m, alpha, c, size)
                                                  : build_matrix_odd(k, m, alpha, c, size);
    const auto eig = eig_tridiag_lowest(T, count);
    std::vector<CpswfEigenpair> out;
    out.reserve(count);
    double prev_chi = -std::numeric_limits<double>::infinity();
    for (int n = 0; n < count; ++n) {
        CpswfEigenpair p;
        p.parity = parity;
        p.N = n;
        p.k = k;
        p.m = m;
        p.alpha = alpha;
        p.c = c;
        p.chi = eig[n].value;
        p.coeffs = eig[n].vector;
        p.trunc = size;
        // Sign convention: the first coefficient above noise level (1e-12,
        // well under any genuine leading coefficient of a unit vector with
        // super-exponentially decaying tail) is positive.
        for (double v : p.coeffs) {
            if (std::abs(v) > 1e-12) {
                if (v < 0.0)
                    for (double& x : p.coeffs) x = -x;
                break;
            }
        }
        if (!(p.chi > prev_chi))
            throw NumericalError("cpswf_solve: chi sequence not strictly increasing");
        prev_chi = p.chi;
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

std::vector<CpswfEigenpair> cpswf_solve(Parity parity, int k, int m, double alpha, double c,
                                        int count, double tol) {
    if (count < 1) throw std::invalid_argument("cpswf_solve: count must be >= 1");
    int size = std::max(24, 2 * count + static_cast<int>(std::ceil(2.0 * std::numbers::e * c)) + 16);
    for (;;) {
        auto pairs = extract_pairs(parity, k, m, alpha, c, count, size);
        bool adequate = true;
        for (const auto& p : pairs)
            if (std::abs(p.coeffs.back()) > tol) { adequate = false; break; }
        if (adequate) return pairs;
        size *= 2;
        if (size > kTruncCap)
            throw NumericalError("cpswf_solve: truncation cap 4096 exceeded; required size > " +
                                 std::to_string(size / 2));
    }
}

std::vector<CpswfEigenpair> cpswf_solve_at(Parity parity, int k, int m, double alpha,
                                           double c, int count, int size) {
    if (count < 1) throw std::invalid_argument("cpswf_solve_at: count must be >= 1");
    if (size < std::max(2, count))
        throw std::invalid_argument("cpswf_solve_at: size too small for requested count");
    return extract_pairs(parity, k, m, alpha, c, count, size);
}

RadialPoly cpswf_radial(const CpswfEigenpair& pair) {
    RadialPoly sum;
    sum.parity = pair.parity;
    sum.k = pair.k;
    sum.m = pair.m;
    sum.alpha = pair.alpha;
    const double mu = pair.k + 0.5 * pair.m;
    sum.weight_exponent = (pair.parity == Parity::Even) ? mu - 1.0 : mu;
    for (int i = 0; i < static_cast<int>(pair.coeffs.size()); ++i) {
        const int n = (pair.parity == Parity::Even) ? 2 * i : 2 * i + 1;
        if (n > kCgpMaxDegree) {
            if (std::abs(pair.coeffs[i]) > 1e-13)
                throw NumericalError(
                    "cpswf_radial: significant coefficient beyond the CGP degree cap");
            break;
        }
        const RadialPoly term = cgp_radial({n, pair.m, pair.k, pair.alpha}, true);
        if (sum.tcoeffs.size() < term.tcoeffs.size()) sum.tcoeffs.resize(term.tcoeffs.size(), 0.0);
        for (std::size_t l = 0; l < term.tcoeffs.size(); ++l)
            sum.tcoeffs[l] += pair.coeffs[i] * term.tcoeffs[l];
    }
    return sum;
}

namespace {

// Evaluates sum_i w_i P_i^(a,b)(x) and optionally derivative ladders; the
// Jacobi values are generated by one pass of the degree recurrence.
double dot_with_jacobi_ladder(const std::vector<double>& w, double a, double b, double x) {
    if (w.empty()) return 0.0;
    double pm1 = 1.0;
    double acc = w[0] * pm1;
    if (w.size() == 1) return acc;
    double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    acc += w[1] * p;
    for (std::size_t q = 2; q < w.size(); ++q) {
        const double q2ab = 2.0 * q + a + b;
        const double c1 = 2.0 * q * (q + a + b) * (q2ab - 2.0);
        const double c2 = (q2ab - 1.0) * (a * a - b * b);
        const double c3 = (q2ab - 2.0) * (q2ab - 1.0) * q2ab;
        const double c4 = 2.0 * (q + a - 1.0) * (q + b - 1.0) * q2ab;
        const double next = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
        acc += w[q] * p;
    }
    return acc;
}

// Per-term weights alpha_i * (-1)^(..) * exp(scale_i) of the CGP Jacobi
// representation, with `normalized` unit norms folded in.
std::vector<double> jacobi_basis_weights(const CpswfEigenpair& pair) {
    std::vector<double> w(pair.coeffs.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int n = (pair.parity == Parity::Even) ? 2 * static_cast<int>(i)
                                                    : 2 * static_cast<int>(i) + 1;
        const CgpSpec spec{n, pair.m, pair.k, pair.alpha};
        const int N = static_cast<int>(i);
        const double a = pair.alpha;
        double lg;
        double sign;
        if (pair.parity == Parity::Even) {
            lg = 2.0 * N * std::numbers::ln2 + log_pochhammer(a + N + 1.0, N) +
                 std::lgamma(N + 1.0);
            sign = (N % 2 == 0) ? 1.0 : -1.0;
        } else {
            lg = (2.0 * N + 1.0) * std::numbers::ln2 + log_pochhammer(a + N + 1.0, N + 1) +
                 std::lgamma(N + 1.0);
            sign = (N % 2 == 0) ? -1.0 : 1.0;
        }
        lg -= 0.5 * cgp_log_norm_sq(spec);
        w[i] = pair.coeffs[i] * sign * std::exp(lg);
    }
    return w;
}

} // namespace

double cpswf_radial_value(const CpswfEigenpair& pair, double t) {
    const double mu = pair.k + 0.5 * pair.m;
    const double b = (pair.parity == Parity::Even) ? mu - 1.0 : mu;
    return dot_with_jacobi_ladder(jacobi_basis_weights(pair), pair.alpha, b, 2.0 * t - 1.0);
}

double cpswf_radial_deriv(const CpswfEigenpair& pair, double t, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("cpswf_radial_deriv: order must be 1 or 2");
    const double mu = pair.k + 0.5 * pair.m;
    const double a = pair.alpha;
    const double b = (pair.parity == Parity::Even) ? mu - 1.0 : mu;
    const std::vector<double> w = jacobi_basis_weights(pair);
    // d/dt P_i^(a,b)(2t-1) = (i+a+b+1) P_(i-1)^(a+1,b+1)(2t-1), once more for
    // the second derivative.
    std::vector<double> shifted;
    if (order == 1) {
        if (w.size() <= 1) return 0.0;
        shifted.resize(w.size() - 1);
        for (std::size_t i = 1; i < w.size(); ++i)
            shifted[i - 1] = w[i] * (i + a + b + 1.0);
        return dot_with_jacobi_ladder(shifted, a + 1.0, b + 1.0, 2.0 * t - 1.0);
    }
    if (w.size() <= 2) return 0.0;
    shifted.resize(w.size() - 2);
    for (std::size_t i = 2; i < w.size(); ++i)
        shifted[i - 2] = w[i] * (i + a + b + 1.0) * (i + a + b + 2.0);
    return dot_with_jacobi_ladder(shifted, a + 2.0, b + 2.0, 2.0 * t - 1.0);
}

Multivector2 cpswf_eval_2d(const CpswfEigenpair& pair, double r, double theta) {
    if (pair.m != 2) throw std::invalid_argument("cpswf_eval_2d: requires m = 2");
    const double radial = cpswf_radial_value(pair, r * r);
    const Multivector2 yk = spherical_monogenic(pair.k, r, theta);
    if (pair.parity == Parity::Even) return radial * yk;
    return radial * (vector_from_polar(r, theta) * yk);
}

double sl_residual_even(const CpswfEigenpair& pair, double t) {
    if (pair.parity != Parity::Even)
        throw std::invalid_argument("sl_residual_even: pair must be even");
    const double P = cpswf_radial_value(pair, t);
    const double P1 = cpswf_radial_deriv(pair, t, 1);
    const double P2 = cpswf_radial_deriv(pair, t, 2);
    const double q = 4.0 * std::numbers::pi * std::numbers::pi * pair.c * pair.c;
    const double lin = pair.m + 2.0 * pair.k - t * (2.0 + pair.m + 2.0 * pair.k + 2.0 * pair.alpha);
    return 4.0 * t * (1.0 - t) * P2 + 2.0 * lin * P1 - q * t * P + pair.chi * P;
}

double sl_residual_odd(const CpswfEigenpair& pair, double t) {
    if (pair.parity != Parity::Odd)
        throw std::invalid_argument("sl_residual_odd: pair must be odd");
    const double Q = cpswf_radial_value(pair, t);
    const double Q1 = cpswf_radial_deriv(pair, t, 1);
    const double Q2 = cpswf_radial_deriv(pair, t, 2);
    const double q = 4.0 * std::numbers::pi * std::numbers::pi * pair.c * pair.c;
    const int k1 = pair.k + 1;
    const double chi = pair.chi - parity_shift(pair.alpha, pair.k, pair.m);
    const double lin = pair.m + 2.0 * k1 - t * (2.0 + pair.m + 2.0 * k1 + 2.0 * pair.alpha);
    return 4.0 * t * (1.0 - t) * Q2 + 2.0 * lin * Q1 - q * t * Q + chi * Q;
}

double sl_residual_scale(const CpswfEigenpair& pair, double t) {
    const bool even = pair.parity == Parity::Even;
    const double P = cpswf_radial_value(pair, t);
    const double P1 = cpswf_radial_deriv(pair, t, 1);
    const double P2 = cpswf_radial_deriv(pair, t, 2);
    const double q = 4.0 * std::numbers::pi * std::numbers::pi * pair.c * pair.c;
    const int keff = even ? pair.k : pair.k + 1;
    const double chi =
        even ? pair.chi : pair.chi - parity_shift(pair.alpha, pair.k, pair.m);
    const double lin = pair.m + 2.0 * keff - t * (2.0 + pair.m + 2.0 * keff + 2.0 * pair.alpha);
    double s = std::abs(4.0 * t * (1.0 - t) * P2);
    s = std::max(s, std::abs(2.0 * lin * P1));
    s = std::max(s, std::abs(q * t * P));
    s = std::max(s, std::abs(chi * P));
    return s;
}

std::vector<std::vector<double>> gram_matrix(const std::vector<CpswfEigenpair>& pairs,
                                             int npts) {
    const std::size_t n = pairs.size();
    for (std::size_t i = 1; i < n; ++i) {
        if (pairs[i].m != pairs[0].m || pairs[i].alpha != pairs[0].alpha ||
            pairs[i].c != pairs[0].c)
            throw std::invalid_argument("gram_matrix: pairs must share (m, alpha, c)");
    }
    std::vector<std::vector<double>> G(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double v = 0.0;
            if (pairs[i].parity == pairs[j].parity && pairs[i].k == pairs[j].k) {
                // <psi_i, psi_j> = 1/2 int P_i P_j t^(k+m/2-1) (1-t)^alpha dt
                // (odd exponent k+m/2 is the even form with k+1).
                const int keff =
                    (pairs[i].parity == Parity::Even) ? pairs[i].k : pairs[i].k + 1;
                v = 0.5 * weighted_radial_integral(
                              [&](double t) {
                                  return cpswf_radial_value(pairs[i], t) *
                                         cpswf_radial_value(pairs[j], t);
                              },
                              keff, pairs[i].m, pairs[i].alpha, npts);
            }
            G[i][j] = v;
            G[j][i] = v;
        }
    }
    return G;
}

} // namespace wcpswf
