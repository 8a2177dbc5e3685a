#include "wcpswf/cgp.hpp"

#include "wcpswf/errors.hpp"
#include "wcpswf/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wcpswf {

namespace {
constexpr double kDegenTol = 1e-12;

void check_denominator(double den, const char* where) {
    if (std::abs(den) < kDegenTol)
        throw DegenerateParameterError(std::string(where) + ": denominator " +
                                       std::to_string(den) + " below 1e-12");
}
} // namespace

void validate(const CgpSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("cgp: n must be >= 0");
    if (spec.k < 0) throw std::invalid_argument("cgp: k must be >= 0");
    if (spec.m < 2) throw std::invalid_argument("cgp: m must be >= 2");
    if (spec.alpha <= -1.0) throw std::invalid_argument("cgp: alpha must exceed -1");
}

double RadialPoly::value(double t) const {
    double v = 0.0;
    for (std::size_t i = tcoeffs.size(); i-- > 0;) v = v * t + tcoeffs[i];
    return v;
}

RadialPoly RadialPoly::derivative() const {
    RadialPoly d = *this;
    if (tcoeffs.size() <= 1) {
        d.tcoeffs.assign(1, 0.0);
        return d;
    }
    d.tcoeffs.resize(tcoeffs.size() - 1);
    for (std::size_t l = 1; l < tcoeffs.size(); ++l)
        d.tcoeffs[l - 1] = static_cast<double>(l) * tcoeffs[l];
    return d;
}

double cgp_ode_eigenvalue(double alpha, int n, int m, int k) {
    if (n % 2 == 0) return n * (2.0 * alpha + n + m + 2.0 * k);
    return (2.0 * alpha + n + 1.0) * (n + m + 2.0 * k - 1.0);
}

double cgp_log_norm_sq(const CgpSpec& spec) {
    validate(spec);
    const int N = spec.order();
    const double a = spec.alpha, mu = spec.mu();
    const double ln2 = std::numbers::ln2;
    if (spec.parity() == Parity::Even) {
        return 4.0 * N * ln2 + 2.0 * std::lgamma(a + 2.0 * N + 1.0) + std::lgamma(mu + N) +
               std::lgamma(N + 1.0) - ln2 - std::lgamma(a + N + 1.0) -
               std::lgamma(a + mu + N) - std::log(a + mu + 2.0 * N);
    }
    return (4.0 * N + 2.0) * ln2 + 2.0 * std::lgamma(a + 2.0 * N + 2.0) +
           std::lgamma(mu + N + 1.0) + std::lgamma(N + 1.0) - ln2 -
           std::lgamma(a + N + 1.0) - std::lgamma(a + mu + N + 1.0) -
           std::log(a + mu + 2.0 * N + 1.0);
}

double cgp_norm_sq(const CgpSpec& spec) { return std::exp(cgp_log_norm_sq(spec)); }

RadialPoly cgp_radial(const CgpSpec& spec, bool normalized) {
    validate(spec);
    if (spec.n > kCgpMaxDegree)
        throw std::invalid_argument("cgp_radial: power-basis degree cap is n <= 60");
    const int N = spec.order();
    const double a = spec.alpha, mu = spec.mu();
    RadialPoly p;
    p.parity = spec.parity();
    p.k = spec.k;
    p.m = spec.m;
    p.alpha = a;
    p.tcoeffs.resize(N + 1);
    const double log_scale = normalized ? 0.5 * cgp_log_norm_sq(spec) : 0.0;
    // Only the leading constant goes through exp(lgamma); successive
    // coefficients come from exact ratios so the alternating cancellation in
    // the sum is not polluted by per-coefficient log-gamma noise.
    if (spec.parity() == Parity::Even) {
        p.weight_exponent = mu - 1.0;
        const double lead = 2.0 * N * std::numbers::ln2 + std::lgamma(a + 2.0 * N + 1.0) +
                            std::lgamma(mu + N) - std::lgamma(a + N + 1.0) -
                            std::lgamma(mu + N + a);
        p.tcoeffs[0] = std::exp(lead + std::lgamma(mu + N + a) - std::lgamma(mu) - log_scale);
        for (int l = 0; l < N; ++l)
            p.tcoeffs[l + 1] = -p.tcoeffs[l] * (static_cast<double>(N - l) / (l + 1.0)) *
                               ((l + mu + N + a) / (l + mu));
    } else {
        p.weight_exponent = mu;
        const double lead = (2.0 * N + 1.0) * std::numbers::ln2 +
                            std::lgamma(a + 2.0 * N + 2.0) + std::lgamma(mu + N + 1.0) -
                            std::lgamma(a + N + 1.0) - std::lgamma(mu + N + a + 1.0);
        p.tcoeffs[0] =
            -std::exp(lead + std::lgamma(mu + N + 1.0 + a) - std::lgamma(mu + 1.0) - log_scale);
        for (int l = 0; l < N; ++l)
            p.tcoeffs[l + 1] = -p.tcoeffs[l] * (static_cast<double>(N - l) / (l + 1.0)) *
                               ((l + mu + N + 1.0 + a) / (l + mu + 1.0));
    }
    return p;
}

namespace {

// log of the positive prefactor in the Jacobi representation.
double jacobi_rep_log_scale(const CgpSpec& spec) {
    const int N = spec.order();
    const double a = spec.alpha;
    if (spec.parity() == Parity::Even)
        return 2.0 * N * std::numbers::ln2 + log_pochhammer(a + N + 1.0, N) +
               std::lgamma(N + 1.0);
    return (2.0 * N + 1.0) * std::numbers::ln2 + log_pochhammer(a + N + 1.0, N + 1) +
           std::lgamma(N + 1.0);
}

double jacobi_rep_sign(const CgpSpec& spec) {
    const int N = spec.order();
    const bool even = spec.parity() == Parity::Even;
    const int flips = even ? N : N + 1;
    return (flips % 2 == 0) ? 1.0 : -1.0;
}

} // namespace

double cgp_radial_value(const CgpSpec& spec, double t, bool normalized) {
    validate(spec);
    const int N = spec.order();
    const double a = spec.alpha;
    const double b = (spec.parity() == Parity::Even) ? spec.mu() - 1.0 : spec.mu();
    double lg = jacobi_rep_log_scale(spec);
    if (normalized) lg -= 0.5 * cgp_log_norm_sq(spec);
    return jacobi_rep_sign(spec) * std::exp(lg) * jacobi_eval({N, a, b}, 2.0 * t - 1.0);
}

double cgp_radial_deriv(const CgpSpec& spec, double t, int order, bool normalized) {
    validate(spec);
    if (order != 1 && order != 2)
        throw std::invalid_argument("cgp_radial_deriv: order must be 1 or 2");
    const int N = spec.order();
    const double a = spec.alpha;
    const double b = (spec.parity() == Parity::Even) ? spec.mu() - 1.0 : spec.mu();
    double lg = jacobi_rep_log_scale(spec);
    if (normalized) lg -= 0.5 * cgp_log_norm_sq(spec);
    // d/dt = 2 d/dx at x = 2t-1.
    const double scale = jacobi_rep_sign(spec) * std::exp(lg) * std::pow(2.0, order);
    return scale * jacobi_deriv({N, a, b}, 2.0 * t - 1.0, order);
}

BonnetCoeffs bonnet_even(int N, double alpha, int k, int m) {
    validate({2 * N, m, k, alpha});
    const double mu = k + 0.5 * m;
    const double d1 = 2.0 * (alpha + 2.0 * N + 1.0) * (alpha + mu + 2.0 * N);
    const double d2 = alpha + mu + 2.0 * N;
    check_denominator(d1, "bonnet_even");
    check_denominator(d2, "bonnet_even");
    BonnetCoeffs c;
    c.raise = -(alpha + mu + N) / d1;
    c.lower = (N == 0) ? 0.0 : 2.0 * N * (alpha + 2.0 * N) / d2;
    return c;
}

BonnetCoeffs bonnet_odd(int N, double alpha, int k, int m) {
    validate({2 * N + 1, m, k, alpha});
    const double mu = k + 0.5 * m;
    const double d1 = 2.0 * (alpha + 2.0 * N + 2.0) * (alpha + mu + 2.0 * N + 1.0);
    const double d2 = alpha + mu + 2.0 * N + 1.0;
    check_denominator(d1, "bonnet_odd");
    check_denominator(d2, "bonnet_odd");
    BonnetCoeffs c;
    c.raise = -(alpha + N + 1.0) / d1;
    c.lower = 2.0 * (alpha + 2.0 * N + 1.0) * (mu + N) / d2;
    return c;
}

BonnetCoeffs normalized_bonnet_even(int N, double alpha, int k, int m) {
    BonnetCoeffs c = bonnet_even(N, alpha, k, m);
    const double ln_this = cgp_log_norm_sq({2 * N, m, k, alpha});
    c.raise *= std::exp(0.5 * (cgp_log_norm_sq({2 * N + 1, m, k, alpha}) - ln_this));
    if (N > 0)
        c.lower *= std::exp(0.5 * (cgp_log_norm_sq({2 * N - 1, m, k, alpha}) - ln_this));
    return c;
}

BonnetCoeffs normalized_bonnet_odd(int N, double alpha, int k, int m) {
    BonnetCoeffs c = bonnet_odd(N, alpha, k, m);
    const double ln_this = cgp_log_norm_sq({2 * N + 1, m, k, alpha});
    c.raise *= std::exp(0.5 * (cgp_log_norm_sq({2 * N + 2, m, k, alpha}) - ln_this));
    c.lower *= std::exp(0.5 * (cgp_log_norm_sq({2 * N, m, k, alpha}) - ln_this));
    return c;
}

XsqCoeffs xsq_action_even(int i, double alpha, int k, int m) {
    if (i < 0) throw std::invalid_argument("xsq_action_even: i must be >= 0");
    const BonnetCoeffs e = normalized_bonnet_even(i, alpha, k, m);
    const BonnetCoeffs o = normalized_bonnet_odd(i, alpha, k, m);
    XsqCoeffs x;
    x.up = -e.raise * o.raise;
    if (i == 0) {
        x.diag = -e.raise * o.lower;
        x.down = 0.0;
    } else {
        const BonnetCoeffs om1 = normalized_bonnet_odd(i - 1, alpha, k, m);
        x.diag = -(e.raise * o.lower + e.lower * om1.raise);
        x.down = -e.lower * om1.lower;
    }
    return x;
}

XsqCoeffs xsq_action_odd(int i, double alpha, int k, int m) {
    if (i < 0) throw std::invalid_argument("xsq_action_odd: i must be >= 0");
    const BonnetCoeffs o = normalized_bonnet_odd(i, alpha, k, m);
    const BonnetCoeffs e = normalized_bonnet_even(i, alpha, k, m);
    const BonnetCoeffs ep1 = normalized_bonnet_even(i + 1, alpha, k, m);
    XsqCoeffs x;
    x.up = -o.raise * ep1.raise;
    x.diag = -(o.raise * ep1.lower + o.lower * e.raise);
    x.down = -o.lower * e.lower; // e.lower = 0 at i = 0
    return x;
}

Multivector2 cgp_eval_2d(const CgpSpec& spec, double r, double theta, bool normalized) {
    validate(spec);
    if (spec.m != 2) throw std::invalid_argument("cgp_eval_2d: requires m = 2");
    const double t = r * r;
    const double radial = cgp_radial_value(spec, t, normalized);
    const Multivector2 yk = spherical_monogenic(spec.k, r, theta);
    if (spec.parity() == Parity::Even) return radial * yk;
    return radial * (vector_from_polar(r, theta) * yk);
}

} // namespace wcpswf
