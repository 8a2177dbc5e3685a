#include "wcpswf/bessel.hpp"

#include "wcpswf/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wcpswf {

namespace {

constexpr double kSeriesCutoff = 10.0;

// Ascending series sum_j (-1)^j (x/2)^(nu+2j) / (j! Gamma(nu+j+1)) with
// Kahan compensation; terminates once a term drops below 1e-18 of the sum.
double series_j(double nu, double x) {
    const double h = 0.5 * x;
    double term = std::exp(nu * std::log(h) - std::lgamma(nu + 1.0));
    double sum = term, comp = 0.0;
    const double h2 = h * h;
    for (int j = 0; j < 500; ++j) {
        term *= -h2 / ((j + 1.0) * (nu + j + 1.0));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) return sum;
    }
    throw NumericalError("bessel_j: series did not terminate");
}

// One Miller sweep with start order offset `extra` above the estimated
// dominance point; returns J_{frac + n_int}(x).
double miller_sweep(double frac, int n_int, double x, int extra) {
    const int start = n_int + static_cast<int>(std::ceil(x)) + 15 + extra;
    std::vector<double> w(start + 2, 0.0);
    w[start + 1] = 0.0;
    w[start] = 1e-30;
    for (int mu = start; mu >= 1; --mu) {
        w[mu - 1] = (2.0 * (frac + mu) / x) * w[mu] - w[mu + 1];
        if (std::abs(w[mu - 1]) > 1e250) {
            for (int i = mu - 1; i <= start + 1; ++i) w[i] *= 1e-250;
        }
    }
    // Normalization sum over even ladder entries.
    double c = std::tgamma(frac + 1.0); // (frac + 0) term, written pole-free
    double s = c * w[0];
    if (2 <= start) {
        c = (frac + 2.0) * std::tgamma(frac + 1.0);
        s += c * w[2];
        for (int jp = 1; 2 * (jp + 1) <= start; ++jp) {
            c *= (frac + 2.0 * jp + 2.0) * (frac + jp) / ((frac + 2.0 * jp) * (jp + 1.0));
            s += c * w[2 * (jp + 1)];
        }
    }
    if (s == 0.0) throw NumericalError("bessel_j: degenerate normalization sum");
    return w[n_int] * std::exp(frac * std::log(0.5 * x)) / s;
}

double miller_j(double nu, double x) {
    const double n_floor = std::floor(nu);
    const int n_int = static_cast<int>(n_floor);
    const double frac = nu - n_floor;
    double prev = miller_sweep(frac, n_int, x, 20);
    for (int extra = 40; extra <= 200; extra += 40) {
        const double cur = miller_sweep(frac, n_int, x, extra);
        // |J| <= 1, so sweep agreement is meaningful in absolute terms even
        // next to a zero of J.
        if (std::abs(cur - prev) <= 2e-15 + 1e-15 * std::abs(cur)) return cur;
        prev = cur;
    }
    throw NumericalError("bessel_j: backward recurrence failed to stabilize");
}

} // namespace

double bessel_j(double nu, double x) {
    if (nu < 0.0) throw std::invalid_argument("bessel_j: nu must be >= 0");
    if (x < 0.0) throw std::invalid_argument("bessel_j: x must be >= 0");
    if (x == 0.0) return (nu == 0.0) ? 1.0 : 0.0;
    if (x < kSeriesCutoff) return series_j(nu, x);
    return miller_j(nu, x);
}

double bessel_kernel_limit(double nu) {
    if (nu < 0.0) throw std::invalid_argument("bessel_kernel_limit: nu must be >= 0");
    return std::exp(nu * std::log(std::numbers::pi) - std::lgamma(nu + 1.0));
}

double bessel_j_over_pow(double nu, double rho) {
    if (nu < 0.0 || rho < 0.0)
        throw std::invalid_argument("bessel_j_over_pow: arguments must be >= 0");
    const double x = 2.0 * std::numbers::pi * rho;
    if (x < kSeriesCutoff) {
        // Scaled series: sum_j (-1)^j pi^nu (pi rho)^(2j) / (j! Gamma(nu+j+1)).
        double term = bessel_kernel_limit(nu);
        double sum = term, comp = 0.0;
        const double p2 = std::numbers::pi * rho * std::numbers::pi * rho;
        for (int j = 0; j < 500; ++j) {
            term *= -p2 / ((j + 1.0) * (nu + j + 1.0));
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) return sum;
        }
        throw NumericalError("bessel_j_over_pow: series did not terminate");
    }
    return bessel_j(nu, x) * std::exp(-nu * std::log(rho));
}

} // namespace wcpswf
