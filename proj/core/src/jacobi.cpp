#include "wcpswf/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace wcpswf {

double pochhammer(double x, int j) {
    if (j < 0) throw std::invalid_argument("pochhammer: j must be >= 0");
    double p = 1.0;
    for (int i = 0; i < j; ++i) p *= x + i;
    return p;
}

double log_pochhammer(double x, int j) {
    if (j < 0) throw std::invalid_argument("log_pochhammer: j must be >= 0");
    if (x <= 0.0)
        throw std::invalid_argument("log_pochhammer: needs positive factors");
    return std::lgamma(x + j) - std::lgamma(x);
}

double log_choose(int n, int l) {
    return std::lgamma(n + 1.0) - std::lgamma(l + 1.0) - std::lgamma(n - l + 1.0);
}

static void check_index(const JacobiIndex& idx) {
    if (idx.n < 0) throw std::invalid_argument("jacobi: n must be >= 0");
    if (idx.alpha <= -1.0) throw std::invalid_argument("jacobi: alpha must exceed -1");
    if (idx.beta <= -1.0) throw std::invalid_argument("jacobi: beta must exceed -1");
}

double jacobi_eval(const JacobiIndex& idx, double x) {
    check_index(idx);
    const int n = idx.n;
    const double a = idx.alpha, b = idx.beta;
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int q = 2; q <= n; ++q) {
        const double q2ab = 2.0 * q + a + b;
        const double c1 = 2.0 * q * (q + a + b) * (q2ab - 2.0);
        const double c2 = (q2ab - 1.0) * (a * a - b * b);
        const double c3 = (q2ab - 2.0) * (q2ab - 1.0) * q2ab;
        const double c4 = 2.0 * (q + a - 1.0) * (q + b - 1.0) * q2ab;
        const double next = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return p;
}

double jacobi_eval_explicit(const JacobiIndex& idx, double x) {
    check_index(idx);
    const int n = idx.n;
    const double a = idx.alpha, b = idx.beta;
    const double h = 0.5 * (x - 1.0);
    double sum = 0.0;
    double hpow = 1.0;
    for (int s = 0; s <= n; ++s) {
        const double term = pochhammer(a + s + 1.0, n - s) * pochhammer(a + b + n + 1.0, s) /
                            (std::tgamma(s + 1.0) * std::tgamma(n - s + 1.0)) * hpow;
        sum += term;
        hpow *= h;
    }
    return sum;
}

double jacobi_deriv(const JacobiIndex& idx, double x, int order) {
    check_index(idx);
    if (order != 1 && order != 2)
        throw std::invalid_argument("jacobi_deriv: order must be 1 or 2");
    const int n = idx.n;
    const double a = idx.alpha, b = idx.beta;
    if (n < order) return 0.0;
    double scale = 0.5 * (n + a + b + 1.0);
    if (order == 1)
        return scale * jacobi_eval({n - 1, a + 1.0, b + 1.0}, x);
    scale *= 0.5 * (n + a + b + 2.0);
    return scale * jacobi_eval({n - 2, a + 2.0, b + 2.0}, x);
}

double jacobi_ode_residual(const JacobiIndex& idx, double x) {
    const double y = jacobi_eval(idx, x);
    const double y1 = jacobi_deriv(idx, x, 1);
    const double y2 = (idx.n >= 2) ? jacobi_deriv(idx, x, 2) : 0.0;
    const double a = idx.alpha, b = idx.beta, n = idx.n;
    return (1.0 - x * x) * y2 + (b - a - (a + b + 2.0) * x) * y1 + n * (n + a + b + 1.0) * y;
}

double jacobi_norm(const JacobiIndex& idx) {
    check_index(idx);
    const int n = idx.n;
    const double a = idx.alpha, b = idx.beta;
    // (a+b+2n+1) Gamma(a+b+n+1) rewritten for n = 0, where a+b+1 may vanish.
    double log_den;
    if (n == 0)
        log_den = std::lgamma(a + b + 2.0);
    else
        log_den = std::log(a + b + 2.0 * n + 1.0) + std::lgamma(a + b + n + 1.0) +
                  std::lgamma(n + 1.0);
    const double log_num = (a + b + 1.0) * std::log(2.0) + std::lgamma(a + n + 1.0) +
                           std::lgamma(b + n + 1.0);
    return std::exp(log_num - log_den);
}

} // namespace wcpswf
