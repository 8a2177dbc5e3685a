#include "wcpswf/quadrature.hpp"

#include "wcpswf/tridiag.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wcpswf {

double QuadRule::total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

QuadRule gauss_jacobi_rule(int npts, double a, double b) {
    if (npts < 1) throw std::invalid_argument("gauss_jacobi_rule: npts must be >= 1");
    if (a <= -1.0 || b <= -1.0)
        throw std::invalid_argument("gauss_jacobi_rule: weight exponents must exceed -1");

    // Monic recurrence for (1-x)^a (1+x)^b:  p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
    TridiagSym J;
    J.diag.resize(npts);
    J.off.resize(npts - 1);
    const double apb = a + b;
    J.diag[0] = (b - a) / (apb + 2.0);
    for (int k = 1; k < npts; ++k) {
        const double den = (2.0 * k + apb) * (2.0 * k + apb + 2.0);
        J.diag[k] = (b * b - a * a) / den;
    }
    for (int k = 1; k < npts; ++k) {
        double bk;
        if (k == 1) {
            // k = 1 written with (1+a+b) cancelled; the general form is 0/0
            // at a+b = -1.
            bk = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + apb) * (2.0 + apb) * (3.0 + apb));
        } else {
            const double s = 2.0 * k + apb;
            bk = 4.0 * k * (k + a) * (k + b) * (k + apb) / (s * s * (s + 1.0) * (s - 1.0));
        }
        J.off[k - 1] = std::sqrt(bk);
    }

    // Zeroth moment 2^(a+b+1) B(a+1, b+1).
    const double mu0 = std::exp((apb + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) +
                                std::lgamma(b + 1.0) - std::lgamma(apb + 2.0));

    const auto pairs = eig_tridiag(J);
    QuadRule rule;
    rule.exponent_left = a;
    rule.exponent_right = b;
    rule.nodes.reserve(npts);
    rule.weights.reserve(npts);
    for (const auto& p : pairs) {
        rule.nodes.push_back(p.value);
        rule.weights.push_back(mu0 * p.vector[0] * p.vector[0]);
    }
    return rule;
}

QuadRule radial_rule(int npts, int k, int m, double alpha) {
    if (k < 0) throw std::invalid_argument("radial_rule: k must be >= 0");
    if (m < 2) throw std::invalid_argument("radial_rule: m must be >= 2");
    if (alpha <= -1.0) throw std::invalid_argument("radial_rule: alpha must exceed -1");
    const double b = k + 0.5 * m - 1.0;
    QuadRule base = gauss_jacobi_rule(npts, alpha, b);
    // Map x in [-1,1] to t = (x+1)/2; the weight picks up 2^-(alpha+b+1).
    const double scale = std::exp(-(alpha + b + 1.0) * std::numbers::ln2);
    QuadRule rule;
    rule.exponent_left = alpha;
    rule.exponent_right = b;
    rule.lo = 0.0;
    rule.hi = 1.0;
    rule.nodes.resize(base.nodes.size());
    rule.weights.resize(base.weights.size());
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        rule.nodes[i] = 0.5 * (base.nodes[i] + 1.0);
        rule.weights[i] = scale * base.weights[i];
    }
    return rule;
}

double weighted_radial_integral(const std::function<double(double)>& f, int k, int m,
                                double alpha, int npts) {
    const QuadRule rule = radial_rule(npts, k, m, alpha);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

DiskRule disk_rule(int nrad, int nang, double alpha) {
    if (nang < 1) throw std::invalid_argument("disk_rule: nang must be >= 1");
    const QuadRule t_rule = radial_rule(nrad, 0, 2, alpha); // weight (1-t)^alpha on [0,1]
    DiskRule d;
    d.r.resize(t_rule.nodes.size());
    d.wr.resize(t_rule.nodes.size());
    for (std::size_t i = 0; i < t_rule.nodes.size(); ++i) {
        d.r[i] = std::sqrt(t_rule.nodes[i]);
        d.wr[i] = 0.5 * t_rule.weights[i];
    }
    d.theta.resize(nang);
    for (int l = 0; l < nang; ++l) d.theta[l] = 2.0 * std::numbers::pi * l / nang;
    d.wtheta = 2.0 * std::numbers::pi / nang;
    return d;
}

} // namespace wcpswf
