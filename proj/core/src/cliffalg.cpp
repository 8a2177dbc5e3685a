#include "wcpswf/cliffalg.hpp"

#include <stdexcept>

namespace wcpswf {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267794; // 1/sqrt(2 pi)
}

Multivector2 spherical_monogenic(int k, double r, double theta) {
    if (k < 0) throw std::invalid_argument("spherical_monogenic: k must be >= 0");
    const double rk = (k == 0) ? 1.0 : std::pow(r, k);
    const double c = rk * kInvSqrt2Pi;
    return {0.0, c * std::cos(k * theta), -c * std::sin(k * theta), 0.0};
}

bool RadialElement::single_parity(double tol) const {
    bool has_even = false, has_odd = false;
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
        if (std::abs(coeffs[s]) > tol) {
            (s % 2 == 0 ? has_even : has_odd) = true;
        }
    }
    return !(has_even && has_odd);
}

RadialElement dirac_radial(const RadialElement& e) {
    if (!e.single_parity())
        throw std::invalid_argument("dirac_radial: element must have a single parity");
    RadialElement out;
    out.k = e.k;
    out.m = e.m;
    if (e.coeffs.size() <= 1) return out; // constants map to zero
    out.coeffs.assign(e.coeffs.size() - 1, 0.0);
    for (std::size_t s = 1; s < e.coeffs.size(); ++s) {
        const double factor = (s % 2 == 0)
            ? -static_cast<double>(s)
            : -static_cast<double>(s + 2 * e.k + e.m - 1);
        out.coeffs[s - 1] += factor * e.coeffs[s];
    }
    return out;
}

std::vector<double> to_t_basis(const RadialElement& e) {
    if (!e.single_parity())
        throw std::invalid_argument("to_t_basis: element must have a single parity");
    bool odd = false;
    for (std::size_t s = 0; s < e.coeffs.size(); ++s)
        if (e.coeffs[s] != 0.0 && s % 2 == 1) { odd = true; break; }
    std::vector<double> t;
    for (std::size_t s = odd ? 1 : 0; s < e.coeffs.size(); s += 2) {
        const std::size_t l = (s - (odd ? 1 : 0)) / 2;
        if (t.size() <= l) t.resize(l + 1, 0.0);
        const double sign = (l % 2 == 0) ? 1.0 : -1.0; // x^(2l) = (-1)^l t^l
        t[l] += sign * e.coeffs[s];
    }
    return t;
}

} // namespace wcpswf
