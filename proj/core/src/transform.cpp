#include "wcpswf/transform.hpp"

#include "wcpswf/bessel.hpp"
#include "wcpswf/errors.hpp"
#include "wcpswf/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wcpswf {

namespace {

// (-i)^p as (cos, sin) components of the unit phase.
std::array<double, 2> minus_i_pow(int p) {
    switch (((p % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

} // namespace

TransformSample ft_cgp_closed(const CgpSpec& spec, double xi_modulus) {
    validate(spec);
    if (xi_modulus < 0.0)
        throw std::invalid_argument("ft_cgp_closed: xi_modulus must be >= 0");
    const double nu = spec.alpha + spec.mu() + spec.n;
    const double lg = spec.n * std::numbers::ln2 + std::lgamma(spec.n + spec.alpha + 1.0) -
                      spec.alpha * std::log(std::numbers::pi);
    TransformSample s;
    s.xi_modulus = xi_modulus;
    s.order = nu;
    s.radial_value = std::exp(lg) * bessel_j_over_pow(nu, xi_modulus);
    return s;
}

FourierValue ft_cgp_multivector(const CgpSpec& spec, Point2 xi, bool normalized) {
    validate(spec);
    if (spec.m != 2) throw std::invalid_argument("ft_cgp_multivector: requires m = 2");
    const double rho = std::hypot(xi.x, xi.y);
    const double angle = std::atan2(xi.y, xi.x);
    const int N = spec.order();
    const double nu = spec.alpha + spec.mu() + spec.n;

    double lg = spec.n * std::numbers::ln2 + std::lgamma(spec.n + spec.alpha + 1.0) -
                spec.alpha * std::log(std::numbers::pi);
    if (normalized) lg -= 0.5 * cgp_log_norm_sq(spec);
    const double radial =
        std::exp(lg) * bessel_j_over_pow(nu, rho) * std::pow(rho, 2.0 * N);

    Multivector2 blade;
    std::array<double, 2> phase{};
    if (spec.parity() == Parity::Even) {
        blade = radial * spherical_monogenic(spec.k, rho, angle);
        phase = minus_i_pow(spec.k);
    } else {
        // xi Y_k(xi) = e1 Y_{k+1}(xi); the odd profile's leading minus sign
        // is carried here so the radial factor above stays positive.
        const Multivector2 e1{0.0, 1.0, 0.0, 0.0};
        blade = (-radial) * (e1 * spherical_monogenic(spec.k + 1, rho, angle));
        phase = minus_i_pow(spec.k + 1);
    }
    return {phase[0] * blade, phase[1] * blade};
}

FourierValue ft_direct(const CgpSpec& spec, Point2 xi, int nrad, int nang) {
    validate(spec);
    if (spec.m != 2) throw std::invalid_argument("ft_direct: requires m = 2");
    const DiskRule rule = disk_rule(nrad, nang, spec.alpha);
    FourierValue F;
    for (std::size_t j = 0; j < rule.r.size(); ++j) {
        const double r = rule.r[j];
        for (std::size_t l = 0; l < rule.theta.size(); ++l) {
            const double th = rule.theta[l];
            const double px = r * std::cos(th), py = r * std::sin(th);
            const double w = rule.wr[j] * rule.wtheta;
            const double phase = 2.0 * std::numbers::pi * (px * xi.x + py * xi.y);
            const Multivector2 v = cgp_eval_2d(spec, r, th);
            F.cos_part += (w * std::cos(phase)) * v;
            F.sin_part += (-w * std::sin(phase)) * v; // e^{-i phase}
        }
    }
    return F;
}

FourierValue finite_fourier_closed(const CpswfEigenpair& pair, double c, Point2 x) {
    if (pair.m != 2) throw std::invalid_argument("finite_fourier_closed: requires m = 2");
    if (c < 0.0) throw std::invalid_argument("finite_fourier_closed: c must be >= 0");
    const Point2 xi{-c * x.x, -c * x.y};
    FourierValue F;
    for (std::size_t i = 0; i < pair.coeffs.size(); ++i) {
        const int n = (pair.parity == Parity::Even) ? 2 * static_cast<int>(i)
                                                    : 2 * static_cast<int>(i) + 1;
        const FourierValue term =
            ft_cgp_multivector({n, pair.m, pair.k, pair.alpha}, xi, true);
        F.cos_part += pair.coeffs[i] * term.cos_part;
        F.sin_part += pair.coeffs[i] * term.sin_part;
    }
    return F;
}

FourierValue finite_fourier_direct(const CpswfEigenpair& pair, double c, Point2 x, int nrad,
                                   int nang) {
    if (pair.m != 2) throw std::invalid_argument("finite_fourier_direct: requires m = 2");
    const DiskRule rule = disk_rule(nrad, nang, pair.alpha);
    FourierValue F;
    for (std::size_t j = 0; j < rule.r.size(); ++j) {
        const double r = rule.r[j];
        for (std::size_t l = 0; l < rule.theta.size(); ++l) {
            const double th = rule.theta[l];
            const double px = r * std::cos(th), py = r * std::sin(th);
            const double w = rule.wr[j] * rule.wtheta;
            const double phase = 2.0 * std::numbers::pi * c * (px * x.x + py * x.y);
            const Multivector2 v = cpswf_eval_2d(pair, r, th);
            F.cos_part += (w * std::cos(phase)) * v;
            F.sin_part += (w * std::sin(phase)) * v; // e^{+i phase}
        }
    }
    return F;
}

EigenQuality eigen_quality(const CpswfEigenpair& pair, double c, int nrad, int nang) {
    if (pair.m != 2) throw std::invalid_argument("eigen_quality: requires m = 2");
    const DiskRule rule = disk_rule(nrad, nang, pair.alpha);
    double dot_c = 0.0, dot_s = 0.0, nrm_psi = 0.0, nrm_g = 0.0;
    std::vector<Multivector2> psi_vals, gc_vals, gs_vals;
    psi_vals.reserve(rule.r.size() * rule.theta.size());
    gc_vals.reserve(psi_vals.capacity());
    gs_vals.reserve(psi_vals.capacity());
    std::vector<double> wts;
    wts.reserve(psi_vals.capacity());
    for (std::size_t j = 0; j < rule.r.size(); ++j) {
        for (std::size_t l = 0; l < rule.theta.size(); ++l) {
            const double r = rule.r[j], th = rule.theta[l];
            const double w = rule.wr[j] * rule.wtheta;
            const Point2 pt{r * std::cos(th), r * std::sin(th)};
            const Multivector2 psi = cpswf_eval_2d(pair, r, th);
            const FourierValue g = finite_fourier_closed(pair, c, pt);
            psi_vals.push_back(psi);
            gc_vals.push_back(g.cos_part);
            gs_vals.push_back(g.sin_part);
            wts.push_back(w);
            dot_c += w * inner(g.cos_part, psi);
            dot_s += w * inner(g.sin_part, psi);
            nrm_psi += w * norm_sq(psi);
            nrm_g += w * (norm_sq(g.cos_part) + norm_sq(g.sin_part));
        }
    }
    EigenQuality q;
    q.nrad = nrad;
    q.nang = nang;
    q.energy_ratio = nrm_g / nrm_psi;
    q.mu_cos = dot_c / nrm_psi;
    q.mu_sin = dot_s / nrm_psi;
    double res = 0.0;
    for (std::size_t i = 0; i < wts.size(); ++i) {
        const Multivector2 rc = gc_vals[i] - q.mu_cos * psi_vals[i];
        const Multivector2 rs = gs_vals[i] - q.mu_sin * psi_vals[i];
        res += wts[i] * (norm_sq(rc) + norm_sq(rs));
    }
    q.residual_rel = std::sqrt(res / nrm_psi);
    return q;
}

} // namespace wcpswf
