#ifndef WCPSWF_QUADRATURE_HPP
#define WCPSWF_QUADRATURE_HPP

// Gauss-Jacobi quadrature built by Golub-Welsch from the monic recurrence
// coefficients, plus the affine-mapped weighted rules on [0,1] used for
// every orthogonality and norm verification.

#include <functional>
#include <vector>

namespace wcpswf {

struct QuadRule {
    std::vector<double> nodes;   // strictly increasing, interior
    std::vector<double> weights; // all positive
    double exponent_left = 0.0;  // weight exponent at the right end (1-x)^a
    double exponent_right = 0.0; // weight exponent at the left end (1+x)^b
    double lo = -1.0;
    double hi = 1.0;

    double total_weight() const;
};

// n-point rule for weight (1-x)^a (1+x)^b on [-1,1]; exact for polynomials
// of degree <= 2n-1.  Requires a, b > -1.
QuadRule gauss_jacobi_rule(int npts, double a, double b);

// Rule for int_0^1 f(t) t^(k+m/2-1) (1-t)^alpha dt.
QuadRule radial_rule(int npts, int k, int m, double alpha);

// Approximates int_0^1 f(t) t^(k+m/2-1) (1-t)^alpha dt.
double weighted_radial_integral(const std::function<double(double)>& f, int k, int m,
                                double alpha, int npts);

// Tensorized polar rule for int_{B(1)} F(r,theta) (1-r^2)^alpha dx in the
// plane: Gauss-Jacobi in t = r^2 times the uniform (trapezoid) angular rule.
struct DiskRule {
    std::vector<double> r;      // radial nodes, sqrt of the t-rule nodes
    std::vector<double> wr;     // radial weights including the 1/2 from t = r^2
    std::vector<double> theta;  // uniform angles
    double wtheta = 0.0;        // 2 pi / n_angular
};

DiskRule disk_rule(int nrad, int nang, double alpha);

} // namespace wcpswf

#endif
