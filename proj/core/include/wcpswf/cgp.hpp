#ifndef WCPSWF_CGP_HPP
#define WCPSWF_CGP_HPP

// Clifford Gegenbauer polynomials C_n(Y_k) on the unit ball of R^m with
// weight (1-|x|^2)^alpha: radial profiles over t = |x|^2, closed-form
// norms, the even/odd Bonnet three-term identities, the |x|^2 action on
// the normalized family, and pointwise evaluation in m = 2.
//
// Two construction paths are kept deliberately separate: the explicit
// power-basis coefficients (cgp_radial) and the Jacobi-polynomial
// representation behind cgp_radial_value; tests pit one against the other.

#include "wcpswf/cliffalg.hpp"

#include <vector>

namespace wcpswf {

enum class Parity { Even, Odd };

struct CgpSpec {
    int n = 0;          // degree; parity of n selects the branch
    int m = 2;          // ambient dimension, >= 2
    int k = 0;          // spherical monogenic degree
    double alpha = 0.0; // weight exponent, > -1

    double mu() const { return k + 0.5 * m; }
    Parity parity() const { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }
    int order() const { return n / 2; } // N within the parity class
};

// Radial profile: even elements are sum_l tcoeffs[l] t^l times Y_k, odd
// elements the same polynomial times x Y_k.
struct RadialPoly {
    Parity parity = Parity::Even;
    int k = 0;
    int m = 2;
    double alpha = 0.0;
    std::vector<double> tcoeffs;
    double weight_exponent = 0.0; // k+m/2-1 (even) or k+m/2 (odd)

    double value(double t) const;
    RadialPoly derivative() const;
    int degree() const { return tcoeffs.empty() ? 0 : static_cast<int>(tcoeffs.size()) - 1; }
};

// Coefficients of the three-term identity x C_n = raise * C_{n+1} + lower * C_{n-1}.
struct BonnetCoeffs {
    double raise = 0.0;
    double lower = 0.0;
};

// Coefficients of t C~_{2i} = up C~_{2i+2} + diag C~_{2i} + down C~_{2i-2}
// (even chain) and the analogous odd chain.
struct XsqCoeffs {
    double up = 0.0;
    double diag = 0.0;
    double down = 0.0;
};

// Hard cap on the CGP degree in double precision.
inline constexpr int kCgpMaxDegree = 60;

void validate(const CgpSpec& spec);

// Eigenvalue of the ball Gegenbauer operator on C_n:
//   n (2 alpha + n + m + 2k)           for even n,
//   (2 alpha + n + 1)(n + m + 2k - 1)  for odd n.
double cgp_ode_eigenvalue(double alpha, int n, int m, int k);

// log of the closed-form weighted L2(B(1)) norm^2 of C_n(Y_k).
double cgp_log_norm_sq(const CgpSpec& spec);
double cgp_norm_sq(const CgpSpec& spec);

// Explicit power-basis radial profile (the oracle construction path).
// Coefficients are assembled term by term in log-gamma form.
RadialPoly cgp_radial(const CgpSpec& spec, bool normalized = false);

// Radial profile value/derivatives through the Jacobi representation
//   C_2N   = (-1)^N     2^(2N)   (alpha+N+1)_N     N! P_N^(alpha, mu-1)(2t-1)
//   C_2N+1 = (-1)^(N+1) 2^(2N+1) (alpha+N+1)_(N+1) N! P_N^(alpha, mu)  (2t-1)
// which stays stable far beyond the power basis.
double cgp_radial_value(const CgpSpec& spec, double t, bool normalized = false);
double cgp_radial_deriv(const CgpSpec& spec, double t, int order, bool normalized = false);

// Bonnet coefficients of x C_2N and x C_(2N+1).
BonnetCoeffs bonnet_even(int N, double alpha, int k, int m);
BonnetCoeffs bonnet_odd(int N, double alpha, int k, int m);

// Same identities for the unit-norm family (each coefficient scaled by the
// ratio of the neighbouring norms).
BonnetCoeffs normalized_bonnet_even(int N, double alpha, int k, int m);
BonnetCoeffs normalized_bonnet_odd(int N, double alpha, int k, int m);

// t C~_{2i} three-term coefficients from two applications of the
// normalized Bonnet identities:
//   up = -raise_e(i) raise_o(i), diag = -[raise_e(i) lower_o(i) + lower_e(i) raise_o(i-1)],
//   down = -lower_e(i) lower_o(i-1).
XsqCoeffs xsq_action_even(int i, double alpha, int k, int m);
// t C~_{2i+1} counterpart.
XsqCoeffs xsq_action_odd(int i, double alpha, int k, int m);

// Pointwise multivector value in m = 2: even CGPs live on the e1/e2
// blades, odd ones on the scalar/e12 blades.
Multivector2 cgp_eval_2d(const CgpSpec& spec, double r, double theta, bool normalized = false);

} // namespace wcpswf

#endif
