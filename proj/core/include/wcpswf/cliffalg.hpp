#ifndef WCPSWF_CLIFFALG_HPP
#define WCPSWF_CLIFFALG_HPP

// Real Clifford algebra R_2 (generators e1, e2 with e1^2 = e2^2 = -1,
// e1 e2 = -e2 e1) plus the coefficient-level Dirac operator acting on
// radial elements F(x) = sum_s c_s x^s Y_k(x) in any dimension m >= 2.

#include <cmath>
#include <vector>

namespace wcpswf {

// Element of R_2 on the blade basis {1, e1, e2, e12}.
struct Multivector2 {
    double s = 0.0;   // scalar blade
    double e1 = 0.0;
    double e2 = 0.0;
    double e12 = 0.0; // pseudoscalar e1 e2

    Multivector2() = default;
    Multivector2(double s_, double e1_, double e2_, double e12_)
        : s(s_), e1(e1_), e2(e2_), e12(e12_) {}

    static Multivector2 scalar(double v) { return {v, 0.0, 0.0, 0.0}; }

    Multivector2& operator+=(const Multivector2& o) {
        s += o.s; e1 += o.e1; e2 += o.e2; e12 += o.e12;
        return *this;
    }
    Multivector2& operator-=(const Multivector2& o) {
        s -= o.s; e1 -= o.e1; e2 -= o.e2; e12 -= o.e12;
        return *this;
    }
    Multivector2& operator*=(double c) {
        s *= c; e1 *= c; e2 *= c; e12 *= c;
        return *this;
    }
};

inline Multivector2 operator+(Multivector2 a, const Multivector2& b) { return a += b; }
inline Multivector2 operator-(Multivector2 a, const Multivector2& b) { return a -= b; }
inline Multivector2 operator*(Multivector2 a, double c) { return a *= c; }
inline Multivector2 operator*(double c, Multivector2 a) { return a *= c; }
inline Multivector2 operator-(const Multivector2& a) { return {-a.s, -a.e1, -a.e2, -a.e12}; }

// Clifford product from the blade table:
//   e1 e1 = e2 e2 = e12 e12 = -1,
//   e1 e2 = e12,  e1 e12 = -e2,  e12 e1 = e2,  e2 e12 = e1,  e12 e2 = -e1.
inline Multivector2 operator*(const Multivector2& a, const Multivector2& b) {
    return {
        a.s * b.s - a.e1 * b.e1 - a.e2 * b.e2 - a.e12 * b.e12,
        a.s * b.e1 + a.e1 * b.s + a.e2 * b.e12 - a.e12 * b.e2,
        a.s * b.e2 + a.e2 * b.s - a.e1 * b.e12 + a.e12 * b.e1,
        a.s * b.e12 + a.e12 * b.s + a.e1 * b.e2 - a.e2 * b.e1,
    };
}

// Hermitian conjugation: bar(e_j) = -e_j, bar(ab) = bar(b) bar(a).
// On the basis: bar(1) = 1, bar(e1) = -e1, bar(e2) = -e2, bar(e12) = -e12.
inline Multivector2 conj(const Multivector2& a) { return {a.s, -a.e1, -a.e2, -a.e12}; }

// |a|^2 = [bar(a) a]_0 = sum of squared blade components.
inline double norm_sq(const Multivector2& a) {
    return a.s * a.s + a.e1 * a.e1 + a.e2 * a.e2 + a.e12 * a.e12;
}

// Scalar part of bar(a) b (the Hermitian inner product on R_2).
inline double inner(const Multivector2& a, const Multivector2& b) {
    return a.s * b.s + a.e1 * b.e1 + a.e2 * b.e2 + a.e12 * b.e12;
}

// The vector x = r cos(theta) e1 + r sin(theta) e2.
inline Multivector2 vector_from_polar(double r, double theta) {
    return {0.0, r * std::cos(theta), r * std::sin(theta), 0.0};
}

// Spherical monogenic basis of degree k in dimension 2:
//   Y_k(r, theta) = r^k / sqrt(2 pi) * (e1 cos(k theta) - e2 sin(k theta)).
// Orthonormal on the unit circle; satisfies x Y_k(x) = e1 Y_{k+1}(x).
Multivector2 spherical_monogenic(int k, double r, double theta);

// Radial element sum_s coeffs[s] x^s Y_k(x) in R^m.  Only one parity of s
// may carry nonzero coefficients; conversion to the t = |x|^2 basis uses
// x^(2l) = (-1)^l t^l.
struct RadialElement {
    int k = 0;
    int m = 2;
    std::vector<double> coeffs; // coeffs[s] multiplies x^s Y_k

    bool single_parity(double tol = 0.0) const;
};

// Coefficient-level Dirac operator:
//   d_x [x^s Y_k] = -s x^(s-1) Y_k                 (s even)
//   d_x [x^s Y_k] = -(s + 2k + m - 1) x^(s-1) Y_k  (s odd).
// The output parity is flipped.
RadialElement dirac_radial(const RadialElement& e);

// Coefficients in the t = |x|^2 basis.  For an even element returns p with
// sum_l p[l] t^l;  for an odd element the polynomial factor multiplying
// x Y_k.  Throws std::invalid_argument on mixed parity.
std::vector<double> to_t_basis(const RadialElement& e);

} // namespace wcpswf

#endif
