#ifndef WCPSWF_TRIDIAG_HPP
#define WCPSWF_TRIDIAG_HPP

// Symmetric tridiagonal matrices and their full spectral decomposition.
// Eigenvalues by bisection on the Sturm negcount, eigenvectors by inverse
// iteration with partial pivoting; clusters are re-orthogonalized.

#include <cstddef>
#include <vector>

namespace wcpswf {

struct TridiagSym {
    std::vector<double> diag; // length n
    std::vector<double> off;  // length n-1

    std::size_t size() const { return diag.size(); }
    // Largest absolute row sum (Gershgorin scale).
    double norm_bound() const;
};

struct Eigenpair {
    double value = 0.0;
    std::vector<double> vector;
};

// Full decomposition, eigenvalues ascending, eigenvectors orthonormal with
// the largest-magnitude component made positive.  Throws NumericalError on
// non-convergence.
std::vector<Eigenpair> eig_tridiag(const TridiagSym& T);

// Lowest `count` eigenpairs only (bisection computes just those indices).
std::vector<Eigenpair> eig_tridiag_lowest(const TridiagSym& T, int count);

// Number of eigenvalues of T strictly below x (Sturm sequence negcount).
int sturm_count(const TridiagSym& T, double x);

} // namespace wcpswf

#endif
