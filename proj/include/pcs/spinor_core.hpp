#pragma once

#include "pcs/linalg.hpp"

// Two-component spinor calculus: the vector <-> hermitian-matrix map, the
// spinor <-> null-vector correspondence with its canonical section, the
// SL(2,C) -> Lorentz double cover, boosts as matrix square roots, polar
// decomposition, and orthonormal null tetrads.

namespace pcs {

// x = X^mu sigma_mu with sigma_0 = 1; det x = X.X.
Mat2 vector_to_matrix(const FourVector& X);

// Inverse of vector_to_matrix; throws if x is not hermitian to 1e-10.
FourVector matrix_to_vector(const Mat2& x);

// I^mu = cbar sigma^mu c; null and future-pointing. Throws on zero spinor.
FourVector null_from_spinor(const Spinor& c);

// Canonical section spinor of a future null vector. At the singular
// direction (I^0 + I^3 below delta_section * I^0) returns (0, sqrt(I^0)).
Spinor spinor_from_null(const FourVector& I);

inline constexpr double section_delta = 1e-8;

// Lorentz matrix of alpha: Lambda(alpha) X = matrix_to_vector(alpha x alpha^dag).
Mat4 sl2c_to_lorentz(const Mat2& alpha);

// Hermitian positive omega_I = (1 + Itilde)/sqrt(2(1+I^0)) with omega^2 = Itilde;
// requires I unit timelike future-pointing.
Mat2 boost_spinor_matrix(const FourVector& I);

struct PolarDecomposition {
    Mat2 omega;  // hermitian positive, det 1
    Mat2 u;      // unitary, det 1
};

// alpha = omega u via the closed-form square root of alpha alpha^dag.
PolarDecomposition polar_decompose(const Mat2& alpha);

struct NullTetrad {
    FourVector I, J;    // future null
    FourVector m1, m2;  // unit spacelike
    Spinor iota, j;
};

// Tetrad of a spinor pair with iota eps j = 1 (checked to 1e-10).
NullTetrad tetrad_from_spinors(const Spinor& iota, const Spinor& j);

// eta^{mu nu} as a FourVector-indexed table (diag(1,-1,-1,-1)).
inline double eta(int mu, int nu) { return mu != nu ? 0.0 : (mu == 0 ? 1.0 : -1.0); }

// Checks for proper orthochronous Lorentz matrices.
double lorentz_defect(const Mat4& L);     // max |L^T eta L - eta| entry
bool is_proper_orthochronous(const Mat4& L, double tol = 1e-9);
double det4(const Mat4& L);

}  // namespace pcs
