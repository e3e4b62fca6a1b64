#pragma once

#include <vector>

#include "pcs/spinor_core.hpp"

// Finite-dimensional SU(2) irreducibles as symmetric tensor powers of the
// fundamental, their non-unitary SL(2,C) extensions, and SU(2) coherent
// states. r is twice the spin; the representation space has dimension r+1.
// Basis: symmetric monomials with binomial normalisation, highest weight
// first, so the reference vector is (1,0,...,0).

namespace pcs {

struct RepMatrix {
    int r = 0;
    std::vector<cplx> m;  // (r+1)x(r+1), row-major

    int dim() const { return r + 1; }
    cplx& at(int i, int j) { return m[i * dim() + j]; }
    cplx at(int i, int j) const { return m[i * dim() + j]; }
};

RepMatrix rep_matrix(const Mat2& alpha, int r);

RepMatrix rep_mul(const RepMatrix& a, const RepMatrix& b);

std::vector<cplx> rep_apply(const RepMatrix& a, const std::vector<cplx>& v);

// <0| D^(r)(beta) |0> together with the closed form (beta_00)^r it must equal.
cplx highest_weight_overlap(const Mat2& beta, int r);

// Coordinates of the r-fold symmetric power of a single spinor:
// component k = sqrt(C(r,k)) w0^{r-k} w1^k. For unit w this is D(u)|0> with
// u any SU(2) element whose first column is w.
std::vector<cplx> sym_power(const Spinor& w, int r);

// SU(2) element rotating zhat to mhat about zhat x mhat; at mhat = -zhat the
// rotation axis is fixed to xhat.
Mat2 su2_rotation(const Vec3& mhat);

// |mhat>_r = D(u(mhat))|0>_r; unit norm.
std::vector<cplx> su2_coherent(const Vec3& mhat, int r);

// (mtilde1* . mtilde2)^r, the closed-form coherent-state overlap.
cplx su2_overlap(const Vec3& m1, const Vec3& m2, int r);

double binomial(int n, int k);

}  // namespace pcs
