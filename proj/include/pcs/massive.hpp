#pragma once

#include <functional>

#include "pcs/quadrature.hpp"
#include "pcs/su2.hpp"

// Massive representation (mass M, spin r/2): Gaussian reference vector,
// coherent family labelled by (X, I, mhat), resolution of unity on a
// constant-time surface, phase-space quantizer, and the closed-form
// connection / symplectic form / metric together with their coefficients.

namespace pcs::massive {

struct MassiveRep {
    double M = 1.0;
    int r = 0;
    double sigma = 0.1;
};

struct MassiveLabel {
    FourVector X;
    FourVector I;  // unit timelike, future
    Vec3 mhat;     // unit spin direction in the rest frame reached from n
    // derived at construction
    FourVector J;
    Mat2 alpha;  // omega_I * u(mhat) * optional gauge circle factor
    Spinor mu, lam;
};

// I is reconstructed from its spatial part; mhat is normalised.
MassiveLabel make_label(const FourVector& X, const Vec3& Ivec, const Vec3& mhat);
MassiveLabel make_label_I(const FourVector& X, const FourVector& I, const Vec3& mhat);

// alpha -> alpha diag(e^{i theta}, e^{-i theta}); mu -> e^{i theta} mu.
MassiveLabel gauge_rotate(const MassiveLabel& z, double theta);

// J = Lambda(omega_I) (0, mhat); I.J = 0, J.J = -1.
FourVector pauli_lubanski_direction(const FourVector& I, const Vec3& mhat);

// density of dmu_M in d^3 xi coordinates: M^2 / (2 sqrt(1+|xi|^2))
double measure_weight(const Vec3& xi_vec, double M);

// pointwise wavefunction values, r+1 spin components
std::vector<cplx> reference_wavefunction(const MassiveRep& rep, const FourVector& xi);
std::vector<cplx> coherent_wavefunction(const MassiveRep& rep, const MassiveLabel& z,
                                        const FourVector& xi);

// unitary action [U(alpha,X) psi](xi) for cross-checks
std::vector<cplx> u_action(const MassiveRep& rep, const Mat2& alpha, const FourVector& X,
                           const std::function<std::vector<cplx>(const FourVector&)>& psi,
                           const FourVector& xi);

// <z1|z2> over the invariant measure, tensor-grid quadrature centred between
// the two momentum labels; error from a half-resolution grid.
IntegralC overlap(const MassiveRep& rep, const MassiveLabel& z1, const MassiveLabel& z2,
                  const QuadratureSpec& quad);

struct MassiveCoefficients {
    double sigma = 0;
    double kappa = 0, omega = 0, v = 0;
    double kappa_err = 0, omega_err = 0, v_err = 0;
    double K_numeric[4][4] = {};  // K^{mu nu} = M^2 Cov(xi^mu, xi^nu) of the reference state
    double K_paper[4][4] = {};    // the closed-form evaluation it is compared against
    double K_diff_max = 0;
};

MassiveCoefficients massive_coefficients(double sigma, double M, const QuadratureSpec& quad);

struct MCEstimate {
    double value = 0;
    double err = 0;  // standard error (batch means)
};

// Monte-Carlo oracle for kappa (independent of the quadrature path).
MCEstimate kappa_mc(double sigma, const MCConfig& mc);

struct Tangent {
    FourVector dX;
    Vec3 dI;  // increment of the spatial momentum coordinates
    Vec3 dm;  // increment of mhat (projected tangential internally)
};

struct TangentDressing {
    FourVector dI4, dJ4;
    Mat2 dalpha;
    Spinor dmu, dlam;
    Vec3 dm_t;
};

TangentDressing dress_tangent(const MassiveLabel& z, const Tangent& t);

// A(dz) = -kappa M I.dX + r Im((dmu) eps lambda)
double connection_analytic(const MassiveRep& rep, const MassiveLabel& z, const Tangent& t,
                           double kappa);
double connection_analytic_spinor(const MassiveRep& rep, const MassiveLabel& z,
                                  const FourVector& dX, const Spinor& dmu, double kappa);

// Omega(t1,t2) = kappa M (dI1.dX2 - dI2.dX1)
//              + (r/4) eps_{mnrs} I^m J^n [dI1^r dI2^s - dI2^r dI1^s - (dJ1^r dJ2^s - dJ2^r dJ1^s)]
// One consistent orientation (= minus the Berry curvature); annihilates I d/dY.
double symplectic_analytic(const MassiveRep& rep, const MassiveLabel& z, const Tangent& t1,
                           const Tangent& t2, double kappa);

// Full closed-form metric and its small-width leading form.
double metric_analytic(const MassiveRep& rep, const MassiveLabel& z, const Tangent& t,
                       const MassiveCoefficients& co);
double metric_leading(const MassiveRep& rep, const MassiveLabel& z, const Tangent& t,
                      const MassiveCoefficients& co);

struct SurfaceLabel {
    FourVector n{1, 0, 0, 0};  // foliation normal, unit timelike
    double t = 0;              // time value on the surface
};

// Diagonal resolution-of-unity kernel at xi divided by its target 2 kappa xi^0;
// the x-integral is carried out analytically, the remaining (I, mhat) integral
// by importance-sampled MC. Expected 1.
MCEstimate resolution_check(const MassiveRep& rep, const SurfaceLabel& surface,
                            const FourVector& xi, const QuadratureSpec& quad, const MCConfig& mc);

struct QuantizeResult {
    cplx value{0, 0};
    double err = 0;
};

// <z1| F_Sigma |z2> by importance-sampled MC over (x, I, mhat); f takes the
// surface coordinates (x, Ivec, mhat).
QuantizeResult quantize(const MassiveRep& rep, const SurfaceLabel& surface,
                        const std::function<double(const Vec3&, const Vec3&, const Vec3&)>& f,
                        const MassiveLabel& z1, const MassiveLabel& z2, const MCConfig& mc,
                        const QuadratureSpec& inner_quad);

MassiveLabel transform_label(const Mat4& L, const MassiveLabel& z);
MassiveLabel translate_label(const FourVector& C, const MassiveLabel& z);

// derivative helpers shared with tests
Mat2 d_boost_spinor_matrix(const FourVector& I, const FourVector& dI4);
Mat2 d_su2_rotation(const Vec3& mhat, const Vec3& dm_tangential);

}  // namespace pcs::massive
