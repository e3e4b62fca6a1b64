#pragma once

#include <functional>

#include "pcs/quadrature.hpp"
#include "pcs/su2.hpp"

// Massless representation (helicity r/2): the upper-triangular little group,
// smeared delta functions on R x S^2 (log-energy Gaussian times a truncated
// Legendre kernel or a rational kernel on the celestial sphere), the coherent
// family, twistor variables, and the closed-form phase-space geometry.

namespace pcs::massless {

struct Smearing {
    enum Kind { legendre, rational } kind = rational;
    int N = 8;          // Legendre truncation
    double eps = 1e-2;  // rational width
};

struct MasslessRep {
    int r = 0;  // twice the helicity, signed
    double sigma = 0.1;
    Smearing smearing;
};

struct SmearingFunctions {
    double sigma = 0;
    Smearing sm;
    double C = 0;  // rational normalisation constant (exact closed form)
    double C_paper = 0;  // the small-eps closed form it is usually quoted as

    double f(double lam) const;        // log-energy factor
    double g(double x) const;          // celestial-sphere factor
    double gprime(double x) const;     // rational only
};

SmearingFunctions smearing_functions(const MasslessRep& rep);

struct MasslessLabel {
    FourVector X;
    FourVector I, J;  // future null, I.J = 2
    Spinor iota, j;   // iota eps j = 1
    bool canonical = true;  // iota is the canonical section spinor of I
    // label tetrad used for adapted coordinates
    FourVector n, m, m1, m2;
};

MasslessLabel make_label(const FourVector& X, const FourVector& I, const FourVector& J);
MasslessLabel make_label_spinors(const FourVector& X, const Spinor& iota, const Spinor& j);
MasslessLabel reference_label(const FourVector& X = {0, 0, 0, 0});

// iota -> e^{-i theta} iota, j -> e^{i theta} j (the zeta form rotates by +theta)
MasslessLabel gauge_rotate(const MasslessLabel& z, double theta);

struct LittleGroupInfo {
    bool is_member = false;
    double theta = 0;
    cplx z{0, 0};
    cplx d_r{1, 0};  // e^{-i r theta}
};
LittleGroupInfo little_group_check(const Mat2& alpha, int r, double tol = 1e-9);

// lower-triangular representative taking (1,0) to the canonical spinor of xi
Mat2 canonical_omega(const FourVector& xi);

cplx coherent_wavefunction(const MasslessRep& rep, const MasslessLabel& z, const FourVector& xi);

IntegralC overlap(const MasslessRep& rep, const MasslessLabel& z1, const MasslessLabel& z2,
                  const QuadratureSpec& quad);

// <n_z . xi> on the state, by the same adapted grid
Integral energy_expectation(const MasslessRep& rep, const MasslessLabel& z,
                            const QuadratureSpec& quad);

// ---- twistor variables ----

struct TwistorForm {
    Spinor iota, omega;
};

// omega_A = j_A + (2i/r) y^T iota*, with Y = e^{sigma^2/4} X. Throws for r = 0.
TwistorForm twistor_from_label(const MasslessRep& rep, const MasslessLabel& z);

// (iota eps omega + conj)/2, expected 1
double twistor_constraint(const MasslessRep& rep, const MasslessLabel& z);

// max norm of the symmetrised spinor derivative of omega(Y); exact in the
// linear Y-dependence, expected 0
double twistor_residual(const MasslessRep& rep, const MasslessLabel& z);

struct ZetaForm {
    Spinor iota, zeta;
    double u = 0;
};

ZetaForm zeta_reduction(const MasslessRep& rep, const MasslessLabel& z);
MasslessLabel label_from_zeta(const MasslessRep& rep, const ZetaForm& zf);

// ---- geometry ----

// Unconstrained chart: X, spatial momentum of I, and the unit direction of J.
struct MTangent {
    FourVector dX;
    Vec3 dIvec;
    Vec3 dnJ;  // tangential variation of J's direction on the sphere
};

struct MDressing {
    FourVector dI4, dJ4;
    Spinor diota, dj;
};

MDressing dress_tangent(const MasslessLabel& z, const MTangent& t);

// A = -e^{sigma^2/4} I.dX + r Im(iota eps dj)
double connection_analytic(const MasslessRep& rep, const MasslessLabel& z, const MTangent& t);
double connection_analytic_spinor(const MasslessRep& rep, const MasslessLabel& z,
                                  const FourVector& dX, const Spinor& dj);

// Same orientation convention as the massive two-form (minus the Berry curvature).
double symplectic_analytic(const MasslessRep& rep, const MasslessLabel& z, const MTangent& t1,
                           const MTangent& t2);

struct MasslessCoefficients {
    double c1 = 0, c2 = 0, c3 = 0, F = 0;
    double c1_err = 0, c2_err = 0, c3_err = 0, F_err = 0;
    double eps = 0;
    double sigma = 0;
};

// g'^2/4g moment integrals and F; rational smearing only.
MasslessCoefficients massless_metric_coefficients(const MasslessRep& rep,
                                                  const QuadratureSpec& quad);

double metric_analytic(const MasslessRep& rep, const MasslessLabel& z, const MTangent& t,
                       const MasslessCoefficients& co);
// Leading small-width form under the eps = 8 sigma^2 coupling.
double metric_leading(const MasslessRep& rep, const MasslessLabel& z, const MTangent& t);

MasslessLabel transform_label(const Mat4& L, const MasslessLabel& z);
MasslessLabel translate_label(const FourVector& C, const MasslessLabel& z);
// twistor-form transforms: (iota, zeta) -> (alpha iota, alpha zeta), u fixed
ZetaForm transform_zeta(const Mat2& alpha, const ZetaForm& zf);

// raised conjugate spinor used by the twistor map
Spinor iota_star_raised(const Spinor& iota);

}  // namespace pcs::massless
