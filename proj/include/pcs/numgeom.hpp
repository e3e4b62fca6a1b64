#pragma once

#include <functional>

#include "pcs/massive.hpp"
#include "pcs/massless.hpp"
#include "pcs/rng.hpp"

// Independent numerical oracles: phase-space geometry extracted from overlap
// phases and moduli by finite differences with Richardson extrapolation, and
// a reproducible Monte-Carlo integrator. None of these touch the closed-form
// geometry routes they are used to check.

namespace pcs::numgeom {

struct StepSpec {
    // label-space steps, Richardson-combined pairwise (each half the previous)
    std::array<double, 3> deltas{1e-2, 5e-3, 2.5e-3};
};

struct FdResult {
    double value = 0;
    double error = 0;   // |Richardson - finest raw| estimate
    double order = 0;   // fitted convergence order when three steps are used
};

// One-parameter family overlap: ov(a, b) = <z(a)|z(b)>, normalised internally.
using PathOverlap = std::function<cplx(double, double)>;
// Two-parameter family: ov2(a1, b1, a2, b2) = <z(a1, b1)|z(a2, b2)>.
using Path2Overlap = std::function<cplx(double, double, double, double)>;

// A . direction from the phase of <z | z + delta>, Richardson extrapolated.
FdResult connection_numeric(const PathOverlap& ov, const StepSpec& steps = {});

// g(direction, direction) from 1 - |<z|z + delta>|^2.
FdResult metric_numeric_diag(const PathOverlap& ov, const StepSpec& steps = {});

// g(u, v) by polarisation over the four sign combinations.
FdResult metric_numeric(const Path2Overlap& ov2, const StepSpec& steps = {});

// Omega(u, v) as the finite-difference curl of the numeric connection in the
// same orientation as the closed-form two-forms (minus the Berry curvature):
// Omega(u,v) = d/dv A(u) - d/du A(v).
FdResult symplectic_numeric(const Path2Overlap& ov2, const StepSpec& steps = {});

// ---- reproducible Monte Carlo over a product of normals ----

struct McResult {
    double value = 0;
    double err = 0;
};

// integrand receives the sample index and a counter RNG; deterministic
// pairwise reduction, batch-means standard error.
McResult mc_integrate(const std::function<double(uint64_t, const CounterRng&)>& integrand,
                      const MCConfig& mc);

// ---- convenience wrappers building path overlaps from labels ----

PathOverlap massive_path(const massive::MassiveRep& rep,
                         const std::function<massive::MassiveLabel(double)>& path,
                         const QuadratureSpec& quad);

Path2Overlap massive_path2(const massive::MassiveRep& rep,
                           const std::function<massive::MassiveLabel(double, double)>& path,
                           const QuadratureSpec& quad);

PathOverlap massless_path(const massless::MasslessRep& rep,
                          const std::function<massless::MasslessLabel(double)>& path,
                          const QuadratureSpec& quad);

Path2Overlap massless_path2(const massless::MasslessRep& rep,
                            const std::function<massless::MasslessLabel(double, double)>& path,
                            const QuadratureSpec& quad);

// straight-line massive label path along a tangent
std::function<massive::MassiveLabel(double)> massive_ray(const massive::MassiveLabel& z,
                                                         const massive::Tangent& t);
std::function<massive::MassiveLabel(double, double)> massive_ray2(const massive::MassiveLabel& z,
                                                                  const massive::Tangent& u,
                                                                  const massive::Tangent& v);
std::function<massless::MasslessLabel(double)> massless_ray(const massless::MasslessLabel& z,
                                                            const massless::MTangent& t);
std::function<massless::MasslessLabel(double, double)> massless_ray2(
    const massless::MasslessLabel& z, const massless::MTangent& u, const massless::MTangent& v);

}  // namespace pcs::numgeom
