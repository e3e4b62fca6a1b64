#include "pcs/numgeom.hpp"

#include <cmath>
#include <map>

#include "pcs/reduce.hpp"
#include "pcs/rng.hpp"

namespace pcs::numgeom {

namespace {

// normalized overlap o(a,b)/sqrt(o(a,a) o(b,b)) with diagonal caching
struct NormalizedPath {
    const PathOverlap& ov;
    std::map<double, double> diag;

    double norm_at(double a) {
        auto it = diag.find(a);
        if (it != diag.end()) return it->second;
        double n = std::abs(ov(a, a));
        diag.emplace(a, n);
        return n;
    }
    cplx operator()(double a, double b) {
        return ov(a, b) / std::sqrt(norm_at(a) * norm_at(b));
    }
};

double fit_order(double q1, double q2, double q3) {
    // assumes q(d) = q* + c d^p over steps d, d/2, d/4
    double r = (q1 - q2) / (q2 - q3);
    if (!(r > 0)) return 0;
    return std::log2(r);
}

}  // namespace

FdResult connection_numeric(const PathOverlap& ov, const StepSpec& steps) {
    NormalizedPath no{ov, {}};
    auto slope = [&](double d) {
        cplx op = no(0.0, d), om = no(0.0, -d);
        double ap = std::arg(op), am = std::arg(om);
        if (std::abs(ap) > 2.0 || std::abs(am) > 2.0)
            throw std::runtime_error("connection_numeric: phase too close to the branch cut, "
                                     "use a smaller step");
        return (ap - am) / (2 * d);
    };
    double a1 = slope(steps.deltas[0]);
    double a2 = slope(steps.deltas[1]);
    double a3 = slope(steps.deltas[2]);
    FdResult r;
    r.value = (4 * a2 - a1) / 3;
    double richardson2 = (4 * a3 - a2) / 3;
    r.error = std::abs(richardson2 - r.value);
    r.order = fit_order(a1, a2, a3);
    return r;
}

FdResult metric_numeric_diag(const PathOverlap& ov, const StepSpec& steps) {
    NormalizedPath no{ov, {}};
    auto q = [&](double d) {
        double op = std::norm(no(0.0, d));
        double om = std::norm(no(0.0, -d));
        return (2 - op - om) / (2 * d * d);
    };
    double q1 = q(steps.deltas[0]);
    double q2 = q(steps.deltas[1]);
    double q3 = q(steps.deltas[2]);
    FdResult r;
    r.value = (4 * q2 - q1) / 3;
    r.error = std::abs((4 * q3 - q2) / 3 - r.value);
    r.order = fit_order(q1, q2, q3);
    return r;
}

FdResult metric_numeric(const Path2Overlap& ov2, const StepSpec& steps) {
    auto diag = [&](double a, double b) { return std::abs(ov2(a, b, a, b)); };
    auto m = [&](double a, double b) {
        return 1 - std::norm(ov2(0, 0, a, b)) / (diag(0, 0) * diag(a, b));
    };
    auto q = [&](double d) {
        return (m(d, d) + m(-d, -d) - m(d, -d) - m(-d, d)) / (8 * d * d);
    };
    double q1 = q(steps.deltas[0]);
    double q2 = q(steps.deltas[1]);
    FdResult r;
    r.value = (4 * q2 - q1) / 3;
    r.error = std::abs(r.value - q2);
    return r;
}

FdResult symplectic_numeric(const Path2Overlap& ov2, const StepSpec& steps) {
    // A(u) along the first slot at a base point displaced along the second slot
    auto conn_u_at = [&](double bv, double d) {
        auto nrm = [&](double a1, double b1, double a2, double b2) {
            return ov2(a1, b1, a2, b2) /
                   std::sqrt(std::abs(ov2(a1, b1, a1, b1)) * std::abs(ov2(a2, b2, a2, b2)));
        };
        double ap = std::arg(nrm(0, bv, d, bv));
        double am = std::arg(nrm(0, bv, -d, bv));
        return (ap - am) / (2 * d);
    };
    auto conn_v_at = [&](double au, double d) {
        auto nrm = [&](double a1, double b1, double a2, double b2) {
            return ov2(a1, b1, a2, b2) /
                   std::sqrt(std::abs(ov2(a1, b1, a1, b1)) * std::abs(ov2(a2, b2, a2, b2)));
        };
        double ap = std::arg(nrm(au, 0, au, d));
        double am = std::arg(nrm(au, 0, au, -d));
        return (ap - am) / (2 * d);
    };
    auto omega = [&](double h) {
        double d = h;
        double dAu_dv = (conn_u_at(h, d) - conn_u_at(-h, d)) / (2 * h);
        double dAv_du = (conn_v_at(h, d) - conn_v_at(-h, d)) / (2 * h);
        return dAu_dv - dAv_du;
    };
    double o1 = omega(steps.deltas[0]);
    double o2 = omega(steps.deltas[1]);
    FdResult r;
    r.value = (4 * o2 - o1) / 3;
    r.error = std::abs(r.value - o2);
    return r;
}

McResult mc_integrate(const std::function<double(uint64_t, const CounterRng&)>& integrand,
                      const MCConfig& mc) {
    CounterRng rng{mc.seed};
    std::size_t nb = std::min<std::size_t>(100, std::max<std::size_t>(2, mc.samples / 16));
    std::size_t per = mc.samples / nb;
    if (per == 0) throw std::invalid_argument("mc_integrate: too few samples");
    std::vector<double> batch(nb);
    bool bad = false;
    for (std::size_t b = 0; b < nb; ++b) {
        batch[b] = deterministic_sum<double>(per, [&](std::size_t i) {
            double v = integrand(b * per + i, rng);
            if (!std::isfinite(v)) bad = true;
            return v;
        }) / per;
    }
    if (bad) throw std::runtime_error("mc_integrate: non-finite integrand sample");
    double mean = deterministic_sum_serial<double>(nb, [&](std::size_t b) { return batch[b]; }) / nb;
    double var = 0;
    for (auto v : batch) var += (v - mean) * (v - mean);
    var /= (nb - 1);
    return {mean, std::sqrt(var / nb)};
}

PathOverlap massive_path(const massive::MassiveRep& rep,
                         const std::function<massive::MassiveLabel(double)>& path,
                         const QuadratureSpec& quad) {
    return [=](double a, double b) { return massive::overlap(rep, path(a), path(b), quad).value; };
}

Path2Overlap massive_path2(const massive::MassiveRep& rep,
                           const std::function<massive::MassiveLabel(double, double)>& path,
                           const QuadratureSpec& quad) {
    return [=](double a1, double b1, double a2, double b2) {
        return massive::overlap(rep, path(a1, b1), path(a2, b2), quad).value;
    };
}

PathOverlap massless_path(const massless::MasslessRep& rep,
                          const std::function<massless::MasslessLabel(double)>& path,
                          const QuadratureSpec& quad) {
    return [=](double a, double b) { return massless::overlap(rep, path(a), path(b), quad).value; };
}

Path2Overlap massless_path2(const massless::MasslessRep& rep,
                            const std::function<massless::MasslessLabel(double, double)>& path,
                            const QuadratureSpec& quad) {
    return [=](double a1, double b1, double a2, double b2) {
        return massless::overlap(rep, path(a1, b1), path(a2, b2), quad).value;
    };
}

std::function<massive::MassiveLabel(double)> massive_ray(const massive::MassiveLabel& z,
                                                         const massive::Tangent& t) {
    return [=](double s) {
        Vec3 iv{z.I[1] + s * t.dI[0], z.I[2] + s * t.dI[1], z.I[3] + s * t.dI[2]};
        Vec3 m = (z.mhat + t.dm * s);
        return massive::make_label(z.X + t.dX * s, iv, m.normalized());
    };
}

std::function<massive::MassiveLabel(double, double)> massive_ray2(const massive::MassiveLabel& z,
                                                                  const massive::Tangent& u,
                                                                  const massive::Tangent& v) {
    return [=](double a, double b) {
        Vec3 iv{z.I[1] + a * u.dI[0] + b * v.dI[0], z.I[2] + a * u.dI[1] + b * v.dI[1],
                z.I[3] + a * u.dI[2] + b * v.dI[2]};
        Vec3 m = z.mhat + u.dm * a + v.dm * b;
        return massive::make_label(z.X + u.dX * a + v.dX * b, iv, m.normalized());
    };
}

std::function<massless::MasslessLabel(double)> massless_ray(const massless::MasslessLabel& z,
                                                            const massless::MTangent& t) {
    Vec3 jv{z.J[1], z.J[2], z.J[3]};
    Vec3 nj = jv * (1.0 / jv.norm());
    return [=](double s) {
        Vec3 iv{z.I[1] + s * t.dIvec[0], z.I[2] + s * t.dIvec[1], z.I[3] + s * t.dIvec[2]};
        Vec3 dir = (nj + t.dnJ * s).normalized();
        FourVector I{iv.norm(), iv[0], iv[1], iv[2]};
        FourVector jdir{1, dir[0], dir[1], dir[2]};
        FourVector J = jdir * (2.0 / mdot(I, jdir));
        return massless::make_label(z.X + t.dX * s, I, J);
    };
}

std::function<massless::MasslessLabel(double, double)> massless_ray2(
    const massless::MasslessLabel& z, const massless::MTangent& u, const massless::MTangent& v) {
    Vec3 jv{z.J[1], z.J[2], z.J[3]};
    Vec3 nj = jv * (1.0 / jv.norm());
    return [=](double a, double b) {
        Vec3 iv{z.I[1] + a * u.dIvec[0] + b * v.dIvec[0],
                z.I[2] + a * u.dIvec[1] + b * v.dIvec[1],
                z.I[3] + a * u.dIvec[2] + b * v.dIvec[2]};
        Vec3 dir = (nj + u.dnJ * a + v.dnJ * b).normalized();
        FourVector I{iv.norm(), iv[0], iv[1], iv[2]};
        FourVector jdir{1, dir[0], dir[1], dir[2]};
        FourVector J = jdir * (2.0 / mdot(I, jdir));
        return massless::make_label(z.X + u.dX * a + v.dX * b, I, J);
    };
}

}  // namespace pcs::numgeom
