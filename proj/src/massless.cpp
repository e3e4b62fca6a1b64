#include "pcs/massless.hpp"

#include "pcs/reduce.hpp"

namespace pcs::massless {

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 6.28318530717958647692;

double legendre_sum(int N, double x) {
    // sum_{l<=N} (2l+1)/(4pi) P_l(x)
    double p0 = 1, p1 = x, s = 1.0 / (4 * pi);
    if (N >= 1) s += 3 * x / (4 * pi);
    for (int l = 2; l <= N; ++l) {
        double p2 = ((2 * l - 1) * x * p1 - (l - 1) * p0) / l;
        s += (2 * l + 1) * p2 / (4 * pi);
        p0 = p1;
        p1 = p2;
    }
    return s;
}

cplx sqrt_g(double g) { return g >= 0 ? cplx(std::sqrt(g), 0) : cplx(0, std::sqrt(-g)); }

cplx ipow(cplx b, int n) {
    cplx v = 1;
    if (n < 0) {
        b = 1.0 / b;
        n = -n;
    }
    for (int i = 0; i < n; ++i) v *= b;
    return v;
}
}  // namespace

double SmearingFunctions::f(double lam) const {
    return std::exp(-lam * lam / (sigma * sigma) - 2 * lam) / std::sqrt(pi * sigma * sigma);
}

double SmearingFunctions::g(double x) const {
    if (sm.kind == Smearing::legendre) return legendre_sum(sm.N, x);
    double t = 1 - x;
    return C / two_pi * (1 + x) / (t * t + sm.eps * sm.eps);
}

double SmearingFunctions::gprime(double x) const {
    if (sm.kind == Smearing::legendre)
        throw std::invalid_argument("gprime: only defined for the rational smearing");
    double t = 1 - x, e2 = sm.eps * sm.eps;
    return C / two_pi * (4 * t - t * t + e2) / ((t * t + e2) * (t * t + e2));
}

SmearingFunctions smearing_functions(const MasslessRep& rep) {
    SmearingFunctions s;
    s.sigma = rep.sigma;
    s.sm = rep.smearing;
    if (rep.smearing.kind == Smearing::rational) {
        double e = rep.smearing.eps;
        if (e <= 0) throw std::invalid_argument("smearing_functions: eps must be positive");
        // exact normalisation 2 pi int g = 1
        s.C = 1.0 / (2.0 / e * std::atan(2.0 / e) - 0.5 * std::log(4 + e * e) + std::log(e));
        s.C_paper = 1.0 / (2.0 / e * std::atan(2.0 / e) + std::log(e / 2));
    } else if (rep.smearing.N < 0) {
        throw std::invalid_argument("smearing_functions: N must be non-negative");
    }
    return s;
}

MasslessLabel make_label_spinors(const FourVector& X, const Spinor& iota, const Spinor& j) {
    if (std::abs(eps_product(iota, j) - 1.0) > 1e-10)
        throw std::invalid_argument("massless label: iota eps j != 1");
    MasslessLabel z;
    z.X = X;
    NullTetrad t = tetrad_from_spinors(iota, j);
    z.iota = iota;
    z.j = j;
    z.I = t.I;
    z.J = t.J;
    z.m1 = t.m1;
    z.m2 = t.m2;
    z.n = (z.I + z.J) * 0.5;
    z.m = (z.I - z.J) * 0.5;
    Spinor canon = spinor_from_null(z.I);
    z.canonical = (std::abs(iota.a - canon.a) + std::abs(iota.b - canon.b)) < 1e-9;
    return z;
}

MasslessLabel make_label(const FourVector& X, const FourVector& I, const FourVector& J) {
    if (!I.is_future(1e-12) || !I.is_null(1e-10))
        throw std::invalid_argument("massless label: I must be future null");
    if (!J.is_future(1e-12) || !J.is_null(1e-10))
        throw std::invalid_argument("massless label: J must be future null");
    if (std::abs(mdot(I, J) - 2.0) > 1e-10)
        throw std::invalid_argument("massless label: I.J != 2");
    Spinor iota = spinor_from_null(I);
    Spinor jh = spinor_from_null(J);
    Spinor j = jh * (1.0 / eps_product(iota, jh));
    return make_label_spinors(X, iota, j);
}

MasslessLabel reference_label(const FourVector& X) {
    return make_label(X, {1, 0, 0, 1}, {1, 0, 0, -1});
}

MasslessLabel gauge_rotate(const MasslessLabel& z, double theta) {
    cplx ph = std::exp(cplx(0, theta));
    MasslessLabel out = make_label_spinors(z.X, z.iota * std::conj(ph), z.j * ph);
    return out;
}

LittleGroupInfo little_group_check(const Mat2& alpha, int r, double tol) {
    LittleGroupInfo info;
    info.is_member = std::abs(alpha.e10) <= tol && std::abs(std::abs(alpha.e00) - 1.0) <= tol;
    if (info.is_member) {
        info.theta = std::arg(alpha.e00);
        info.z = alpha.e01 * std::exp(cplx(0, info.theta));
        info.d_r = std::exp(cplx(0, -r * info.theta));
    }
    return info;
}

Mat2 canonical_omega(const FourVector& xi) {
    if (xi[0] + xi[3] < section_delta * xi[0])
        throw std::invalid_argument(
            "canonical_omega: section-singular direction; use the convention branch "
            "spinor (0, sqrt(xi^0)) instead");
    Spinor s = spinor_from_null(xi);
    return {s.a, 0, s.b, 1.0 / s.a};
}

cplx coherent_wavefunction(const MasslessRep& rep, const MasslessLabel& z, const FourVector& xi) {
    SmearingFunctions sf = smearing_functions(rep);
    double ndot = mdot(z.n, xi);
    double mdot_ = mdot(z.m, xi);
    double lam = std::log(ndot);
    double x = -mdot_ / ndot;
    cplx val = std::exp(cplx(0, -mdot(xi, z.X)));
    val *= std::sqrt(sf.f(lam));
    val *= sqrt_g(sf.g(std::clamp(x, -1.0, 1.0)));
    if (rep.r != 0) {
        Spinor xt = spinor_from_null(xi);
        cplx q = eps_product(xt, z.j);
        val *= ipow(q / std::abs(q), rep.r);
    }
    return val;
}

namespace {

struct MGrid {
    std::vector<double> lam, wlam;
    PanelRule xr;
    int nphi;
};

MGrid build_grid(const MasslessRep& rep, const MasslessLabel& z1, const MasslessLabel& z2,
                 const QuadratureSpec& quad, bool halve) {
    MGrid g;
    int nl = halve ? std::max(16, quad.nodes_per_axis / 2) : quad.nodes_per_axis;
    int ngl = halve ? 8 : 16;
    g.nphi = halve ? std::max(16, quad.nodes_per_axis / 2) : quad.nodes_per_axis;

    // lambda range: the widths are sigma/sqrt(2); extend by the relative rapidity
    double rel = std::acosh(std::max(1.0, mdot(z1.n, z2.n)));
    double W = quad.cutoff_sigmas * rep.sigma + rel;
    const auto& xs = gl_nodes(nl);
    const auto& ws = gl_weights(nl);
    double c = 0.5 * std::log(std::max(mdot(z1.n, z2.n), 1.0));  // midpoint shift
    for (int i = 0; i < nl; ++i) {
        g.lam.push_back(c + W * xs[i]);
        g.wlam.push_back(W * ws[i]);
    }

    double minw = 2.0 * std::pow(0.5, quad.subdivision_depth);
    if (rep.smearing.kind == Smearing::rational)
        minw = std::max(minw, rep.smearing.eps / 8);
    minw = std::max(minw, 1e-7);
    g.xr = graded_panels_toward(-1.0, 1.0, minw, ngl);
    return g;
}

IntegralC overlap_impl(const MasslessRep& rep, const MasslessLabel& z1, const MasslessLabel& z2,
                       const QuadratureSpec& quad) {
    SmearingFunctions sf = smearing_functions(rep);

    auto run = [&](bool halve) -> cplx {
        MGrid g = build_grid(rep, z1, z2, quad, halve);
        std::size_t nl = g.lam.size(), nx = g.xr.x.size(), np = (std::size_t)g.nphi;
        std::size_t total = nl * nx * np;
        double wphi = two_pi / g.nphi;

        auto amp = [&](const MasslessLabel& z, const FourVector& xi, const Spinor& xt) -> cplx {
            double ndot = mdot(z.n, xi);
            double lam = std::log(ndot);
            double x = std::clamp(-mdot(z.m, xi) / ndot, -1.0, 1.0);
            cplx val = std::exp(cplx(0, -mdot(xi, z.X)));
            val *= std::sqrt(sf.f(lam)) * sqrt_g(sf.g(x));
            if (rep.r != 0) {
                cplx q = eps_product(xt, z.j);
                val *= ipow(q / std::abs(q), rep.r);
            }
            return val;
        };

        return deterministic_sum<cplx>(total, [&](std::size_t idx) -> cplx {
            std::size_t i = idx / (nx * np);
            std::size_t jx = (idx / np) % nx;
            std::size_t k = idx % np;
            double lam = g.lam[i], x = g.xr.x[jx];
            double phi = two_pi * (double)k / g.nphi;
            double st = std::sqrt(std::max(0.0, 1 - x * x));
            double el = std::exp(lam);
            FourVector xi;
            for (int a = 0; a < 4; ++a)
                xi[a] = el * (z1.n[a] + x * z1.m[a] +
                              st * (std::cos(phi) * z1.m1[a] + std::sin(phi) * z1.m2[a]));
            double w = g.wlam[i] * g.xr.w[jx] * wphi * el * el;  // invariant measure e^{2 lam}
            Spinor xt = (rep.r != 0) ? spinor_from_null(xi) : Spinor{1, 0};
            return std::conj(amp(z1, xi, xt)) * amp(z2, xi, xt) * w;
        });
    };

    cplx full = run(false);
    cplx half = run(true);
    return {full, std::abs(full - half)};
}

}  // namespace

IntegralC overlap(const MasslessRep& rep, const MasslessLabel& z1, const MasslessLabel& z2,
                  const QuadratureSpec& quad) {
    return overlap_impl(rep, z1, z2, quad);
}

Integral energy_expectation(const MasslessRep& rep, const MasslessLabel& z,
                            const QuadratureSpec& quad) {
    SmearingFunctions sf = smearing_functions(rep);
    // normalized <n_z . xi>; phi integrates trivially, the density is axisymmetric
    auto run = [&](bool halve) {
        MGrid g = build_grid(rep, z, z, quad, halve);
        std::size_t nl = g.lam.size(), nx = g.xr.x.size();
        struct Two {
            double num = 0, den = 0;
            Two operator+(const Two& o) const { return {num + o.num, den + o.den}; }
        };
        Two s = deterministic_sum<Two>(nl * nx, [&](std::size_t idx) {
            std::size_t i = idx / nx, jx = idx % nx;
            double lam = g.lam[i], x = g.xr.x[jx];
            double el = std::exp(lam);
            double w = g.wlam[i] * g.xr.w[jx] * two_pi * el * el * sf.f(lam) *
                       std::abs(sf.g(x));
            return Two{w * el, w};
        });
        return s.num / s.den;
    };
    double v = run(false), h = run(true);
    return {v, std::abs(v - h)};
}

Spinor iota_star_raised(const Spinor& iota) {
    return {std::conj(iota.b), -std::conj(iota.a)};
}

TwistorForm twistor_from_label(const MasslessRep& rep, const MasslessLabel& z) {
    if (rep.r == 0)
        throw std::invalid_argument("twistor_from_label: undefined for r = 0; use (X,I,J) labels");
    FourVector Y = z.X * std::exp(rep.sigma * rep.sigma / 4);
    Mat2 yt = vector_to_matrix(Y);
    // omega = j + (2i/r) ytilde iota*, with iota* the raised conjugate; this is
    // the index placement that makes iota eps omega = 1 - i I.Y hold identically
    Spinor yi = yt * iota_star_raised(z.iota);
    cplx fac = cplx(0, 2.0 / rep.r);
    return {z.iota, z.j + yi * fac};
}

double twistor_constraint(const MasslessRep& rep, const MasslessLabel& z) {
    TwistorForm tf = twistor_from_label(rep, z);
    return std::real(eps_product(tf.iota, tf.omega));
}

double twistor_residual(const MasslessRep& rep, const MasslessLabel& z) {
    if (rep.r == 0) throw std::invalid_argument("twistor_residual: undefined for r = 0");
    // d omega_B / d Y^mu is exactly (2i/r) (sigma_mu^T iota*)_B; assemble the
    // symmetrised derivative with indices raised by eps and take the max norm.
    static const Mat2 sigma[4] = {Mat2::identity(),
                                  {0, 1, 1, 0},
                                  {0, cplx(0, -1), cplx(0, 1), 0},
                                  {1, 0, 0, -1}};
    Spinor is = iota_star_raised(z.iota);
    cplx fac = cplx(0, 2.0 / rep.r);
    Spinor domega[4];
    for (int mu = 0; mu < 4; ++mu) domega[mu] = (sigma[mu] * is) * fac;
    auto raise = [](const Spinor& v) { return Spinor{v.b, -v.a}; };  // v^A = eps^{AB} v_B
    double worst = 0;
    for (int Ap = 0; Ap < 2; ++Ap)
        for (int A = 0; A < 2; ++A)
            for (int B = A; B < 2; ++B) {
                cplx tAB = 0, tBA = 0;
                for (int mu = 0; mu < 4; ++mu) {
                    double sgn = eta(mu, mu);
                    Spinor d = raise(domega[mu]);
                    cplx dA = (A == 0) ? d.a : d.b;
                    cplx dB = (B == 0) ? d.a : d.b;
                    // nabla_{A'}^{A} = eta^{mu nu} sigma_nu{}_{A'C} eps^{CA} d/dY^mu
                    const Mat2& s = sigma[mu];
                    auto sel = [&](int row, int col) -> cplx {
                        return (row == 0) ? (col == 0 ? s.e00 : s.e01)
                                          : (col == 0 ? s.e10 : s.e11);
                    };
                    auto raised_sigma = [&](int rowAp, int colA) -> cplx {
                        // (sigma_mu eps)_{A'}{}^{A}: contract the column index with eps
                        return colA == 0 ? sel(rowAp, 1) : -sel(rowAp, 0);
                    };
                    tAB += sgn * raised_sigma(Ap, A) * dB;
                    tBA += sgn * raised_sigma(Ap, B) * dA;
                }
                worst = std::max(worst, std::abs(0.5 * (tAB + tBA)));
            }
    return worst;
}

ZetaForm zeta_reduction(const MasslessRep& rep, const MasslessLabel& z) {
    TwistorForm tf = twistor_from_label(rep, z);
    FourVector Y = z.X * std::exp(rep.sigma * rep.sigma / 4);
    double u = mdot(z.I, Y);
    ZetaForm zf;
    zf.iota = tf.iota;
    zf.u = u;
    zf.zeta = tf.omega + z.j * (cplx(0, 2.0 / rep.r) * u);
    return zf;
}

MasslessLabel label_from_zeta(const MasslessRep& rep, const ZetaForm& zf) {
    if (std::abs(eps_product(zf.iota, zf.zeta) - 1.0) > 1e-9)
        throw std::invalid_argument("label_from_zeta: iota eps zeta != 1");
    FourVector Jp = null_from_spinor(zf.zeta);
    FourVector Y = Jp * (zf.u / 2.0);
    FourVector X = Y * std::exp(-rep.sigma * rep.sigma / 4);
    return make_label_spinors(X, zf.iota, zf.zeta);
}

MDressing dress_tangent(const MasslessLabel& z, const MTangent& t) {
    if (!z.canonical)
        throw std::invalid_argument("dress_tangent: label spinors are not the canonical section");
    MDressing d;
    Vec3 iv{z.I[1], z.I[2], z.I[3]};
    double inorm = iv.norm();
    Vec3 ih = iv * (1.0 / inorm);
    d.dI4 = {ih.dot(t.dIvec), t.dIvec[0], t.dIvec[1], t.dIvec[2]};

    Vec3 jv{z.J[1], z.J[2], z.J[3]};
    double jnorm = jv.norm();
    Vec3 nj = jv * (1.0 / jnorm);
    Vec3 dnj = t.dnJ - nj * nj.dot(t.dnJ);
    FourVector jdir{1, nj[0], nj[1], nj[2]};
    FourVector djdir{0, dnj[0], dnj[1], dnj[2]};
    double D = mdot(z.I, jdir);
    double beta = 2.0 / D;
    double dD = mdot(d.dI4, jdir) + mdot(z.I, djdir);
    double dbeta = -beta * dD / D;
    d.dJ4 = jdir * dbeta + djdir * beta;

    // canonical-section derivative for iota(I)
    auto dsection = [](const FourVector& I, const FourVector& dI) -> Spinor {
        double s = I[0] + I[3];
        double ds = dI[0] + dI[3];
        double a = std::sqrt(s / 2);
        cplx b = cplx(I[1], I[2]) / std::sqrt(2 * s);
        return {ds / (4 * a), cplx(dI[1], dI[2]) / std::sqrt(2 * s) - b * ds / (2 * s)};
    };
    d.diota = dsection(z.I, d.dI4);
    Spinor jh = spinor_from_null(z.J);
    Spinor djh = dsection(z.J, d.dJ4);
    cplx den = eps_product(z.iota, jh);
    cplx dden = eps_product(d.diota, jh) + eps_product(z.iota, djh);
    d.dj = djh * (1.0 / den) - jh * (dden / (den * den));
    return d;
}

double connection_analytic_spinor(const MasslessRep& rep, const MasslessLabel& z,
                                  const FourVector& dX, const Spinor& dj) {
    double ef = std::exp(rep.sigma * rep.sigma / 4);
    return -ef * mdot(z.I, dX) + rep.r * std::imag(eps_product(z.iota, dj));
}

double connection_analytic(const MasslessRep& rep, const MasslessLabel& z, const MTangent& t) {
    MDressing d = dress_tangent(z, t);
    return connection_analytic_spinor(rep, z, t.dX, d.dj);
}

double symplectic_analytic(const MasslessRep& rep, const MasslessLabel& z, const MTangent& t1,
                           const MTangent& t2) {
    MDressing d1 = dress_tangent(z, t1);
    MDressing d2 = dress_tangent(z, t2);
    double ef = std::exp(rep.sigma * rep.sigma / 4);
    // minus the curvature of the verified connection, matching the massive orientation
    double trans = ef * (mdot(d1.dI4, t2.dX) - mdot(d2.dI4, t1.dX));
    double spin = -rep.r * std::imag(eps_product(d1.diota, d2.dj) - eps_product(d2.diota, d1.dj));
    return trans + spin;
}

MasslessCoefficients massless_metric_coefficients(const MasslessRep& rep,
                                                  const QuadratureSpec& quad) {
    if (rep.smearing.kind != Smearing::rational)
        throw std::invalid_argument(
            "massless_metric_coefficients: the truncated-Legendre kernel has zeros, the "
            "moment integrals require the rational smearing");
    SmearingFunctions sf = smearing_functions(rep);
    double e = rep.smearing.eps;
    MasslessCoefficients co;
    co.eps = e;
    co.sigma = rep.sigma;

    double minw = std::max(1e-9, e / 64);
    PanelRule full = graded_panels_toward(-1.0, 1.0, minw, 24);
    PanelRule half = graded_panels_toward(-1.0, 1.0, minw, 12);

    auto mom = [&](auto weight) {
        return integrate_1d(
            [&](double x) { return two_pi * sf.gprime(x) * sf.gprime(x) / (4 * sf.g(x)) * weight(x); },
            full, half);
    };
    Integral i1 = mom([](double x) { return (1 - x * x) * (1 - x * x); });
    Integral i2 = mom([](double x) { return (1 - x * x) * (1 + x) * (1 + x); });
    Integral i3 = mom([](double x) { return (1 - x * x) * (1 - x) * (1 - x); });
    Integral iF = integrate_1d(
        [&](double x) { return two_pi * sf.g(x) * (1 - x) / (1 + x); }, full, half);
    co.c1 = i1.value;
    co.c2 = i2.value;
    co.c3 = i3.value;
    co.F = iF.value;
    co.c1_err = i1.error;
    co.c2_err = i2.error;
    co.c3_err = i3.error;
    co.F_err = iF.error;
    double rel = std::max(std::max(i1.error / std::abs(i1.value), i2.error / std::abs(i2.value)),
                          std::max(i3.error / std::max(1e-300, std::abs(i3.value)),
                                   iF.error / std::abs(iF.value)));
    if (rel > std::max(quad.target_tol, 1e-7))
        throw ToleranceError("massless_metric_coefficients: endpoint quadrature did not converge",
                             rel);
    return co;
}

double metric_analytic(const MasslessRep& rep, const MasslessLabel& z, const MTangent& t,
                       const MasslessCoefficients& co) {
    MDressing d = dress_tangent(z, t);
    double s2 = rep.sigma * rep.sigma;
    double IdX = mdot(z.I, t.dX);
    double IdJ = mdot(z.I, d.dJ4);
    double dIdI = mdot(d.dI4, d.dI4);
    double dJdJ = mdot(d.dJ4, d.dJ4);
    double dIdJ = mdot(d.dI4, d.dJ4);
    cplx jedj = eps_product(z.j, d.dj);
    return (std::exp(s2) - std::exp(s2 / 2)) * IdX * IdX +
           0.25 * (1 + 1 / (2 * s2) + 3 * co.c1) * IdJ * IdJ -
           0.5 * (co.c2 / 4 + 1) * dIdI - co.c3 / 8 * dJdJ + (co.c1 / 4 - 1) * dIdJ +
           0.5 * rep.r * rep.r * co.F * std::norm(jedj);
}

double metric_leading(const MasslessRep& rep, const MasslessLabel& z, const MTangent& t) {
    MDressing d = dress_tangent(z, t);
    double s2 = rep.sigma * rep.sigma;
    double IdX = mdot(z.I, t.dX);
    double JdI = mdot(z.J, d.dI4);
    double dIdI = mdot(d.dI4, d.dI4);
    cplx jedj = eps_product(z.j, d.dj);
    return s2 / 2 * IdX * IdX + (JdI * JdI - dIdI) / (8 * s2) +
           rep.r * rep.r * (8 * s2 / pi) * std::log(1 / (2 * rep.sigma)) * std::norm(jedj);
}

MasslessLabel transform_label(const Mat4& L, const MasslessLabel& z) {
    if (!is_proper_orthochronous(L))
        throw std::invalid_argument("transform_label: matrix is not proper orthochronous");
    return make_label(L * z.X, L * z.I, L * z.J);
}

MasslessLabel translate_label(const FourVector& C, const MasslessLabel& z) {
    MasslessLabel out = z;
    out.X = z.X + C;
    return out;
}

ZetaForm transform_zeta(const Mat2& alpha, const ZetaForm& zf) {
    if (std::abs(alpha.det() - 1.0) > 1e-9)
        throw std::invalid_argument("transform_zeta: det != 1");
    return {alpha * zf.iota, alpha * zf.zeta, zf.u};
}

}  // namespace pcs::massless
