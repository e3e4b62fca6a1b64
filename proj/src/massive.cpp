#include "pcs/massive.hpp"

#include "pcs/reduce.hpp"
#include "pcs/rng.hpp"

namespace pcs::massive {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 6.28318530717958647692;

Mat2 xi_tilde_inverse(const FourVector& xi) {
    // det(xi~) = xi.xi = 1 on shell, so the inverse is the adjugate
    return {cplx(xi[0] - xi[3], 0), cplx(-xi[1], xi[2]),
            cplx(-xi[1], -xi[2]), cplx(xi[0] + xi[3], 0)};
}

Mat2 omega_xi_inverse(const FourVector& xi) {
    // inverse of (1 + xi~)/sqrt(2(1+xi0)); det(1+xi~) = 2(1+xi0)
    double s = std::sqrt(2 * (1 + xi[0]));
    Mat2 m = Mat2::identity() + vector_to_matrix(xi);
    return Mat2{m.e11, -m.e01, -m.e10, m.e00} * (1.0 / s);
}

FourVector on_shell(const Vec3& v) {
    return {std::sqrt(1 + v.dot(v)), v[0], v[1], v[2]};
}

struct ScalarAmp {
    cplx value;
    Spinor w;    // omega_xi^{-1} mu
    double den;  // mu^dag xi~^{-1} mu
};

// everything xi-dependent needed from one label at one node
inline ScalarAmp amp_at(const MassiveRep& rep, const MassiveLabel& z, const FourVector& xi) {
    double idotxi = mdot(z.I, xi);
    double xdotxi = mdot(z.X, xi);
    double norm = 1.0 / (rep.M * std::pow(pi * rep.sigma * rep.sigma, 0.75));
    cplx scalar = norm * std::sqrt(2 * idotxi) *
                  std::exp(cplx(-(idotxi * idotxi - 1) / (2 * rep.sigma * rep.sigma),
                                -rep.M * xdotxi));
    ScalarAmp out;
    out.value = scalar;
    if (rep.r > 0) {
        out.w = omega_xi_inverse(xi) * z.mu;
        Mat2 it = xi_tilde_inverse(xi);
        Spinor itmu = it * z.mu;
        out.den = std::real(std::conj(z.mu.a) * itmu.a + std::conj(z.mu.b) * itmu.b);
    } else {
        out.den = 1.0;
    }
    return out;
}

cplx ipow(cplx base, int n) {
    cplx v = 1;
    for (int i = 0; i < n; ++i) v *= base;
    return v;
}

}  // namespace

MassiveLabel make_label_I(const FourVector& X, const FourVector& I, const Vec3& mhat) {
    if (!I.is_future() || std::abs(msq(I) - 1.0) > 1e-10)
        throw std::invalid_argument("massive label: I must be unit timelike future");
    MassiveLabel z;
    z.X = X;
    z.I = I;
    z.mhat = mhat.normalized();
    Mat2 omega = boost_spinor_matrix(I);
    z.alpha = omega * su2_rotation(z.mhat);
    z.mu = z.alpha.col(0);
    z.lam = z.alpha.col(1);
    z.J = pauli_lubanski_direction(I, z.mhat);
    return z;
}

MassiveLabel make_label(const FourVector& X, const Vec3& Ivec, const Vec3& mhat) {
    return make_label_I(X, on_shell(Ivec), mhat);
}

MassiveLabel gauge_rotate(const MassiveLabel& z, double theta) {
    MassiveLabel out = z;
    cplx ph = std::exp(cplx(0, theta));
    out.alpha = z.alpha * Mat2{ph, 0, 0, std::conj(ph)};
    out.mu = out.alpha.col(0);
    out.lam = out.alpha.col(1);
    return out;
}

FourVector pauli_lubanski_direction(const FourVector& I, const Vec3& mhat) {
    Mat4 L = sl2c_to_lorentz(boost_spinor_matrix(I));
    return L * FourVector{0, mhat[0], mhat[1], mhat[2]};
}

double measure_weight(const Vec3& xi_vec, double M) {
    return M * M / (2 * std::sqrt(1 + xi_vec.dot(xi_vec)));
}

std::vector<cplx> reference_wavefunction(const MassiveRep& rep, const FourVector& xi) {
    MassiveLabel z0 = make_label({0, 0, 0, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 1});
    return coherent_wavefunction(rep, z0, xi);
}

std::vector<cplx> coherent_wavefunction(const MassiveRep& rep, const MassiveLabel& z,
                                        const FourVector& xi) {
    ScalarAmp a = amp_at(rep, z, xi);
    std::vector<cplx> out(rep.r + 1);
    if (rep.r == 0) {
        out[0] = a.value;
        return out;
    }
    std::vector<cplx> spin = sym_power(a.w, rep.r);
    double dn = std::pow(a.den, 0.5 * rep.r);
    for (int k = 0; k <= rep.r; ++k) out[k] = a.value * spin[k] / dn;
    return out;
}

std::vector<cplx> u_action(const MassiveRep& rep, const Mat2& alpha, const FourVector& X,
                           const std::function<std::vector<cplx>(const FourVector&)>& psi,
                           const FourVector& xi) {
    Mat2 ai = alpha.inverse();
    FourVector xi_back = matrix_to_vector(ai * vector_to_matrix(xi) * ai.adjoint());
    Mat2 little = omega_xi_inverse(xi) * alpha * boost_spinor_matrix(xi_back);
    RepMatrix D = rep_matrix(little, rep.r);
    std::vector<cplx> v = rep_apply(D, psi(xi_back));
    cplx phase = std::exp(cplx(0, -rep.M * mdot(xi, X)));
    for (auto& c : v) c *= phase;
    return v;
}

IntegralC overlap(const MassiveRep& rep, const MassiveLabel& z1, const MassiveLabel& z2,
                  const QuadratureSpec& quad) {
    const double sig = rep.sigma;
    Vec3 center{0.5 * (z1.I[1] + z2.I[1]), 0.5 * (z1.I[2] + z2.I[2]),
                0.5 * (z1.I[3] + z2.I[3])};
    double half = quad.cutoff_sigmas * sig;

    auto run = [&](int n) {
        const auto& xs = gl_nodes(n);
        const auto& ws = gl_weights(n);
        std::size_t total = (std::size_t)n * n * n;
        const int r = rep.r;
        cplx s = deterministic_sum<cplx>(total, [&](std::size_t idx) {
            int i = (int)(idx / ((std::size_t)n * n));
            int j = (int)((idx / n) % n);
            int k = (int)(idx % n);
            Vec3 xv{center[0] + half * xs[i], center[1] + half * xs[j],
                    center[2] + half * xs[k]};
            FourVector xi = on_shell(xv);
            double wt = ws[i] * ws[j] * ws[k] * half * half * half;
            wt *= rep.M * rep.M / (2 * xi[0]);  // invariant measure density
            ScalarAmp a1 = amp_at(rep, z1, xi);
            ScalarAmp a2 = amp_at(rep, z2, xi);
            cplx integrand = std::conj(a1.value) * a2.value;
            if (r > 0) {
                cplx s12 = std::conj(a1.w.a) * a2.w.a + std::conj(a1.w.b) * a2.w.b;
                integrand *= ipow(s12, r) / std::pow(a1.den * a2.den, 0.5 * r);
            }
            return integrand * wt;
        });
        return s;
    };

    cplx full = run(quad.nodes_per_axis);
    cplx halfres = run(std::max(8, quad.nodes_per_axis / 2));
    return {full, std::abs(full - halfres)};
}

MassiveCoefficients massive_coefficients(double sigma, double M, const QuadratureSpec& quad) {
    MassiveCoefficients co;
    co.sigma = sigma;
    const double cut = quad.cutoff_sigmas * sigma;
    const int n = quad.nodes_per_axis;

    PanelRule full = uniform_panels(0, cut, 4, n);
    PanelRule halfr = uniform_panels(0, cut, 4, std::max(8, n / 2));
    double gnorm = std::pow(pi * sigma * sigma, -1.5);

    // kappa = <xi^0>
    auto kint = [&](double t) {
        return 4 * pi * gnorm * t * t * std::sqrt(1 + t * t) * std::exp(-t * t / (sigma * sigma));
    };
    Integral kq = integrate_1d(kint, full, halfr);
    co.kappa = kq.value;
    co.kappa_err = kq.error;

    // omega: one-dimensional integral
    auto oint = [&](double t) {
        return std::exp(-t * t / (sigma * sigma)) / (1 + t * t) / std::sqrt(pi * sigma * sigma);
    };
    Integral oq = integrate_1d(oint, full, halfr);
    co.omega = oq.value;
    co.omega_err = oq.error;

    if (co.kappa_err > quad.target_tol || co.omega_err > quad.target_tol)
        throw ToleranceError("massive_coefficients: 1d quadrature tolerance not reached",
                             std::max(co.kappa_err, co.omega_err));

    // v and the momentum covariance from the 3d reference density
    auto run3d = [&](int nn) {
        const auto& xs = gl_nodes(nn);
        const auto& ws = gl_weights(nn);
        struct Moments {
            double v = 0;
            double m1[4] = {};
            double m2[4][4] = {};
            Moments operator+(const Moments& o) const {
                Moments s;
                s.v = v + o.v;
                for (int a = 0; a < 4; ++a) {
                    s.m1[a] = m1[a] + o.m1[a];
                    for (int b = 0; b < 4; ++b) s.m2[a][b] = m2[a][b] + o.m2[a][b];
                }
                return s;
            }
        };
        std::size_t total = (std::size_t)nn * nn * nn;
        return deterministic_sum<Moments>(total, [&](std::size_t idx) {
            int i = (int)(idx / ((std::size_t)nn * nn));
            int j = (int)((idx / nn) % nn);
            int k = (int)(idx % nn);
            Vec3 xv{cut * xs[i], cut * xs[j], cut * xs[k]};
            FourVector xi = on_shell(xv);
            double w = ws[i] * ws[j] * ws[k] * cut * cut * cut * gnorm *
                       std::exp(-xv.dot(xv) / (sigma * sigma));
            Moments m;
            m.v = w * 2 * xi[3] / (xi[0] + xi[3]);
            for (int a = 0; a < 4; ++a) {
                m.m1[a] = w * xi[a];
                for (int b = a; b < 4; ++b) m.m2[a][b] = w * xi[a] * xi[b];
            }
            return m;
        });
    };
    auto mfull = run3d(std::min(n, 48));
    auto mhalf = run3d(std::max(8, std::min(n, 48) / 2));
    co.v = mfull.v;
    co.v_err = std::abs(mfull.v - mhalf.v);

    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            double cov = mfull.m2[a][b] - mfull.m1[a] * mfull.m1[b];
            co.K_numeric[a][b] = co.K_numeric[b][a] = M * M * cov;
        }
    FourVector nvec{1, 0, 0, 0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double s2 = sigma * sigma;
            co.K_paper[a][b] = M * M * ((1 + 2.0 / 3.0 * s2 - co.kappa * co.kappa) *
                                            nvec[a] * nvec[b] -
                                        s2 / 6.0 * eta(a, b));
            co.K_diff_max = std::max(co.K_diff_max,
                                     std::abs(co.K_paper[a][b] - co.K_numeric[a][b]));
        }
    return co;
}

MCEstimate kappa_mc(double sigma, const MCConfig& mc) {
    CounterRng rng{mc.seed};
    double s = sigma / std::sqrt(2.0);
    std::size_t nb = 100;
    std::size_t per = mc.samples / nb;
    std::vector<double> batch(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        batch[b] = deterministic_sum<double>(per, [&](std::size_t i) {
            std::size_t idx = b * per + i;
            double x = s * rng.normal(idx, 0);
            double y = s * rng.normal(idx, 1);
            double z = s * rng.normal(idx, 2);
            return std::sqrt(1 + x * x + y * y + z * z);
        }) / per;
    }
    double mean = deterministic_sum_serial<double>(nb, [&](std::size_t b) { return batch[b]; }) / nb;
    double var = 0;
    for (auto v : batch) var += (v - mean) * (v - mean);
    var /= (nb - 1);
    return {mean, std::sqrt(var / nb)};
}

Mat2 d_boost_spinor_matrix(const FourVector& I, const FourVector& dI4) {
    double s = std::sqrt(2 * (1 + I[0]));
    Mat2 one_it = Mat2::identity() + vector_to_matrix(I);
    return vector_to_matrix(dI4) * (1.0 / s) + one_it * (-dI4[0] / (s * s * s));
}

Mat2 d_su2_rotation(const Vec3& m, const Vec3& dm) {
    double c = std::sqrt((1 + m[2]) / 2);
    double dc = dm[2] / (4 * c);
    cplx mp(m[0], m[1]), dmp(dm[0], dm[1]);
    cplx q = 1.0 / (2 * c), dq = -dc / (2 * c * c);
    return {dc, -std::conj(dmp) * q - std::conj(mp) * dq,
            dmp * q + mp * dq, dc};
}

TangentDressing dress_tangent(const MassiveLabel& z, const Tangent& t) {
    TangentDressing d;
    Vec3 iv{z.I[1], z.I[2], z.I[3]};
    double dI0 = iv.dot(t.dI) / z.I[0];
    d.dI4 = {dI0, t.dI[0], t.dI[1], t.dI[2]};
    d.dm_t = t.dm - z.mhat * z.mhat.dot(t.dm);
    Mat2 domega = d_boost_spinor_matrix(z.I, d.dI4);
    Mat2 du = d_su2_rotation(z.mhat, d.dm_t);
    Mat2 omega = boost_spinor_matrix(z.I);
    Mat2 u = su2_rotation(z.mhat);
    d.dalpha = domega * u + omega * du;
    d.dmu = d.dalpha.col(0);
    d.dlam = d.dalpha.col(1);
    // dJ from the product rule on Lambda(omega_I)(0, mhat)
    Mat2 mt = vector_to_matrix({0, z.mhat[0], z.mhat[1], z.mhat[2]});
    Mat2 dmt = vector_to_matrix({0, d.dm_t[0], d.dm_t[1], d.dm_t[2]});
    Mat2 h = domega * mt * omega.adjoint() + omega * mt * domega.adjoint() +
             omega * dmt * omega.adjoint();
    d.dJ4 = matrix_to_vector(h);
    return d;
}

double connection_analytic_spinor(const MassiveRep& rep, const MassiveLabel& z,
                                  const FourVector& dX, const Spinor& dmu, double kappa) {
    cplx w = eps_product(dmu, z.lam);
    return -kappa * rep.M * mdot(z.I, dX) + rep.r * std::imag(w);
}

double connection_analytic(const MassiveRep& rep, const MassiveLabel& z, const Tangent& t,
                           double kappa) {
    TangentDressing d = dress_tangent(z, t);
    return connection_analytic_spinor(rep, z, t.dX, d.dmu, kappa);
}

double symplectic_analytic(const MassiveRep& rep, const MassiveLabel& z, const Tangent& t1,
                           const Tangent& t2, double kappa) {
    TangentDressing d1 = dress_tangent(z, t1);
    TangentDressing d2 = dress_tangent(z, t2);
    double val = kappa * rep.M * (mdot(d1.dI4, t2.dX) - mdot(d2.dI4, t1.dX));
    if (rep.r > 0) {
        double s = 0;
        for (int m = 0; m < 4; ++m) {
            if (z.I[m] == 0 && m != 0) continue;
            for (int n = 0; n < 4; ++n)
                for (int p = 0; p < 4; ++p)
                    for (int q = 0; q < 4; ++q) {
                        int lc = levi_civita(m, n, p, q);
                        if (!lc) continue;
                        double dii = d1.dI4[p] * d2.dI4[q] - d2.dI4[p] * d1.dI4[q];
                        double djj = d1.dJ4[p] * d2.dJ4[q] - d2.dJ4[p] * d1.dJ4[q];
                        s += lc * z.I[m] * z.J[n] * (dii - djj);
                    }
        }
        val += 0.25 * rep.r * s;
    }
    return val;
}

namespace {
double metric_spin_terms(const MassiveRep& rep, const MassiveLabel& z, const Tangent& t,
                         double kappa, double v) {
    if (rep.r == 0) return 0;
    TangentDressing d = dress_tangent(z, t);
    cplx p = eps_product(z.mu, d.dmu);
    Spinor xl = vector_to_matrix(t.dX) * z.lam;
    cplx q = std::conj(z.mu.a) * xl.a + std::conj(z.mu.b) * xl.b;  // mu^dag dX~ lam
    double middle = -0.5 * kappa * rep.M * rep.r * std::imag(q * p);
    double spin = 0.25 * rep.r * rep.r * (1 - v) * std::norm(p);
    return middle + spin;
}
}  // namespace

double metric_analytic(const MassiveRep& rep, const MassiveLabel& z, const Tangent& t,
                       const MassiveCoefficients& co) {
    TangentDressing d = dress_tangent(z, t);
    double s2 = co.sigma * co.sigma;
    double ds2 = -co.omega / (3 * s2) * mdot(d.dI4, d.dI4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            ds2 += co.K_numeric[a][b] * eta(a, a) * eta(b, b) * t.dX[a] * t.dX[b];
    return ds2 + metric_spin_terms(rep, z, t, co.kappa, co.v);
}

double metric_leading(const MassiveRep& rep, const MassiveLabel& z, const Tangent& t,
                      const MassiveCoefficients& co) {
    TangentDressing d = dress_tangent(z, t);
    double s2 = co.sigma * co.sigma;
    double idx = mdot(z.I, t.dX);
    double ds2 = -1.0 / (6 * s2) * mdot(d.dI4, d.dI4) +
                 rep.M * rep.M * s2 / 6.0 * (idx * idx - mdot(t.dX, t.dX));
    return ds2 + metric_spin_terms(rep, z, t, co.kappa, co.v);
}

MCEstimate resolution_check(const MassiveRep& rep, const SurfaceLabel& surface,
                            const FourVector& xi_in, const QuadratureSpec& quad,
                            const MCConfig& mc) {
    (void)quad;
    FourVector xi = xi_in;
    if (std::abs(msq(xi) - 1) > 1e-10 || !xi.is_future())
        throw std::invalid_argument("resolution_check: xi must be unit timelike future");
    // work in the frame where the surface normal is (1,0,0,0)
    if (std::abs(surface.n[0] - 1) > 1e-12 || std::abs(surface.n[1]) > 1e-12 ||
        std::abs(surface.n[2]) > 1e-12 || std::abs(surface.n[3]) > 1e-12) {
        Mat4 Linv = sl2c_to_lorentz(boost_spinor_matrix(surface.n).inverse());
        xi = Linv * xi;
    }

    double sigma = rep.sigma;
    MassiveCoefficients co = massive_coefficients(sigma, rep.M, QuadratureSpec{});
    double kappa = co.kappa;
    double sp = sigma / std::sqrt(2.0);
    Vec3 ctr{xi[1], xi[2], xi[3]};
    CounterRng rng{mc.seed};
    double gn = std::pow(two_pi * sp * sp, -1.5);

    std::size_t nb = 100;
    std::size_t per = mc.samples / nb;
    std::vector<double> batch(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        batch[b] = deterministic_sum<double>(per, [&](std::size_t i) {
            std::size_t idx = b * per + i;
            Vec3 iv{ctr[0] + sp * rng.normal(idx, 0), ctr[1] + sp * rng.normal(idx, 1),
                    ctr[2] + sp * rng.normal(idx, 2)};
            double m3[3];
            rng.sphere(idx, 3, m3);
            MassiveLabel z = make_label({surface.t, 0, 0, 0}, iv, Vec3{m3[0], m3[1], m3[2]});
            // spin-contracted |Psi(xi)|^2
            ScalarAmp a = amp_at(rep, z, xi);
            double dens = std::norm(a.value);
            if (rep.r > 0) {
                double ww = std::real(std::conj(a.w.a) * a.w.a + std::conj(a.w.b) * a.w.b);
                dens *= std::pow(ww / a.den, rep.r);
            }
            Vec3 dv = iv - ctr;
            double pdf = gn * std::exp(-dv.dot(dv) / (2 * sp * sp)) / (4 * pi);
            return dens / pdf;
        }) / per;
    }
    double mean = deterministic_sum_serial<double>(nb, [&](std::size_t b) { return batch[b]; }) / nb;
    double var = 0;
    for (auto v : batch) var += (v - mean) * (v - mean);
    var /= (nb - 1);
    double target = 4 * pi * 2 * kappa * xi[0] / (rep.M * rep.M);
    if (mc.samples < 100) throw std::invalid_argument("resolution_check: too few samples");
    return {mean / target, std::sqrt(var / nb) / target};
}

QuantizeResult quantize(const MassiveRep& rep, const SurfaceLabel& surface,
                        const std::function<double(const Vec3&, const Vec3&, const Vec3&)>& f,
                        const MassiveLabel& z1_in, const MassiveLabel& z2_in, const MCConfig& mc,
                        const QuadratureSpec& inner_quad) {
    MassiveLabel z1 = z1_in, z2 = z2_in;
    if (std::abs(surface.n[0] - 1) > 1e-12 || std::abs(surface.n[1]) > 1e-12 ||
        std::abs(surface.n[2]) > 1e-12 || std::abs(surface.n[3]) > 1e-12)
        throw std::invalid_argument("quantize: only the standard foliation normal is supported");

    MassiveCoefficients co = massive_coefficients(rep.sigma, rep.M, QuadratureSpec{});
    double kappa = co.kappa;
    double wI = mc.proposal_width_momentum > 0 ? mc.proposal_width_momentum : rep.sigma;
    double wx = mc.proposal_width_position > 0 ? mc.proposal_width_position
                                               : 1.0 / (rep.M * rep.sigma);
    Vec3 cI{0.5 * (z1.I[1] + z2.I[1]), 0.5 * (z1.I[2] + z2.I[2]), 0.5 * (z1.I[3] + z2.I[3])};
    Vec3 cx{0.5 * (z1.X[1] + z2.X[1]), 0.5 * (z1.X[2] + z2.X[2]), 0.5 * (z1.X[3] + z2.X[3])};
    CounterRng rng{mc.seed};
    double gnI = std::pow(two_pi * wI * wI, -1.5);
    double gnx = std::pow(two_pi * wx * wx, -1.5);
    double norm = std::pow(rep.M, 3) / (std::pow(two_pi, 3) * 4 * pi * kappa);

    std::size_t nb = 50;
    std::size_t per = mc.samples / nb;
    std::vector<cplx> batch(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        batch[b] = deterministic_sum<cplx>(per, [&](std::size_t i) -> cplx {
            std::size_t idx = b * per + i;
            Vec3 iv = cI + Vec3{wI * rng.normal(idx, 0), wI * rng.normal(idx, 1),
                                wI * rng.normal(idx, 2)};
            Vec3 xv = cx + Vec3{wx * rng.normal(idx, 4), wx * rng.normal(idx, 5),
                                wx * rng.normal(idx, 6)};
            double m3[3];
            rng.sphere(idx, 8, m3);
            Vec3 mh{m3[0], m3[1], m3[2]};
            double fv = f(xv, iv, mh);
            if (!std::isfinite(fv))
                throw std::invalid_argument("quantize: non-finite integrand sample");
            MassiveLabel zs = make_label({surface.t, xv[0], xv[1], xv[2]}, iv, mh);
            cplx o1 = overlap(rep, z1, zs, inner_quad).value;
            cplx o2 = overlap(rep, zs, z2, inner_quad).value;
            Vec3 dI = iv - cI, dx = xv - cx;
            double pdf = gnI * std::exp(-dI.dot(dI) / (2 * wI * wI)) * gnx *
                         std::exp(-dx.dot(dx) / (2 * wx * wx)) / (4 * pi);
            return norm * fv * o1 * o2 / pdf;
        }) * (1.0 / per);
    }
    cplx mean = deterministic_sum_serial<cplx>(nb, [&](std::size_t b) { return batch[b]; }) *
                (1.0 / (double)nb);
    double var = 0;
    for (auto v : batch) var += std::norm(v - mean);
    var /= (nb - 1);
    return {mean, std::sqrt(var / nb)};
}

MassiveLabel transform_label(const Mat4& L, const MassiveLabel& z) {
    if (!is_proper_orthochronous(L))
        throw std::invalid_argument("transform_label: matrix is not proper orthochronous");
    FourVector X2 = L * z.X;
    FourVector I2 = L * z.I;
    FourVector J2 = L * z.J;
    Mat4 unboost = sl2c_to_lorentz(boost_spinor_matrix(I2).inverse());
    FourVector m4 = unboost * J2;
    return make_label_I(X2, I2, Vec3{m4[1], m4[2], m4[3]});
}

MassiveLabel translate_label(const FourVector& C, const MassiveLabel& z) {
    MassiveLabel out = z;
    out.X = z.X + C;
    return out;
}

}  // namespace pcs::massive
