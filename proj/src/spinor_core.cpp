#include "pcs/spinor_core.hpp"

namespace pcs {

int levi_civita(int a, int b, int c, int d) {
    int p[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) {
                std::swap(p[i], p[j]);
                sign = -sign;
            }
        }
    return sign;
}

Mat2 vector_to_matrix(const FourVector& X) {
    return {cplx(X[0] + X[3], 0), cplx(X[1], -X[2]),
            cplx(X[1], X[2]), cplx(X[0] - X[3], 0)};
}

FourVector matrix_to_vector(const Mat2& x) {
    if (!x.hermitian(1e-10)) throw std::invalid_argument("matrix_to_vector: input is not hermitian");
    return {0.5 * std::real(x.e00 + x.e11), std::real(x.e10),
            std::imag(x.e10), 0.5 * std::real(x.e00 - x.e11)};
}

FourVector null_from_spinor(const Spinor& c) {
    double n = c.norm_sq();
    if (n == 0) throw std::invalid_argument("null_from_spinor: zero spinor");
    cplx m = std::conj(c.a) * c.b;
    return {n, 2 * std::real(m), 2 * std::imag(m), std::norm(c.a) - std::norm(c.b)};
}

Spinor spinor_from_null(const FourVector& I) {
    if (!I.is_future() || std::abs(msq(I)) > 1e-10 * std::max(1.0, I[0] * I[0]))
        throw std::invalid_argument("spinor_from_null: input is not future null");
    double s = I[0] + I[3];
    if (s < section_delta * I[0]) return {0.0, std::sqrt(I[0])};
    return {std::sqrt(s / 2), cplx(I[1], I[2]) / std::sqrt(2 * s)};
}

Mat4 sl2c_to_lorentz(const Mat2& alpha) {
    if (std::abs(alpha.det() - 1.0) > 1e-9)
        throw std::invalid_argument("sl2c_to_lorentz: det != 1");
    static const Mat2 sigma[4] = {Mat2::identity(),
                                  {0, 1, 1, 0},
                                  {0, cplx(0, -1), cplx(0, 1), 0},
                                  {1, 0, 0, -1}};
    Mat4 L;
    Mat2 ad = alpha.adjoint();
    for (int nu = 0; nu < 4; ++nu) {
        Mat2 m = alpha * sigma[nu] * ad;
        L.e[0][nu] = 0.5 * std::real(m.e00 + m.e11);
        L.e[1][nu] = std::real(m.e10);
        L.e[2][nu] = std::imag(m.e10);
        L.e[3][nu] = 0.5 * std::real(m.e00 - m.e11);
    }
    return L;
}

Mat2 boost_spinor_matrix(const FourVector& I) {
    if (!I.is_future() || std::abs(msq(I) - 1.0) > 1e-10)
        throw std::invalid_argument("boost_spinor_matrix: input is not a unit future timelike vector");
    Mat2 t = vector_to_matrix(I);
    double s = std::sqrt(2 * (1 + I[0]));
    return (Mat2::identity() + t) * (1.0 / s);
}

PolarDecomposition polar_decompose(const Mat2& alpha) {
    Mat2 h = alpha * alpha.adjoint();  // hermitian positive, det = |det alpha|^2
    double d = std::sqrt(std::abs(h.det()));
    // omega = sqrt(h): for det h = d^2, sqrt(h) = (h + d)/sqrt(tr h + 2d)
    double tr = std::real(h.trace());
    Mat2 omega = (h + Mat2::identity() * d) * (1.0 / std::sqrt(tr + 2 * d));
    Mat2 u = omega.inverse() * alpha;
    return {omega, u};
}

NullTetrad tetrad_from_spinors(const Spinor& iota, const Spinor& j) {
    if (std::abs(eps_product(iota, j) - 1.0) > 1e-10)
        throw std::invalid_argument("tetrad_from_spinors: iota eps j != 1");
    static const Mat2 sigma[4] = {Mat2::identity(),
                                  {0, 1, 1, 0},
                                  {0, cplx(0, -1), cplx(0, 1), 0},
                                  {1, 0, 0, -1}};
    auto sandwich = [](const Mat2& m, const Spinor& x, const Spinor& y) {
        Spinor my = m * y;
        return std::conj(x.a) * my.a + std::conj(x.b) * my.b;
    };
    NullTetrad t;
    t.iota = iota;
    t.j = j;
    t.I = null_from_spinor(iota);
    t.J = null_from_spinor(j);
    for (int mu = 0; mu < 4; ++mu) {
        cplx ij = sandwich(sigma[mu], iota, j);
        t.m1[mu] = std::real(ij);
        t.m2[mu] = std::imag(ij);
    }
    return t;
}

double det4(const Mat4& L) {
    // cofactor expansion over the first row
    auto m3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return L.e[r0][c0] * (L.e[r1][c1] * L.e[r2][c2] - L.e[r1][c2] * L.e[r2][c1]) -
               L.e[r0][c1] * (L.e[r1][c0] * L.e[r2][c2] - L.e[r1][c2] * L.e[r2][c0]) +
               L.e[r0][c2] * (L.e[r1][c0] * L.e[r2][c1] - L.e[r1][c1] * L.e[r2][c0]);
    };
    return L.e[0][0] * m3(1, 2, 3, 1, 2, 3) - L.e[0][1] * m3(1, 2, 3, 0, 2, 3) +
           L.e[0][2] * m3(1, 2, 3, 0, 1, 3) - L.e[0][3] * m3(1, 2, 3, 0, 1, 2);
}

double lorentz_defect(const Mat4& L) {
    double worst = 0;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += L.e[k][m] * eta(k, k) * L.e[k][n];
            worst = std::max(worst, std::abs(s - eta(m, n)));
        }
    return worst;
}

bool is_proper_orthochronous(const Mat4& L, double tol) {
    return lorentz_defect(L) <= tol && std::abs(det4(L) - 1.0) <= tol && L.e[0][0] >= 1.0 - tol;
}

}  // namespace pcs
