#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

// Small fixed-size types used throughout: Minkowski four-vectors with
// signature (+,-,-,-), two-component spinors, complex 2x2 matrices and
// real 4x4 Lorentz matrices. Everything is by value.

namespace pcs {

using cplx = std::complex<double>;

struct FourVector {
    std::array<double, 4> c{0, 0, 0, 0};

    FourVector() = default;
    FourVector(double t, double x, double y, double z) : c{t, x, y, z} {}

    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    FourVector operator+(const FourVector& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}; }
    FourVector operator-(const FourVector& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}; }
    FourVector operator*(double s) const { return {s * c[0], s * c[1], s * c[2], s * c[3]}; }
    FourVector operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    bool is_timelike(double tol = 1e-12) const;
    bool is_null(double tol = 1e-12) const;
    bool is_spacelike(double tol = 1e-12) const;
    bool is_future(double tol = 1e-12) const { return c[0] > tol; }
};

// Minkowski product with signature (+,-,-,-).
inline double mdot(const FourVector& a, const FourVector& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

inline double msq(const FourVector& a) { return mdot(a, a); }

inline bool FourVector::is_timelike(double tol) const { return msq(*this) > tol; }
inline bool FourVector::is_null(double tol) const { return std::abs(msq(*this)) <= tol * std::max(1.0, c[0] * c[0]); }
inline bool FourVector::is_spacelike(double tol) const { return msq(*this) < -tol; }

struct Vec3 {
    std::array<double, 3> c{0, 0, 0};
    Vec3() = default;
    Vec3(double x, double y, double z) : c{x, y, z} {}
    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }
    Vec3 operator+(const Vec3& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
    Vec3 operator-(const Vec3& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
    Vec3 operator*(double s) const { return {s * c[0], s * c[1], s * c[2]}; }
    double dot(const Vec3& o) const { return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2]; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        double n = norm();
        if (n == 0) throw std::invalid_argument("cannot normalize zero vector");
        return {c[0] / n, c[1] / n, c[2] / n};
    }
    Vec3 cross(const Vec3& o) const {
        return {c[1] * o.c[2] - c[2] * o.c[1], c[2] * o.c[0] - c[0] * o.c[2], c[0] * o.c[1] - c[1] * o.c[0]};
    }
};

struct Spinor {
    cplx a{0, 0};  // upper component c0
    cplx b{0, 0};  // lower component c1

    Spinor() = default;
    Spinor(cplx a_, cplx b_) : a(a_), b(b_) {}

    Spinor operator+(const Spinor& o) const { return {a + o.a, b + o.b}; }
    Spinor operator-(const Spinor& o) const { return {a - o.a, b - o.b}; }
    Spinor operator*(cplx s) const { return {s * a, s * b}; }
    double norm_sq() const { return std::norm(a) + std::norm(b); }
};

// Antisymmetric product c eps d = c0 d1 - c1 d0.
inline cplx eps_product(const Spinor& c, const Spinor& d) { return c.a * d.b - c.b * d.a; }

struct Mat2 {
    cplx e00{0}, e01{0}, e10{0}, e11{0};

    Mat2() = default;
    Mat2(cplx a, cplx b, cplx c, cplx d) : e00(a), e01(b), e10(c), e11(d) {}

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Mat2 operator+(const Mat2& o) const { return {e00 + o.e00, e01 + o.e01, e10 + o.e10, e11 + o.e11}; }
    Mat2 operator-(const Mat2& o) const { return {e00 - o.e00, e01 - o.e01, e10 - o.e10, e11 - o.e11}; }
    Mat2 operator*(const Mat2& o) const {
        return {e00 * o.e00 + e01 * o.e10, e00 * o.e01 + e01 * o.e11,
                e10 * o.e00 + e11 * o.e10, e10 * o.e01 + e11 * o.e11};
    }
    Mat2 operator*(cplx s) const { return {s * e00, s * e01, s * e10, s * e11}; }
    Spinor operator*(const Spinor& v) const { return {e00 * v.a + e01 * v.b, e10 * v.a + e11 * v.b}; }

    cplx det() const { return e00 * e11 - e01 * e10; }
    cplx trace() const { return e00 + e11; }
    Mat2 adjoint() const { return {std::conj(e00), std::conj(e10), std::conj(e01), std::conj(e11)}; }
    Mat2 inverse() const {
        cplx d = det();
        return Mat2{e11, -e01, -e10, e00} * (1.0 / d);
    }
    double norm() const {
        return std::sqrt(std::norm(e00) + std::norm(e01) + std::norm(e10) + std::norm(e11));
    }
    bool hermitian(double tol = 1e-10) const {
        return std::abs(std::imag(e00)) <= tol && std::abs(std::imag(e11)) <= tol &&
               std::abs(e01 - std::conj(e10)) <= tol;
    }
    Spinor col(int k) const { return k == 0 ? Spinor{e00, e10} : Spinor{e01, e11}; }
};

struct Mat4 {
    std::array<std::array<double, 4>, 4> e{};

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m.e[i][i] = 1;
        return m;
    }

    FourVector operator*(const FourVector& v) const {
        FourVector out;
        for (int i = 0; i < 4; ++i)
            out[i] = e[i][0] * v[0] + e[i][1] * v[1] + e[i][2] * v[2] + e[i][3] * v[3];
        return out;
    }
    Mat4 operator*(const Mat4& o) const {
        Mat4 out;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0;
                for (int k = 0; k < 4; ++k) s += e[i][k] * o.e[k][j];
                out.e[i][j] = s;
            }
        return out;
    }
    double max_abs_diff(const Mat4& o) const {
        double m = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(e[i][j] - o.e[i][j]));
        return m;
    }
};

// Totally antisymmetric symbol, +1 for even permutations of (0,1,2,3).
int levi_civita(int a, int b, int c, int d);

}  // namespace pcs
