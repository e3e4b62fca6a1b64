#include "pcs/su2.hpp"

namespace pcs {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    double v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

RepMatrix rep_matrix(const Mat2& alpha, int r) {
    if (r < 0) throw std::invalid_argument("rep_matrix: r must be non-negative");
    if (std::abs(alpha.det() - 1.0) > 1e-9) throw std::invalid_argument("rep_matrix: det != 1");
    const cplx a = alpha.e00, b = alpha.e01, c = alpha.e10, e = alpha.e11;
    RepMatrix D;
    D.r = r;
    D.m.assign((r + 1) * (r + 1), cplx(0));
    // Column k: expand (a x + c y)^{r-k} (b x + e y)^k in monomials x^{r-j} y^j.
    std::vector<cplx> apow(r + 1, 1), cpow(r + 1, 1), bpow(r + 1, 1), epow(r + 1, 1);
    for (int i = 1; i <= r; ++i) {
        apow[i] = apow[i - 1] * a;
        cpow[i] = cpow[i - 1] * c;
        bpow[i] = bpow[i - 1] * b;
        epow[i] = epow[i - 1] * e;
    }
    for (int k = 0; k <= r; ++k) {
        for (int j = 0; j <= r; ++j) {
            cplx s = 0;
            // p factors of y from the first bracket, q from the second; p+q=j
            int pmin = std::max(0, j - k), pmax = std::min(r - k, j);
            for (int p = pmin; p <= pmax; ++p) {
                int q = j - p;
                s += binomial(r - k, p) * apow[r - k - p] * cpow[p] *
                     binomial(k, q) * bpow[k - q] * epow[q];
            }
            D.at(j, k) = std::sqrt(binomial(r, k) / binomial(r, j)) * s;
        }
    }
    return D;
}

RepMatrix rep_mul(const RepMatrix& a, const RepMatrix& b) {
    if (a.r != b.r) throw std::invalid_argument("rep_mul: mismatched labels");
    RepMatrix out;
    out.r = a.r;
    int n = a.dim();
    out.m.assign(n * n, cplx(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            cplx aik = a.at(i, k);
            if (aik == cplx(0)) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

std::vector<cplx> rep_apply(const RepMatrix& a, const std::vector<cplx>& v) {
    int n = a.dim();
    if ((int)v.size() != n) throw std::invalid_argument("rep_apply: dimension mismatch");
    std::vector<cplx> out(n, cplx(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += a.at(i, j) * v[j];
    return out;
}

cplx highest_weight_overlap(const Mat2& beta, int r) {
    cplx v = 1;
    for (int i = 0; i < r; ++i) v *= beta.e00;
    return v;
}

std::vector<cplx> sym_power(const Spinor& w, int r) {
    std::vector<cplx> v(r + 1);
    std::vector<cplx> p0(r + 1, 1), p1(r + 1, 1);
    for (int i = 1; i <= r; ++i) {
        p0[i] = p0[i - 1] * w.a;
        p1[i] = p1[i - 1] * w.b;
    }
    for (int k = 0; k <= r; ++k) v[k] = std::sqrt(binomial(r, k)) * p0[r - k] * p1[k];
    return v;
}

Mat2 su2_rotation(const Vec3& mhat) {
    if (std::abs(mhat.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("su2_rotation: mhat is not a unit vector");
    if (mhat[2] < -1 + 1e-12) {
        // antipode: rotate about xhat by pi
        return {0, cplx(0, -1), cplx(0, -1), 0};
    }
    double c = std::sqrt((1 + mhat[2]) / 2);
    cplx mp(mhat[0], mhat[1]);
    return {c, -std::conj(mp) / (2 * c), mp / (2 * c), c};
}

std::vector<cplx> su2_coherent(const Vec3& mhat, int r) {
    Mat2 u = su2_rotation(mhat);
    return sym_power(u.col(0), r);
}

cplx su2_overlap(const Vec3& m1, const Vec3& m2, int r) {
    Spinor w1 = su2_rotation(m1).col(0);
    Spinor w2 = su2_rotation(m2).col(0);
    cplx d = std::conj(w1.a) * w2.a + std::conj(w1.b) * w2.b;
    cplx v = 1;
    for (int i = 0; i < r; ++i) v *= d;
    return v;
}

}  // namespace pcs
