#include "k3nu/linalg4.hpp"

#include <cmath>
#include <stdexcept>

namespace k3nu {

Vec4 Vec4::operator+(const Vec4& o) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

Vec4 Vec4::operator-(const Vec4& o) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

Vec4 Vec4::operator*(double s) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r.a[i] = a[i] * s;
    return r;
}

bool Vec4::finite() const {
    for (double x : a)
        if (!std::isfinite(x)) return false;
    return true;
}

double Vec4::norm() const {
    return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

double Vec4::spatial_norm() const {
    return std::sqrt(a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

Mat4 Mat4::zero() { return Mat4{}; }

Mat4 Mat4::identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat4 Mat4::diagonal(double d0, double d1, double d2, double d3) {
    Mat4 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    m(3, 3) = d3;
    return m;
}

Mat4 Mat4::operator+(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    }
    return r;
}

Mat4 Mat4::operator*(double s) const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = e[i] * s;
    return r;
}

Mat4 Mat4::transposed() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
    return r;
}

bool Mat4::finite() const {
    for (double x : e)
        if (!std::isfinite(x)) return false;
    return true;
}

double Mat4::norm_1() const {
    double best = 0.0;
    for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i) s += std::fabs((*this)(i, j));
        if (s > best) best = s;
    }
    return best;
}

double Mat4::norm_max() const {
    double best = 0.0;
    for (double x : e) best = std::max(best, std::fabs(x));
    return best;
}

double Mat4::norm_fro() const {
    double s = 0.0;
    for (double x : e) s += x * x;
    return std::sqrt(s);
}

double dot(const Vec4& u, const Vec4& v) {
    return u.a[0] * v.a[0] + u.a[1] * v.a[1] + u.a[2] * v.a[2] + u.a[3] * v.a[3];
}

Vec4 mat_vec(const Mat4& m, const Vec4& v) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += m(i, k) * v.a[k];
        r.a[i] = s;
    }
    return r;
}

namespace {

// LU factorization with partial pivoting, in place. perm[i] is the source
// row of factored row i. Throws on (numerically) singular input.
struct Lu {
    Mat4 lu;
    int perm[4];
};

Lu factor(Mat4 a) {
    Lu f;
    f.lu = a;
    for (int i = 0; i < 4; ++i) f.perm[i] = i;
    for (int k = 0; k < 4; ++k) {
        int piv = k;
        double best = std::fabs(f.lu(k, k));
        for (int i = k + 1; i < 4; ++i) {
            double v = std::fabs(f.lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) throw std::invalid_argument("linalg4: singular matrix in solve");
        if (piv != k) {
            for (int j = 0; j < 4; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
        }
        for (int i = k + 1; i < 4; ++i) {
            f.lu(i, k) /= f.lu(k, k);
            for (int j = k + 1; j < 4; ++j) f.lu(i, j) -= f.lu(i, k) * f.lu(k, j);
        }
    }
    return f;
}

Vec4 lu_solve(const Lu& f, const Vec4& b) {
    Vec4 x;
    for (int i = 0; i < 4; ++i) x.a[i] = b.a[f.perm[i]];
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < i; ++j) x.a[i] -= f.lu(i, j) * x.a[j];
    for (int i = 3; i >= 0; --i) {
        for (int j = i + 1; j < 4; ++j) x.a[i] -= f.lu(i, j) * x.a[j];
        x.a[i] /= f.lu(i, i);
    }
    return x;
}

}  // namespace

Vec4 solve(const Mat4& a, const Vec4& b) {
    if (!a.finite() || !b.finite()) throw std::invalid_argument("linalg4: non-finite solve input");
    return lu_solve(factor(a), b);
}

Mat4 solve(const Mat4& a, const Mat4& b) {
    if (!a.finite() || !b.finite()) throw std::invalid_argument("linalg4: non-finite solve input");
    Lu f = factor(a);
    Mat4 x;
    for (int col = 0; col < 4; ++col) {
        Vec4 rhs;
        for (int i = 0; i < 4; ++i) rhs.a[i] = b(i, col);
        Vec4 sol = lu_solve(f, rhs);
        for (int i = 0; i < 4; ++i) x(i, col) = sol.a[i];
    }
    return x;
}

Mat4 mat_exp(const Mat4& m, double t) {
    if (!m.finite() || !std::isfinite(t))
        throw std::invalid_argument("linalg4: non-finite mat_exp input");
    if (t == 0.0) return Mat4::identity();

    Mat4 a = m * t;
    if (!a.finite()) throw std::invalid_argument("linalg4: mat_exp argument overflow");

    // Degree-13 Pade with scaling and squaring (Higham's theta_13 bound).
    static const double b[14] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;

    int s = 0;
    double n1 = a.norm_1();
    if (!std::isfinite(n1)) throw std::invalid_argument("linalg4: mat_exp argument overflow");
    if (n1 > theta13) {
        s = static_cast<int>(std::ceil(std::log2(n1 / theta13)));
        a = a * std::ldexp(1.0, -s);
    }

    const Mat4 id = Mat4::identity();
    const Mat4 a2 = a * a;
    const Mat4 a4 = a2 * a2;
    const Mat4 a6 = a2 * a4;

    Mat4 u = a * (a6 * (a6 * b[13] + a4 * b[11] + a2 * b[9]) + a6 * b[7] + a4 * b[5] +
                  a2 * b[3] + id * b[1]);
    Mat4 v = a6 * (a6 * b[12] + a4 * b[10] + a2 * b[8]) + a6 * b[6] + a4 * b[4] + a2 * b[2] +
             id * b[0];

    Mat4 r = solve(v - u, v + u);
    for (int i = 0; i < s; ++i) r = r * r;
    return r;
}

}  // namespace k3nu
