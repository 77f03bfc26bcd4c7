// Dense real 4x4 kernel used by all dynamics code.
//
// Storage is row-major throughout: Mat4::e[4*r + c] is row r, column c.
// Every module in this project reuses this convention; no other matrix
// layout exists anywhere in the codebase.
#pragma once

#include <array>
#include <cstddef>

namespace k3nu {

struct Vec4 {
    std::array<double, 4> a{};

    double& operator[](int i) { return a[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return a[static_cast<std::size_t>(i)]; }

    Vec4 operator+(const Vec4& o) const;
    Vec4 operator-(const Vec4& o) const;
    Vec4 operator*(double s) const;

    bool finite() const;
    double norm() const;          // Euclidean, all four components
    double spatial_norm() const;  // Euclidean over components 1..3
};

struct Mat4 {
    std::array<double, 16> e{};

    static Mat4 zero();
    static Mat4 identity();
    static Mat4 diagonal(double d0, double d1, double d2, double d3);

    double& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
    double operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

    Mat4 operator+(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 operator*(const Mat4& o) const;
    Mat4 operator*(double s) const;

    Mat4 transposed() const;
    bool finite() const;

    double norm_1() const;    // max absolute column sum
    double norm_max() const;  // max absolute entry
    double norm_fro() const;  // Frobenius
};

double dot(const Vec4& u, const Vec4& v);
Vec4 mat_vec(const Mat4& m, const Vec4& v);

// exp(m*t) by scaling-and-squaring with a degree-13 Pade core.
// Exact identity at t = 0. Throws std::invalid_argument on non-finite
// input or when m*t overflows.
Mat4 mat_exp(const Mat4& m, double t);

// Solve a*x = b by LU with partial pivoting (throws on singular a).
Vec4 solve(const Mat4& a, const Vec4& b);
Mat4 solve(const Mat4& a, const Mat4& b);

}  // namespace k3nu
