#pragma once

#include <cmath>

#include "sturmlab/ball.hpp"

namespace sturmlab {

// 2x2 real matrix, double mode. Norm is the spectral norm via the exact
// closed-form singular values; spectral radius via the characteristic
// polynomial. Determinant tracked on demand.
struct Mat2d {
    double a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

    static Mat2d identity() { return {}; }
    static Mat2d diag(double x, double y) { return {x, 0, 0, y}; }
    // rotation by 2*pi*x
    static Mat2d rotation(double x) {
        double co = std::cos(2 * M_PI * x), si = std::sin(2 * M_PI * x);
        return {co, -si, si, co};
    }

    Mat2d operator*(const Mat2d& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2d operator-(const Mat2d& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2d scaled(double s) const { return {a * s, b * s, c * s, d * s}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    double frobenius() const { return std::sqrt(a * a + b * b + c * c + d * d); }

    // exact 2x2 singular values: s1 = Q + R, s2 = |Q - R|
    double op_norm() const {
        double E = (a + d) / 2, F = (a - d) / 2, G = (c + b) / 2, H = (c - b) / 2;
        return std::hypot(E, H) + std::hypot(F, G);
    }
    double smin() const {
        double E = (a + d) / 2, F = (a - d) / 2, G = (c + b) / 2, H = (c - b) / 2;
        return std::abs(std::hypot(E, H) - std::hypot(F, G));
    }

    double spectral_radius() const {
        double t = trace(), dd = det();
        double disc = t * t - 4 * dd;
        if (disc >= 0) return (std::abs(t) + std::sqrt(disc)) / 2;
        return std::sqrt(dd);  // complex pair: |lambda| = sqrt(det)
    }
};

// Ball mode, used for identity checks where the result must be an enclosure.
struct Mat2b {
    BallReal a, b, c, d;

    static Mat2b identity(long prec) {
        Mat2b m;
        m.a = BallReal::from_long(1, prec);
        m.b = BallReal::from_long(0, prec);
        m.c = BallReal::from_long(0, prec);
        m.d = BallReal::from_long(1, prec);
        return m;
    }
    static Mat2b diag(const BallReal& x, const BallReal& y) {
        Mat2b m;
        m.a = x;
        m.d = y;
        m.b = BallReal::from_long(0, 64);
        m.c = BallReal::from_long(0, 64);
        return m;
    }
    // rotation by 2*pi*x
    static Mat2b rotation(const BallReal& x) {
        Mat2b m;
        m.a = cos2pi(x);
        m.d = m.a;
        m.c = sin2pi(x);
        m.b = neg(m.c);
        return m;
    }

    Mat2b operator*(const Mat2b& o) const {
        Mat2b r;
        r.a = add(mul(a, o.a), mul(b, o.c));
        r.b = add(mul(a, o.b), mul(b, o.d));
        r.c = add(mul(c, o.a), mul(d, o.c));
        r.d = add(mul(c, o.b), mul(d, o.d));
        return r;
    }
    Mat2b operator-(const Mat2b& o) const {
        Mat2b r;
        r.a = sub(a, o.a);
        r.b = sub(b, o.b);
        r.c = sub(c, o.c);
        r.d = sub(d, o.d);
        return r;
    }
    Mat2b scaled(const BallReal& s) const {
        Mat2b r;
        r.a = mul(a, s);
        r.b = mul(b, s);
        r.c = mul(c, s);
        r.d = mul(d, s);
        return r;
    }

    BallReal det() const { return sub(mul(a, d), mul(b, c)); }
    BallReal trace() const { return add(a, d); }
    BallReal frobenius() const {
        return sturmlab::sqrt(add(add(sqr(a), sqr(b)), add(sqr(c), sqr(d))));
    }
};

}  // namespace sturmlab
