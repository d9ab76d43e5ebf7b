#ifndef PVI_MAT2_HPP
#define PVI_MAT2_HPP

#include "pvi/covering.hpp"

namespace pvi {

// 2x2 complex matrix, row-major.
struct Mat2 {
    Complex a{0.0}, b{0.0}, c{0.0}, d{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex trace() const { return a + d; }
    Complex det() const { return a * d - b * c; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }

    Mat2 inverse() const {
        Complex dt = det();
        if (std::abs(dt) < 1e-300) throw numerical_error("Mat2: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    double max_abs() const {
        return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    }
};

inline Mat2 operator*(Complex s, const Mat2& m) { return m * s; }

}  // namespace pvi

#endif
