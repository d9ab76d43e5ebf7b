#ifndef PVI_COVERING_HPP
#define PVI_COVERING_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace pvi {

using Complex = std::complex<double>;

// Thrown on precondition violations (bad input data, excluded values).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown on numerical failures (non-convergence, pole hits, step underflow).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point of the universal covering of C\{0}: modulus > 0 together with an
// unbounded real argument. Branches of log x and x^c are always read from
// the stored argument, never from a principal value.
struct CoveringPoint {
    double modulus{1.0};
    double argument{0.0};

    CoveringPoint() = default;
    CoveringPoint(double mod, double arg) : modulus(mod), argument(arg) {
        if (!(mod > 0.0)) throw validation_error("CoveringPoint: modulus must be positive");
    }

    Complex to_complex() const {
        return Complex(modulus * std::cos(argument), modulus * std::sin(argument));
    }
    Complex log() const { return Complex(std::log(modulus), argument); }
};

// Covering point from a complex value with principal argument.
inline CoveringPoint covering_from(Complex z) {
    double m = std::abs(z);
    if (!(m > 0.0)) throw validation_error("covering_from: zero modulus");
    return CoveringPoint(m, std::arg(z));
}

// x^c read on the covering: exp(c log x).
inline Complex cpow(const CoveringPoint& x, Complex c) {
    return std::exp(c * x.log());
}

// |x^c| = |x|^{Re c} e^{-Im c * arg x}; evaluated in log form to avoid
// spurious overflow.
inline double abs_cpow(const CoveringPoint& x, Complex c) {
    return std::exp(c.real() * std::log(x.modulus) - c.imag() * x.argument);
}

inline bool near(Complex a, Complex b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

inline bool is_near_integer(Complex z, double tol = 1e-12) {
    return std::abs(z.imag()) <= tol &&
           std::abs(z.real() - std::round(z.real())) <= tol;
}

}  // namespace pvi

#endif
