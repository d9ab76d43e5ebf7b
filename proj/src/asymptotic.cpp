#include "pvi/asymptotic.hpp"

#include <cmath>

namespace pvi::asymptotic {

namespace {

// |x^sigma| in log form: Re sigma ln|x| - Im sigma arg x.
double log_abs_pow(const CoveringPoint& x, Complex sigma) {
    return sigma.real() * std::log(x.modulus) - sigma.imag() * x.argument;
}

CoveringPoint transform_for_point(const CoveringPoint& x, CriticalPoint p) {
    switch (p) {
        case CriticalPoint::zero: return x;
        case CriticalPoint::one: return map_to_one(x);
        case CriticalPoint::infinity: return map_to_infinity(x);
    }
    throw validation_error("unknown critical point");
}

}  // namespace

bool domain_contains(const CoveringPoint& x, const DomainSpecD& d) {
    if (d.point == CriticalPoint::infinity) {
        if (!(x.modulus > d.epsilon)) return false;  // epsilon acts as M
        if (std::abs(d.sigma.imag()) < 1e-14) return true;
        CoveringPoint t = map_to_infinity(x);
        double lhs = log_abs_pow(t, d.sigma);
        return -d.theta1 * d.sigma.imag() + d.sigma_tilde * std::log(t.modulus) <= lhs &&
               lhs <= -d.theta2 * d.sigma.imag();
    }
    CoveringPoint t = transform_for_point(x, d.point);
    if (!(t.modulus < d.epsilon)) return false;
    if (std::abs(d.sigma.imag()) < 1e-14) return true;  // real sigma: |x| < eps only
    double lhs = log_abs_pow(t, d.sigma);
    double lower = -d.theta1 * d.sigma.imag() + d.sigma_tilde * std::log(t.modulus);
    double upper = -d.theta2 * d.sigma.imag();
    return lower <= lhs && lhs <= upper;
}

bool strip_contains(const CoveringPoint& x, const StripB& b) {
    if (!(x.modulus < 1.0)) return false;
    double L = std::log(x.modulus);
    double lhs = b.sigma.imag() * x.argument;
    return b.sigma.real() * L + b.theta2 * b.sigma.imag() <= lhs &&
           lhs < (b.sigma.real() - 1.0) * L + b.log_c;
}

SpiralPath make_spiral(const CoveringPoint& start, double Sigma, Complex sigma,
                       int count, double modulus_floor_ratio) {
    if (Sigma < 0.0) throw validation_error("make_spiral: Sigma < 0");
    if (count < 2) throw validation_error("make_spiral: need at least 2 samples");
    SpiralPath p;
    p.start = start;
    p.Sigma = Sigma;
    p.sigma = sigma;
    double l0 = std::log(start.modulus);
    double lf = l0 + std::log(modulus_floor_ratio);
    double slope = 0.0;
    if (std::abs(sigma.imag()) >= 1e-14)
        slope = (sigma.real() - Sigma) / sigma.imag();
    p.samples.reserve(count);
    for (int i = 0; i < count; ++i) {
        double l = l0 + (lf - l0) * i / (count - 1.0);
        double arg = start.argument + slope * (l - l0);
        p.samples.emplace_back(std::exp(l), arg);
    }
    return p;
}

LeadingValue eval_leading(const CoveringPoint& x, const CriticalData& cd) {
    if (std::abs(cd.a) < 1e-300) throw validation_error("eval_leading: a = 0");
    CoveringPoint t = transform_for_point(x, cd.point);
    Complex s = cd.sigma, a = cd.a;
    Complex t_lo = cpow(t, 1.0 - s);
    Complex t_hi = cpow(t, 1.0 + s);
    Complex tc = t.to_complex();
    Complex yh = a * t_lo + 0.5 * tc + t_hi / (16.0 * a);
    Complex dyh = a * (1.0 - s) * t_lo / tc + 0.5 + (1.0 + s) * t_hi / (16.0 * a * tc);

    switch (cd.point) {
        case CriticalPoint::zero:
            return {yh, dyh};
        case CriticalPoint::one:
            // y(x) = 1 - yhat(t), t = 1 - x: dy/dx = dyhat/dt.
            return {1.0 - yh, dyh};
        case CriticalPoint::infinity: {
            // y(x) = yhat(t)/t, t = 1/x: dy/dx = yhat - t yhat'.
            return {yh / tc, yh - tc * dyh};
        }
    }
    throw validation_error("eval_leading: unknown point");
}

Complex oscillatory_amplitude(const CoveringPoint& x, const CriticalData& cd,
                              const SpiralPath& path) {
    if (path.Sigma != 0.0)
        throw validation_error("oscillatory amplitude requires a Sigma = 0 path");
    if (std::abs(cd.sigma.imag()) < 1e-14)
        throw validation_error("oscillatory amplitude requires Im sigma != 0");
    Complex s = cd.sigma, a0 = cd.a;
    double mod_x0s = abs_cpow(path.start, s);
    double alpha = s.real() * x.argument + s.imag() * std::log(x.modulus);
    Complex ph = std::polar(1.0, alpha);
    return a0 * (1.0 + mod_x0s / (2.0 * a0) * ph +
                 mod_x0s * mod_x0s / (16.0 * a0 * a0) * ph * ph);
}

Complex eval_oscillatory(const CoveringPoint& x, const CriticalData& cd,
                         const SpiralPath& path) {
    return oscillatory_amplitude(x, cd, path) * cpow(x, 1.0 - cd.sigma);
}

CoveringPoint map_to_one(const CoveringPoint& x) {
    return covering_from(1.0 - x.to_complex());
}

CoveringPoint map_to_infinity(const CoveringPoint& x) {
    return CoveringPoint(1.0 / x.modulus, -x.argument);
}

Complex y_from_one(Complex y_hat) { return 1.0 - y_hat; }

Complex y_from_infinity(Complex y_hat, Complex t) { return y_hat / t; }

}  // namespace pvi::asymptotic
