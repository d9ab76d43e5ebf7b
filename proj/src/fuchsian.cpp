#include "pvi/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pvi/quadrature.hpp"

namespace pvi::fuchsian {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Gauge integral int (y(z)-z)/(z(z-1)) dz along the log-straight leg from
// base to x on the covering.
Complex gauge_integral(const CoveringPoint& base, const CoveringPoint& x,
                       const std::function<Complex(const CoveringPoint&)>& y_eval) {
    Complex L0 = base.log(), L1 = x.log();
    if (std::abs(L1 - L0) < 1e-15) return 0.0;
    auto integrand = [&](double t) -> Complex {
        Complex L = (1.0 - t) * L0 + t * L1;
        CoveringPoint zp(std::exp(L.real()), L.imag());
        Complex z = zp.to_complex();
        Complex dz = z * (L1 - L0);
        return (y_eval(zp) - z) / (z * (z - 1.0)) * dz;
    };
    const quad::GaussRule& rule = quad::gauss_legendre(12);
    const int panels = 24;
    Complex acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = static_cast<double>(p) / panels;
        double b = static_cast<double>(p + 1) / panels;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int k = 0; k < 12; ++k)
            acc += half * rule.weights[k] * integrand(mid + half * rule.nodes[k]);
    }
    return acc;
}

Mat2 residue_matrix(Complex mu, Complex phi1, Complex phi3) {
    return Mat2{phi1 * phi3, -phi3 * phi3, phi1 * phi1, -phi1 * phi3} * (-mu);
}

}  // namespace

FuchsianSystem build_system(
    const CoveringPoint& x, Complex y, Complex dy, const Mu& mu, Complex k0,
    const CoveringPoint& quadrature_base,
    const std::function<Complex(const CoveringPoint&)>& y_eval) {
    Complex xc = x.to_complex();
    if (std::abs(y) < 1e-12 || std::abs(y - 1.0) < 1e-12 || std::abs(y - xc) < 1e-12)
        throw validation_error("build_system: y at a singular configuration {0,1,x}");

    Complex muv = mu.value;
    Complex k = k0 * std::exp((2.0 * muv - 1.0) * gauge_integral(quadrature_base, x, y_eval));

    Complex sk = std::sqrt(k);
    Complex sx = std::sqrt(xc);
    Complex s1x = std::sqrt(1.0 - xc);
    Complex sy = std::sqrt(y);
    Complex syx = std::sqrt(y - xc);
    Complex sy1 = std::sqrt(y - 1.0);

    Complex A = 0.5 * (dy * xc * (xc - 1.0) - y * (y - 1.0));
    Complex B = A / (y * (y - 1.0) * (y - xc));

    Complex phi13 = kI * sk * sy / sx;
    Complex phi23 = -sk * syx / (sx * s1x);
    Complex phi33 = kI * sk * sy1 / s1x;

    Complex mu2 = muv * muv;
    Complex phi11 = kI / (2.0 * mu2) * sy / (sk * sx) *
                    (A * (B + 2.0 * muv / y) + mu2 * (y - 1.0 - xc));
    Complex phi21 = -1.0 / (2.0 * mu2) * syx / (sk * sx * s1x) *
                    (A * (B + 2.0 * muv / (y - xc)) + mu2 * (y - 1.0 + xc));
    Complex phi31 = kI / (2.0 * mu2) * sy1 / (sk * s1x) *
                    (A * (B + 2.0 * muv / (y - 1.0)) + mu2 * (y + 1.0 - xc));

    FuchsianSystem fs;
    fs.x = x;
    fs.mu = muv;
    fs.k = k;
    fs.A0 = residue_matrix(muv, phi11, phi13);
    fs.Ax = residue_matrix(muv, phi21, phi23);
    fs.A1 = residue_matrix(muv, phi31, phi33);
    return fs;
}

std::vector<LoopSpec> default_loops(const CoveringPoint& x, Complex basepoint) {
    Complex xc = x.to_complex();
    double r = std::min({std::abs(xc), std::abs(1.0 - xc), 1.0}) / 3.0;
    std::vector<LoopSpec> loops(3);
    loops[0] = {basepoint, LoopCenter::zero, r, +1};
    loops[1] = {basepoint, LoopCenter::x, r, +1};
    loops[2] = {basepoint, LoopCenter::one, r, +1};
    return loops;
}

namespace {

// Dormand-Prince 5(4) for the 2x2 linear system along a parametric curve
// z(t), t in [0,1].
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

struct Curve {
    // z(t) and dz/dt for t in [0,1].
    std::function<Complex(double)> z;
    std::function<Complex(double)> dz;
};

Mat2 system_matrix(const FuchsianSystem& fs, Complex z) {
    Complex xc = fs.x.to_complex();
    return fs.A0 * (1.0 / z) + fs.Ax * (1.0 / (z - xc)) + fs.A1 * (1.0 / (z - 1.0));
}

void advance_along(const FuchsianSystem& fs, const Curve& curve, Mat2& Y, double rel_tol) {
    auto deriv = [&](double t, const Mat2& M) -> Mat2 {
        return system_matrix(fs, curve.z(t)) * M * curve.dz(t);
    };
    double t = 0.0, h = 1e-2;
    int rejects = 0;
    while (t < 1.0) {
        h = std::min(h, 1.0 - t);
        Mat2 k1 = deriv(t, Y);
        Mat2 k2 = deriv(t + c2 * h, Y + (k1 * (a21 * h)));
        Mat2 k3 = deriv(t + c3 * h, Y + k1 * (a31 * h) + k2 * (a32 * h));
        Mat2 k4 = deriv(t + c4 * h, Y + k1 * (a41 * h) + k2 * (a42 * h) + k3 * (a43 * h));
        Mat2 k5 = deriv(t + c5 * h, Y + k1 * (a51 * h) + k2 * (a52 * h) + k3 * (a53 * h) +
                                        k4 * (a54 * h));
        Mat2 k6 = deriv(t + h, Y + k1 * (a61 * h) + k2 * (a62 * h) + k3 * (a63 * h) +
                                   k4 * (a64 * h) + k5 * (a65 * h));
        Mat2 Y5 = Y + k1 * (b1 * h) + k3 * (b3 * h) + k4 * (b4 * h) + k5 * (b5 * h) +
                  k6 * (b6 * h);
        Mat2 k7 = deriv(t + h, Y5);
        Mat2 ev = k1 * (e1 * h) + k3 * (e3 * h) + k4 * (e4 * h) + k5 * (e5 * h) +
                  k6 * (e6 * h) + k7 * (e7 * h);
        double err = ev.max_abs();
        double scale = 1e-14 + rel_tol * std::max(Y.max_abs(), Y5.max_abs());
        if (err <= scale) {
            t += h;
            Y = Y5;
            rejects = 0;
        } else if (++rejects > 80) {
            throw numerical_error("fuchsian monodromy: step control failed");
        }
        double fac = 0.9 * std::pow(scale / std::max(err, 1e-300), 0.2);
        h *= std::clamp(fac, 0.2, 5.0);
        if (h < 1e-13) throw numerical_error("fuchsian monodromy: step underflow");
    }
}

Complex center_of(const FuchsianSystem& fs, LoopCenter c) {
    switch (c) {
        case LoopCenter::zero: return 0.0;
        case LoopCenter::x: return fs.x.to_complex();
        case LoopCenter::one: return 1.0;
    }
    throw validation_error("unknown loop center");
}

Mat2 loop_monodromy(const FuchsianSystem& fs, const LoopSpec& loop, double rel_tol) {
    Complex c = center_of(fs, loop.center);
    Complex xc = fs.x.to_complex();
    for (Complex other : {Complex(0.0), xc, Complex(1.0)}) {
        if (std::abs(other - c) < 1e-14) continue;
        if (std::abs(other - c) < 1.5 * loop.radius)
            throw validation_error("loop circle too close to another singularity");
    }
    Complex dir = (loop.basepoint - c) / std::abs(loop.basepoint - c);
    Complex p = c + loop.radius * dir;
    double phase0 = std::arg(dir);

    Mat2 Y = Mat2::identity();
    Curve approach{
        [&](double t) { return loop.basepoint + t * (p - loop.basepoint); },
        [&](double) { return p - loop.basepoint; }};
    advance_along(fs, approach, Y, rel_tol);

    double sweep = 2.0 * kPi * loop.orientation;
    Curve circle{
        [&, phase0](double t) { return c + loop.radius * std::polar(1.0, phase0 + sweep * t); },
        [&, phase0](double t) {
            return loop.radius * std::polar(1.0, phase0 + sweep * t) * Complex(0.0, sweep);
        }};
    advance_along(fs, circle, Y, rel_tol);

    Curve back{
        [&](double t) { return p + t * (loop.basepoint - p); },
        [&](double) { return loop.basepoint - p; }};
    advance_along(fs, back, Y, rel_tol);

    return Y;
}

}  // namespace

MonodromyMatrixSet numeric_monodromy(const FuchsianSystem& fs,
                                     const std::vector<LoopSpec>& loops,
                                     double rel_tol) {
    MonodromyMatrixSet ms;
    bool got0 = false, gotx = false, got1 = false;
    for (const LoopSpec& loop : loops) {
        Mat2 M = loop_monodromy(fs, loop, rel_tol);
        switch (loop.center) {
            case LoopCenter::zero: ms.m0 = M; got0 = true; break;
            case LoopCenter::x: ms.mx = M; gotx = true; break;
            case LoopCenter::one: ms.m1 = M; got1 = true; break;
        }
    }
    if (!(got0 && gotx && got1))
        throw validation_error("numeric_monodromy: need loops around 0, x and 1");
    ms.minf = (ms.m1 * ms.mx * ms.m0).inverse();
    return ms;
}

MonodromyTriple traces_to_triple(const MonodromyMatrixSet& ms) {
    return monodromy::trace_check(ms);
}

}  // namespace pvi::fuchsian
