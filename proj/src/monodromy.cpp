#include "pvi/monodromy.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace pvi::monodromy {

namespace {

constexpr double kZeroTol = 1e-12;

bool entry_zero(Complex z) { return std::abs(z) <= kZeroTol; }

// Argument in (-pi/2, pi/2]: Re > 0, or Re = 0 with Im >= 0.
bool sign_preferred(Complex z) {
    if (z.real() > kZeroTol) return true;
    if (z.real() < -kZeroTol) return false;
    return z.imag() >= 0.0;
}

std::array<Complex, 3> as_array(const MonodromyTriple& t) { return {t.x0, t.x1, t.xinf}; }

MonodromyTriple from_array(const std::array<Complex, 3>& a) { return {a[0], a[1], a[2]}; }

}  // namespace

double relation_residual(const MonodromyTriple& t, const Mu& mu) {
    Complex s = std::sin(std::numbers::pi * mu.value);
    Complex r = t.x0 * t.x0 + t.x1 * t.x1 + t.xinf * t.xinf -
                t.x0 * t.x1 * t.xinf - 4.0 * s * s;
    return std::abs(r);
}

bool is_admissible(const MonodromyTriple& t) {
    int zeros = 0;
    for (Complex z : as_array(t))
        if (entry_zero(z)) ++zeros;
    if (zeros > 1) return false;
    // Excluded orbit: (2,2,2) and its two-sign changes.
    int twos = 0, minus_twos = 0;
    for (Complex z : as_array(t)) {
        if (near(z, Complex(2.0, 0.0))) ++twos;
        else if (near(z, Complex(-2.0, 0.0))) ++minus_twos;
    }
    if (twos + minus_twos == 3 && (minus_twos % 2 == 0)) return false;
    return true;
}

MonodromyTriple canonicalize(const MonodromyTriple& t) {
    if (!is_admissible(t))
        throw validation_error("canonicalize: inadmissible triple");
    auto e = as_array(t);
    int first = -1, second = -1;
    for (int i = 0; i < 3; ++i) {
        if (entry_zero(e[i])) continue;
        if (first < 0) first = i;
        else if (second < 0) second = i;
    }
    if (first < 0) throw validation_error("canonicalize: zero triple");

    // Flip pairs not containing `first` leave its sign alone; each sign
    // choice of `first` admits exactly two class members.
    auto flip_pair = [](std::array<Complex, 3> a, int i, int j) {
        a[i] = -a[i];
        a[j] = -a[j];
        return a;
    };
    int others[2];
    int n = 0;
    for (int i = 0; i < 3; ++i)
        if (i != first) others[n++] = i;

    std::array<Complex, 3> base = e;
    if (!sign_preferred(e[first]))
        base = flip_pair(e, first, others[0]);  // makes first entry preferred
    std::array<Complex, 3> alt = flip_pair(base, others[0], others[1]);

    if (second < 0) {
        // Only one nonzero entry: both candidates coincide up to flips of
        // zero entries; normalize -0 to 0.
        for (auto& z : base)
            if (entry_zero(z)) z = 0.0;
        return from_array(base);
    }
    std::array<Complex, 3> pick = sign_preferred(base[second]) ? base : alt;
    for (auto& z : pick)
        if (entry_zero(z)) z = 0.0;
    return from_array(pick);
}

bool equivalent(const MonodromyTriple& s, const MonodromyTriple& t, double tol) {
    auto a = as_array(s), b = as_array(t);
    const int flips[4][3] = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
    for (auto& f : flips) {
        double err = 0.0;
        for (int i = 0; i < 3; ++i)
            err = std::max(err, std::abs(static_cast<double>(f[i]) * a[i] - b[i]));
        if (err <= tol) return true;
    }
    return false;
}

MonodromyTriple braid_beta1(const MonodromyTriple& t) {
    return {-t.x0, t.xinf - t.x0 * t.x1, t.x1};
}

MonodromyTriple braid_beta2(const MonodromyTriple& t) {
    return {t.xinf, -t.x1, t.x0 - t.x1 * t.xinf};
}

MonodromyTriple braid_beta1_sq(const MonodromyTriple& t) {
    return {t.x0, t.x1 + t.x0 * t.xinf - t.x1 * t.x0 * t.x0, t.xinf - t.x0 * t.x1};
}

MonodromyTriple braid_beta2_sq(const MonodromyTriple& t) {
    return {t.x0 - t.x1 * t.xinf, t.x1, t.xinf + t.x0 * t.x1 - t.xinf * t.x1 * t.x1};
}

MonodromyTriple braid_beta1_sq_inv(const MonodromyTriple& t) {
    // beta1^2 fixes x0 and acts linearly on (x1, xinf):
    //   x1' = (1 - x0^2) x1 + x0 xinf,  xinf' = -x0 x1 + xinf.
    Complex x0 = t.x0;
    Complex a = 1.0 - x0 * x0, b = x0, c = -x0, d = 1.0;
    Complex det = a * d - b * c;  // = 1 - x0^2 + x0^2 = 1
    Complex x1 = (d * t.x1 - b * t.xinf) / det;
    Complex xi = (-c * t.x1 + a * t.xinf) / det;
    return {x0, x1, xi};
}

MonodromyTriple braid_beta2_sq_inv(const MonodromyTriple& t) {
    // beta2^2 fixes x1 and acts linearly on (x0, xinf):
    //   x0' = x0 - x1 xinf,  xinf' = x1 x0 + (1 - x1^2) xinf.
    Complex x1 = t.x1;
    Complex a = 1.0, b = -x1, c = x1, d = 1.0 - x1 * x1;
    Complex det = a * d - b * c;  // = 1
    Complex x0 = (d * t.x0 - b * t.xinf) / det;
    Complex xi = (-c * t.x0 + a * t.xinf) / det;
    return {x0, x1, xi};
}

MonodromyMatrixSet matrix_realization(const MonodromyTriple& t) {
    auto e = as_array(t);
    if (entry_zero(e[0]) && entry_zero(e[1]) && entry_zero(e[2]))
        throw validation_error("matrix_realization: all entries zero");

    // Cyclically shift the anchor until the leading entry is nonzero; the
    // matrix roles shift back correspondingly, preserving all pair traces.
    int shift = 0;
    std::array<Complex, 3> a = e;
    while (entry_zero(a[0])) {
        a = {a[1], a[2], a[0]};
        ++shift;
    }

    Mat2 p = {1.0, -a[0], 0.0, 1.0};
    Mat2 q = {1.0, 0.0, a[0], 1.0};
    Mat2 r = {1.0 + a[1] * a[2] / a[0], -a[1] * a[1] / a[0],
              a[2] * a[2] / a[0], 1.0 - a[1] * a[2] / a[0]};

    // With anchor entries (a0, a1, a2) = shifted (x0, x1, xinf), the trace
    // pattern is tr(PQ) = 2 - a0^2, tr(QR) = 2 - a1^2, tr(PR) = 2 - a2^2.
    // Shift the matrix roles back so the pattern reads in original labels.
    std::array<Mat2, 3> ms = {p, q, r};
    std::array<Mat2, 3> rolled{};
    for (int i = 0; i < 3; ++i) rolled[(i + shift) % 3] = ms[i];

    MonodromyMatrixSet out;
    out.m0 = rolled[0];
    out.mx = rolled[1];
    out.m1 = rolled[2];
    out.minf = (out.m1 * out.mx * out.m0).inverse();
    return out;
}

MonodromyTriple trace_check(const MonodromyMatrixSet& ms) {
    Complex t0 = (ms.m0 * ms.mx).trace();
    Complex t1 = (ms.mx * ms.m1).trace();
    Complex ti = (ms.m0 * ms.m1).trace();
    MonodromyTriple t{std::sqrt(2.0 - t0), std::sqrt(2.0 - t1), std::sqrt(2.0 - ti)};
    // Principal roots fix each sign independently, which may land in the
    // wrong two-sign class. The product x0 x1 xinf is determined by
    // tr(M0 Mx M1) = 2 - x0^2 - x1^2 - xinf^2 - x0 x1 xinf; one flip of the
    // first nonzero entry moves between the classes.
    Complex prod_want = 2.0 - (2.0 - t0) - (2.0 - t1) - (2.0 - ti) -
                        (ms.m0 * ms.mx * ms.m1).trace();
    Complex prod_got = t.x0 * t.x1 * t.xinf;
    if (std::abs(prod_got) > 1e-10 &&
        std::abs(prod_got - prod_want) > std::abs(prod_got + prod_want)) {
        if (std::abs(t.x0) > 1e-12) t.x0 = -t.x0;
        else if (std::abs(t.x1) > 1e-12) t.x1 = -t.x1;
        else t.xinf = -t.xinf;
    }
    // Degenerate matrix sets (commuting or identity monodromy) produce
    // inadmissible triples such as (0,0,0); report them as-is.
    if (!is_admissible(t)) return t;
    return canonicalize(t);
}

}  // namespace pvi::monodromy
