#include "pvi/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace pvi::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// Lanczos coefficients, g = 607/128, n = 15 (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool at_gamma_pole(Complex z) {
    return z.real() <= 0.5 && is_near_integer(z, 1e-13);
}

Complex gamma_positive_half(Complex z) {
    // Valid for Re z >= 0.5.
    Complex zm1 = z - 1.0;
    Complex acc = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k)
        acc += kLanczos[k] / (zm1 + static_cast<double>(k));
    Complex t = zm1 + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::exp((zm1 + 0.5) * std::log(t) - t) * acc;
}

// Even Bernoulli numbers B_2, B_4, ..., B_14 for the digamma tail.
constexpr std::array<double, 7> kBernoulli2n = {
    1.0 / 6.0,   -1.0 / 30.0,    1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,
};

}  // namespace

Complex gamma(Complex z) {
    if (at_gamma_pole(z))
        throw validation_error("gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // Reflection Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return kPi / (std::sin(kPi * z) * gamma_positive_half(1.0 - z));
    }
    return gamma_positive_half(z);
}

Complex digamma(Complex z) {
    if (at_gamma_pole(z))
        throw validation_error("digamma: pole at nonpositive integer");
    Complex acc = 0.0;
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        acc -= kPi / std::tan(kPi * z);
        z = 1.0 - z;
    }
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    Complex inv = 1.0 / z;
    Complex inv2 = inv * inv;
    Complex tail = std::log(z) - 0.5 * inv;
    Complex p = inv2;
    for (std::size_t n = 0; n < kBernoulli2n.size(); ++n) {
        tail -= kBernoulli2n[n] / (2.0 * (n + 1.0)) * p;
        p *= inv2;
    }
    return acc + tail;
}

namespace {

void require_series_radius(Complex x) {
    if (std::abs(x) > 0.6)
        throw validation_error("hypergeometric series: |x| > 0.6 outside series region");
}

}  // namespace

Complex hyp_F(Complex x) {
    require_series_radius(x);
    Complex sum = 1.0, term = 1.0;
    for (int n = 1; n < 400; ++n) {
        double r = (n - 0.5) / n;
        term *= (r * r) * x;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
    }
    throw numerical_error("hyp_F: series did not converge");
}

Complex hyp_F1(Complex x) {
    require_series_radius(x);
    // c_n = [(1/2)_n / n!]^2, d_n = 2[psi(n+1/2) - psi(n+1)] tracked by
    // recurrence from psi(1/2) = -gamma - 2 ln 2, psi(1) = -gamma.
    double cn = 1.0;
    double psi_half = -2.0 * kLn2;  // psi(n+1/2) - psi(n+1) + running corrections
    Complex sum = 2.0 * psi_half;
    Complex xpow = 1.0;
    for (int n = 1; n < 400; ++n) {
        double r = (n - 0.5) / n;
        cn *= r * r;
        psi_half += 1.0 / (n - 0.5) - 1.0 / n;
        xpow *= x;
        Complex term = cn * 2.0 * psi_half * xpow;
        sum += term;
        if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1.0)) return sum;
    }
    throw numerical_error("hyp_F1: series did not converge");
}

Complex log16_correction(Complex x) {
    return hyp_F1(x) / hyp_F(x) + 4.0 * kLn2;
}

HalfPeriods half_periods(const CoveringPoint& x) {
    if (x.modulus >= 0.6)
        throw validation_error("half_periods: |x| >= 0.6 outside series region");
    Complex xc = x.to_complex();
    Complex F = hyp_F(xc);
    Complex F1 = hyp_F1(xc);
    HalfPeriods hp;
    hp.omega1 = 0.5 * kPi * F;
    hp.omega2 = Complex(0.0, -0.5) * (F * x.log() + F1);
    hp.tau = hp.omega2 / hp.omega1;
    return hp;
}

namespace {

struct WpSetup {
    Complex q2;      // e^{2 pi i tau}
    Complex s;       // e^{2 pi i u/(4 w1)}
    Complex alpha;   // q^2 s
    Complex beta;    // q^2 / s
    double q2abs;
    double growth;   // max(|q^2|, |alpha|, |beta|)
};

WpSetup wp_setup(Complex u, const HalfPeriods& hp) {
    double im_tau = hp.tau.imag();
    if (!(im_tau > 0.0))
        throw validation_error("wp: Im tau <= 0");
    Complex zeta = u / (4.0 * hp.omega1);
    if (!(std::abs(zeta.imag()) < im_tau))
        throw validation_error("wp: |Im(u/(4 omega1))| >= Im tau");
    WpSetup w;
    const Complex twoPiI(0.0, 2.0 * kPi);
    w.q2 = std::exp(twoPiI * hp.tau);
    w.s = std::exp(twoPiI * zeta);
    w.alpha = w.q2 * w.s;
    w.beta = w.q2 / w.s;
    w.q2abs = std::abs(w.q2);
    w.growth = std::max({w.q2abs, std::abs(w.alpha), std::abs(w.beta)});
    return w;
}

}  // namespace

Complex wp(Complex u, const HalfPeriods& hp) {
    WpSetup w = wp_setup(u, hp);
    if (std::abs(w.s - 1.0) < 1e-13)
        throw numerical_error("wp: u at a lattice point (pole of pe)");

    Complex w1sq = hp.omega1 * hp.omega1;
    // 1/sin^2(pi u/(4 w1)) = -4 s/(s-1)^2 with s = e^{2 pi i u/(4 w1)}.
    Complex trig = -4.0 * w.s / ((w.s - 1.0) * (w.s - 1.0));

    Complex sum = 0.0;
    Complex qn = 1.0, an = 1.0, bn = 1.0;
    bool converged = false;
    for (int n = 1; n <= 500; ++n) {
        qn *= w.q2;
        an *= w.alpha;
        bn *= w.beta;
        Complex term = static_cast<double>(n) * (qn - 0.5 * an - 0.5 * bn) / (1.0 - qn);
        sum += term;
        double bound = n * std::pow(w.growth, n) / (1.0 - std::pow(w.q2abs, n));
        if (bound < 1e-15 * (std::abs(sum) + 1.0)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw numerical_error("wp: series needs more than 500 terms");

    return -kPi * kPi / (12.0 * w1sq) + 2.0 * kPi * kPi / w1sq * sum +
           kPi * kPi / (4.0 * w1sq) * trig;
}

Complex wp_du(Complex u, const HalfPeriods& hp) {
    WpSetup w = wp_setup(u, hp);
    if (std::abs(w.s - 1.0) < 1e-13)
        throw numerical_error("wp_du: u at a lattice point (pole of pe)");

    // cos(t)/sin^3(t) = -4i s(s+1)/(s-1)^3 with s = e^{2it}, t = pi u/(4 w1).
    Complex sm1 = w.s - 1.0;
    Complex trig = Complex(0.0, -4.0) * w.s * (w.s + 1.0) / (sm1 * sm1 * sm1);

    Complex sum = 0.0;
    Complex qn = 1.0, an = 1.0, bn = 1.0;
    bool converged = false;
    for (int n = 1; n <= 500; ++n) {
        qn *= w.q2;
        an *= w.alpha;
        bn *= w.beta;
        Complex term = static_cast<double>(n) * n * (an - bn) / (1.0 - qn);
        sum += term;
        double bound = static_cast<double>(n) * n * std::pow(w.growth, n) /
                       (1.0 - std::pow(w.q2abs, n));
        if (bound < 1e-15 * (std::abs(sum) + 1.0)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw numerical_error("wp_du: series needs more than 500 terms");

    Complex pw1 = kPi / hp.omega1;
    Complex p2w1 = kPi / (2.0 * hp.omega1);
    return (pw1 * pw1 * pw1) * sum / Complex(0.0, 2.0) -
           (p2w1 * p2w1 * p2w1) * trig;
}

}  // namespace pvi::special
