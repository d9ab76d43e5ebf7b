#include "pvi/connection.hpp"

#include <cmath>
#include <numbers>

#include "pvi/special.hpp"

namespace pvi::connection {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCaseTol = 1e-8;
constexpr double kIllTol = 1e-5;
const Complex kI(0.0, 1.0);

bool sigma_on_forbidden_ray(Complex sigma) {
    return std::abs(sigma.imag()) < 1e-12 &&
           (sigma.real() < -1e-12 || sigma.real() >= 1.0 - 1e-12);
}

Complex gamma_c(Complex z) { return special::gamma(z); }

}  // namespace

Complex sigma_from_x0(Complex x0) {
    if (near(x0, Complex(2.0, 0.0), kCaseTol) || near(x0, Complex(-2.0, 0.0), kCaseTol))
        throw validation_error("sigma_from_x0: x0 = +-2 (sigma = 1) excluded");
    Complex w = 1.0 - 0.5 * x0 * x0;
    Complex sigma = std::acos(w) / kPi;  // principal: Re in [0, 1]
    if (std::abs(sigma.imag()) < 1e-14) sigma = Complex(sigma.real(), 0.0);
    if (std::abs(sigma.real()) < 1e-14) {
        sigma = Complex(0.0, sigma.imag());
        if (sigma.imag() < 0.0) sigma = -sigma;
    } else if (std::abs(sigma.real() - 1.0) < 1e-14) {
        if (sigma.imag() < 0.0) sigma = 2.0 - sigma;
        sigma = Complex(1.0, sigma.imag());
    }
    return sigma;
}

CaseTag classify_sigma(Complex sigma, const Mu& mu, bool* ill_conditioned) {
    if (ill_conditioned) *ill_conditioned = false;
    double d0 = std::abs(sigma);
    if (d0 < kCaseTol) return {CaseKind::ZeroII, 0};
    if (d0 < kIllTol && ill_conditioned) *ill_conditioned = true;

    // Resonant 2mu in Z\{0}: cases ii/iii cannot occur inside the band; the
    // generic formulas hold verbatim with the integer substituted.
    if (!mu.resonant) {
        for (int sign : {+1, -1}) {
            Complex d = sigma - static_cast<double>(sign) * 2.0 * mu.value;
            int m = static_cast<int>(std::lround(0.5 * d.real()));
            double delta = std::abs(d - 2.0 * static_cast<double>(m));
            if (delta < kCaseTol) {
                if (sign > 0) return {m >= 0 ? CaseKind::III1 : CaseKind::III2, m};
                return {m >= 1 ? CaseKind::III3 : CaseKind::III4, m};
            }
            if (delta < kIllTol && ill_conditioned) *ill_conditioned = true;
        }
    }
    return {CaseKind::GenericI, 0};
}

Complex f_factor(Complex sigma, const Mu& mu) {
    CaseTag tag = classify_sigma(sigma, mu);
    if (tag.kind != CaseKind::GenericI && tag.kind != CaseKind::ZeroII)
        throw validation_error("f_factor: sigma = +-2mu + 2m hits a pole; use case III");
    Complex ch = std::cos(0.5 * kPi * sigma);
    return 2.0 * ch * ch / (std::cos(kPi * sigma) - std::cos(2.0 * kPi * mu.value));
}

Complex G_factor(Complex sigma, const Mu& mu) {
    CaseTag tag = classify_sigma(sigma, mu);
    if (tag.kind != CaseKind::GenericI && tag.kind != CaseKind::ZeroII)
        throw validation_error("G_factor: sigma = +-2mu + 2m hits the case split; use case III");
    return 0.5 * std::exp(sigma * std::log(4.0)) *
           gamma_c(0.5 * (sigma + 1.0)) * gamma_c(0.5 * (sigma + 1.0)) /
           (gamma_c(1.0 - mu.value + 0.5 * sigma) * gamma_c(mu.value + 0.5 * sigma));
}

Complex F_factor(Complex sigma, const Mu& mu) {
    Complex G = G_factor(sigma, mu);
    return f_factor(sigma, mu) * 4.0 * G * G;
}

namespace {

Complex pow16c(Complex e) { return std::exp(e * std::log(16.0)); }

MonodromyTriple forward_case_iii(const CaseTag& tag, Complex a, const Mu& mu) {
    Complex m = static_cast<double>(tag.m);
    Complex muv = mu.value;
    Complex sa = std::sqrt(a);
    Complex x0, x1, xinf;
    switch (tag.kind) {
        case CaseKind::III1: {
            x0 = 2.0 * std::sin(kPi * muv);
            Complex g = gamma_c(muv + m + 0.5);
            x1 = -0.5 * kI * pow16c(muv + m) * g * g /
                 (gamma_c(m + 1.0) * gamma_c(2.0 * muv + m)) / sa;
            xinf = kI * x1 * std::exp(-kI * kPi * muv);
            break;
        }
        case CaseKind::III2: {
            x0 = 2.0 * std::sin(kPi * muv);
            Complex g = gamma_c(muv + m + 0.5);
            Complex cmu = std::cos(kPi * muv);
            x1 = 2.0 * kI * kPi * kPi / (cmu * cmu) * sa /
                 (pow16c(muv + m) * g * g * gamma_c(-2.0 * muv - m + 1.0) * gamma_c(-m));
            xinf = -kI * x1 * std::exp(kI * kPi * muv);
            break;
        }
        case CaseKind::III3: {
            x0 = -2.0 * std::sin(kPi * muv);
            Complex g = gamma_c(-muv + m + 0.5);
            x1 = -0.5 * kI * pow16c(-muv + m) * g * g /
                 (gamma_c(m - 2.0 * muv + 1.0) * gamma_c(m)) / sa;
            xinf = kI * x1 * std::exp(kI * kPi * muv);
            break;
        }
        case CaseKind::III4: {
            x0 = -2.0 * std::sin(kPi * muv);
            Complex g = gamma_c(-muv + m + 0.5);
            Complex cmu = std::cos(kPi * muv);
            x1 = 2.0 * kI * kPi * kPi / (cmu * cmu) * sa /
                 (pow16c(-muv + m) * g * g * gamma_c(2.0 * muv - m) * gamma_c(1.0 - m));
            xinf = -kI * x1 * std::exp(-kI * kPi * muv);
            break;
        }
        default:
            throw validation_error("forward_case_iii: not a case-III tag");
    }
    return {x0, x1, xinf};
}

Complex inverse_case_iii(const CaseTag& tag, const MonodromyTriple& t, const Mu& mu) {
    Complex m = static_cast<double>(tag.m);
    Complex muv = mu.value;
    Complex x1sq = t.x1 * t.x1;
    switch (tag.kind) {
        case CaseKind::III1: {
            Complex g = gamma_c(muv + m + 0.5);
            Complex num = pow16c(2.0 * muv + 2.0 * m) * g * g * g * g;
            Complex den = gamma_c(m + 1.0) * gamma_c(2.0 * muv + m);
            return -0.25 / x1sq * num / (den * den);
        }
        case CaseKind::III2: {
            Complex g = gamma_c(muv + m + 0.5);
            Complex cmu = std::cos(kPi * muv);
            Complex gg = gamma_c(-2.0 * muv - m + 1.0) * gamma_c(-m);
            return -(cmu * cmu * cmu * cmu) / (4.0 * kPi * kPi * kPi * kPi) *
                   pow16c(2.0 * muv + 2.0 * m) * g * g * g * g * gg * gg * x1sq;
        }
        case CaseKind::III3: {
            Complex g = gamma_c(-muv + m + 0.5);
            Complex num = pow16c(-2.0 * muv + 2.0 * m) * g * g * g * g;
            Complex den = gamma_c(m - 2.0 * muv + 1.0) * gamma_c(m);
            return -0.25 / x1sq * num / (den * den);
        }
        case CaseKind::III4: {
            Complex g = gamma_c(-muv + m + 0.5);
            Complex cmu = std::cos(kPi * muv);
            Complex gg = gamma_c(2.0 * muv - m) * gamma_c(1.0 - m);
            return -(cmu * cmu * cmu * cmu) / (4.0 * kPi * kPi * kPi * kPi) *
                   pow16c(-2.0 * muv + 2.0 * m) * g * g * g * g * gg * gg * x1sq;
        }
        default:
            throw validation_error("inverse_case_iii: not a case-III tag");
    }
}

// Amplitude of the generic case for a given sigma solving
// cos(pi sigma) = 1 - x0^2/2 (also used for sigma aliases):
//   a = i G^2/(2 sin(pi sigma)) [2(1+e^{-i pi s}) - f (xinf^2 + e^{-i pi s} x1^2)] f
// with the triple form f = (4 - x0^2)/(x1^2 + xinf^2 - x0 x1 xinf).
Complex amplitude_generic(Complex sigma, const MonodromyTriple& t, const Mu& mu) {
    Complex f = (4.0 - t.x0 * t.x0) /
                (t.x1 * t.x1 + t.xinf * t.xinf - t.x0 * t.x1 * t.xinf);
    Complex G = G_factor(sigma, mu);
    Complex ph = std::exp(-kI * kPi * sigma);
    return kI * G * G / (2.0 * std::sin(kPi * sigma)) *
           (2.0 * (1.0 + ph) - f * (t.xinf * t.xinf + ph * t.x1 * t.x1)) * f;
}

}  // namespace

ForwardResult forward(Complex sigma, Complex a, const Mu& mu) {
    if (std::abs(a) < 1e-300) throw validation_error("forward: a = 0");
    if (sigma_on_forbidden_ray(sigma))
        throw validation_error("forward: sigma on the real forbidden rays");

    ForwardResult out;
    out.tag = classify_sigma(sigma, mu, &out.ill_conditioned);

    switch (out.tag.kind) {
        case CaseKind::ZeroII: {
            if (is_near_integer(mu.value))
                throw validation_error(
                    "forward: sigma = 0 with integer mu is the degenerate (0,0,0) family");
            Complex s = std::sin(kPi * mu.value);
            Complex x1 = std::sqrt(4.0 * s * s * (1.0 - a));
            Complex xinf = std::sqrt(4.0 * s * s * a);
            out.triple = monodromy::canonicalize({0.0, x1, xinf});
            return out;
        }
        case CaseKind::GenericI: {
            Complex f = f_factor(sigma, mu);
            Complex G = G_factor(sigma, mu);
            Complex sa = std::sqrt(a);
            Complex x0 = 2.0 * std::sin(0.5 * kPi * sigma);
            Complex x1 = kI * (sa / (f * G) - G / sa);
            Complex xinf = sa * std::exp(0.5 * kI * kPi * sigma) / (f * G) +
                           G * std::exp(-0.5 * kI * kPi * sigma) / sa;
            out.triple = monodromy::canonicalize({x0, x1, xinf});
            return out;
        }
        default: {
            out.triple = monodromy::canonicalize(forward_case_iii(out.tag, a, mu));
            return out;
        }
    }
}

InverseResult inverse(const MonodromyTriple& t, const Mu& mu) {
    if (!monodromy::is_admissible(t))
        throw validation_error("inverse: inadmissible triple");
    if (relation_residual(t, mu) > 1e-8)
        throw validation_error("inverse: triple does not satisfy the trace relation");

    InverseResult out;
    Complex sigma = sigma_from_x0(t.x0);
    out.tag = classify_sigma(sigma, mu, &out.ill_conditioned);
    out.cd.point = CriticalPoint::zero;
    out.cd.sigma = sigma;

    switch (out.tag.kind) {
        case CaseKind::ZeroII: {
            if (is_near_integer(mu.value))
                throw validation_error("inverse: x0 = 0 with integer mu is degenerate");
            Complex x1sq = t.x1 * t.x1, xisq = t.xinf * t.xinf;
            if (std::abs(x1sq) < 1e-14 || std::abs(xisq) < 1e-14)
                throw validation_error("inverse: case II requires x1, xinf nonzero");
            out.cd.a = xisq / (x1sq + xisq);
            break;
        }
        case CaseKind::GenericI: {
            out.cd.a = amplitude_generic(sigma, t, mu);
            break;
        }
        default: {
            // Confirm the sub-case phase relation xinf^2 = -x1^2 e^{-+2 pi i mu}.
            Complex ratio = -t.xinf * t.xinf / (t.x1 * t.x1);
            Complex expect =
                (out.tag.kind == CaseKind::III1 || out.tag.kind == CaseKind::III4)
                    ? std::exp(-2.0 * kI * kPi * mu.value)
                    : std::exp(2.0 * kI * kPi * mu.value);
            if (std::abs(ratio - expect) > 1e-6)
                throw validation_error("inverse: case III phase relation violated");
            out.cd.a = inverse_case_iii(out.tag, t, mu);
            break;
        }
    }
    if (std::abs(out.cd.a) < 1e-300)
        throw numerical_error("inverse: amplitude degenerated to 0");
    return out;
}

InverseResult connect_at_one(const MonodromyTriple& t, const Mu& mu) {
    MonodromyTriple sub{t.x1, t.x0, t.x0 * t.x1 - t.xinf};
    InverseResult r = inverse(sub, mu);
    r.cd.point = CriticalPoint::one;
    return r;
}

InverseResult connect_at_infinity(const MonodromyTriple& t, const Mu& mu) {
    MonodromyTriple sub{t.xinf, -t.x1, t.x0 - t.x1 * t.xinf};
    InverseResult r = inverse(sub, mu);
    r.cd.point = CriticalPoint::infinity;
    return r;
}

CriticalData braid_on_sigma_a(const CriticalData& cd) {
    if (cd.point != CriticalPoint::zero)
        throw validation_error(
            "braid_on_sigma_a: only the x=0 braid beta1^2 acts diagonally; "
            "route other braids through triple space");
    return {cd.sigma, cd.a * std::exp(-2.0 * kI * kPi * cd.sigma), cd.point};
}

CriticalData alias(const CriticalData& cd, int n, int sign,
                   const MonodromyTriple& t, const Mu& mu) {
    if (sign != 1 && sign != -1) throw validation_error("alias: sign must be +-1");
    Complex sig = static_cast<double>(sign) * cd.sigma + 2.0 * n;
    if (n == 0 && sign == 1) return cd;
    if (sigma_on_forbidden_ray(sig) || (std::abs(sig.imag()) < 1e-12 && sig.real() < 0.0))
        throw validation_error("alias: aliased exponent lies on a real forbidden ray");
    CaseTag tag = classify_sigma(sig, mu);
    if (tag.kind != CaseKind::GenericI)
        throw validation_error("alias: aliased exponent hits the case split");
    CriticalData out;
    out.sigma = sig;
    out.a = amplitude_generic(sig, t, mu);
    out.point = cd.point;
    return out;
}

}  // namespace pvi::connection
