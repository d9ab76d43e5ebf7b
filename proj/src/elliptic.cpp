#include "pvi/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pvi/quadrature.hpp"

namespace pvi::elliptic {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

bool nu2_excluded(Complex nu2) {
    if (std::abs(nu2.imag()) > 1e-12) return false;
    double r = nu2.real();
    return r <= 1e-12 || r >= 2.0 - 1e-12;
}

Complex pow16c(Complex e) { return std::exp(e * std::log(16.0)); }

// script-F in dressed variables yt = y e^{(2-nu2) g}, zt = z e^{nu2 g}:
//   (1/2i)(pi/w1)^3 sum n^2 yt^n (zt^{2n} - 1)/(1 - qt^{2n})
//     + 4i (pi/(2 w1))^3 (zt^2 + zt)/((zt - 1)^3),
// qt = x e^{g}/16 = e^{i pi tau}.
Complex script_F(Complex w1, Complex qt, Complex yt, Complex zt) {
    double gy = std::abs(yt);
    double gyz = std::abs(yt) * std::norm(zt);
    double growth = std::max(gy, gyz);
    if (growth >= 1.0)
        throw validation_error("script_F: |y| or |y z^2| outside the unit disc");
    if (std::abs(zt - 1.0) < 1e-12)
        throw numerical_error("script_F: z at the pole of the trigonometric part");

    Complex q2 = qt * qt;
    double q2abs = std::abs(q2);
    if (q2abs >= 1.0) throw validation_error("script_F: |q| >= 1");

    Complex sum = 0.0;
    Complex yn = 1.0, z2n = 1.0, q2n = 1.0;
    bool converged = false;
    for (int n = 1; n <= 500; ++n) {
        yn *= yt;
        z2n *= zt * zt;
        q2n *= q2;
        Complex term = static_cast<double>(n) * n * yn * (z2n - 1.0) / (1.0 - q2n);
        sum += term;
        double bound = 2.0 * n * static_cast<double>(n) * std::pow(growth, n) /
                       (1.0 - std::pow(q2abs, n));
        if (bound < 1e-16 * (std::abs(sum) + 1.0)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw numerical_error("script_F: series needs more than 500 terms");

    Complex pw = kPi / w1;
    Complex phw = kPi / (2.0 * w1);
    Complex zm1 = zt - 1.0;
    Complex trig = 4.0 * kI * (phw * phw * phw) * (zt * zt + zt) / (zm1 * zm1 * zm1);
    return (pw * pw * pw) * sum / (2.0 * kI) + trig;
}

Complex alpha_of(const Mu& mu) {
    Complex t = 2.0 * mu.value - 1.0;
    return 0.5 * t * t;
}

}  // namespace

EllipticData make_elliptic_data(Complex nu1, Complex nu2) {
    if (nu2_excluded(nu2))
        throw validation_error("EllipticData: nu2 in (-inf,0] or [2,+inf) excluded");
    EllipticData ed;
    ed.nu1 = nu1;
    ed.nu2 = nu2;
    ed.A = std::exp(-kI * kPi * nu1) / pow16c(2.0 - nu2);
    ed.B = std::exp(kI * kPi * nu1) / pow16c(nu2);
    return ed;
}

bool script_domain_contains(const CoveringPoint& x, const DomainSpecScriptD& d) {
    if (!(x.modulus < d.r)) return false;
    double sA = std::abs(d.ed.A) * abs_cpow(x, 2.0 - d.ed.nu2);
    double sB = std::abs(d.ed.B) * abs_cpow(x, d.ed.nu2);
    return sA < d.r && sB < d.r;
}

Complex phi_value(Complex x, Complex y, Complex z, const Mu& mu, Complex nu2) {
    if (!(std::abs(x) < 1.0) || !(std::abs(y) < 1.0))
        throw validation_error("phi_value: |x| and |y| must be < 1");
    Complex g = special::log16_correction(x);
    Complex zt = z * std::exp(nu2 * g);
    if (!(std::abs(zt) < 1.0))
        throw validation_error("phi_value: |e^{nu2 g} z| must be < 1");
    Complex alpha = alpha_of(mu);
    if (std::abs(alpha) == 0.0) return 0.0;
    Complex w1 = 0.5 * kPi * special::hyp_F(x);
    Complex qt = x * std::exp(g) / 16.0;
    Complex yt = y * std::exp((2.0 - nu2) * g);
    Complex omx = 1.0 - x;
    return alpha / (2.0 * omx * omx) * script_F(w1, qt, yt, zt);
}

Complex psi_value(Complex x, Complex y, Complex z, Complex v, Complex w,
                  const Mu& mu, Complex nu2) {
    if (!(std::abs(x) < 1.0) || !(std::abs(y) < 1.0))
        throw validation_error("psi_value: |x| and |y| must be < 1");
    Complex g = special::log16_correction(x);
    Complex w1 = 0.5 * kPi * special::hyp_F(x);
    Complex zt = z * std::exp(nu2 * g);
    if (!(std::abs(zt) < 1.0))
        throw validation_error("psi_value: |e^{nu2 g} z| must be < 1");
    Complex omx = 1.0 - x;
    Complex lead = x * (w + 0.25 * v) / omx;
    Complex alpha = alpha_of(mu);
    if (std::abs(alpha) == 0.0) return lead;
    Complex qt = x * std::exp(g) / 16.0;
    Complex yt = y * std::exp((2.0 - nu2) * g);
    Complex rot = std::exp(kI * kPi * v / w1);
    Complex dG = script_F(w1, qt, yt / rot, zt * rot) - script_F(w1, qt, yt, zt);
    return lead + alpha / (2.0 * omx * omx) * dG;
}

namespace {

// Per-node data along the integration path L(x).
struct PathNode {
    Complex s;        // complex value of the path point
    Complex w1;       // omega1(s)
    Complex qt;       // s e^{g(s)}/16
    Complex yt0;      // dressed A s^{2-nu2} e^{(2-nu2) g}
    Complex zt0;      // dressed B s^{nu2} e^{nu2 g}
    Complex phi;      // Phi at the node (v-independent)
};

}  // namespace

VSolution solve_v(const CoveringPoint& x, const EllipticData& ed, const Mu& mu,
                  double tol) {
    double scale = x.modulus + std::abs(ed.A) * abs_cpow(x, 2.0 - ed.nu2) +
                   std::abs(ed.B) * abs_cpow(x, ed.nu2);
    if (x.modulus >= 0.6 || scale >= 1.5)
        throw validation_error("solve_v: x outside a safe script-D domain");

    Complex alpha = alpha_of(mu);

    // Path L(x): arg s = arg x + slope * ln(|s|/|x|), nu* = 1.
    double slope = 0.0;
    if (std::abs(ed.nu2.imag()) >= 1e-14)
        slope = (ed.nu2.real() - 1.0) / ed.nu2.imag();
    const Complex jac(1.0, slope);  // (1/s) ds = (1 + i slope) dt, t = ln rho

    // mu = 1/2: Phi = script-G = 0 identically, and the first Picard sweep of
    // the remaining linear term maps (0,0) to (0,0).
    if (std::abs(alpha) == 0.0) {
        VSolution out;
        out.v = 0.0;
        out.w = 0.0;
        out.iterations = 1;
        out.bound_ratio = 0.0;
        return out;
    }

    const double t_min = std::log(1e-15);
    const int panels = 48;
    const int order = 12;
    quad::PanelGrid grid(t_min, 0.0, panels, order);
    const std::vector<double>& ts = grid.nodes();
    const std::size_t N = ts.size();

    std::vector<PathNode> nodes(N);
    for (std::size_t j = 0; j < N; ++j) {
        double rho = x.modulus * std::exp(ts[j]);
        double arg = x.argument + slope * ts[j];
        CoveringPoint sp(rho, arg);
        PathNode& nd = nodes[j];
        nd.s = sp.to_complex();
        Complex g = special::log16_correction(nd.s);
        nd.w1 = 0.5 * kPi * special::hyp_F(nd.s);
        nd.qt = nd.s * std::exp(g) / 16.0;
        nd.yt0 = ed.A * cpow(sp, 2.0 - ed.nu2) * std::exp((2.0 - ed.nu2) * g);
        nd.zt0 = ed.B * cpow(sp, ed.nu2) * std::exp(ed.nu2 * g);
        Complex omx = 1.0 - nd.s;
        nd.phi = alpha / (2.0 * omx * omx) * script_F(nd.w1, nd.qt, nd.yt0, nd.zt0);
    }

    std::vector<Complex> v(N, 0.0), w(N, 0.0), rhs(N), wnew, vnew;
    double prev_delta = 0.0;
    VSolution out;
    for (int it = 1; it <= 60; ++it) {
        for (std::size_t j = 0; j < N; ++j) {
            const PathNode& nd = nodes[j];
            Complex omx = 1.0 - nd.s;
            Complex psi = nd.s * (w[j] + 0.25 * v[j]) / omx;
            if (std::abs(v[j]) > 0.0 || std::abs(w[j]) > 0.0) {
                Complex rot = std::exp(kI * kPi * v[j] / nd.w1);
                psi += alpha / (2.0 * omx * omx) *
                       (script_F(nd.w1, nd.qt, nd.yt0 / rot, nd.zt0 * rot) -
                        script_F(nd.w1, nd.qt, nd.yt0, nd.zt0));
            }
            rhs[j] = jac * (nd.phi + psi);
        }
        wnew = grid.cumulative(rhs);
        for (std::size_t j = 0; j < N; ++j) rhs[j] = jac * wnew[j];
        vnew = grid.cumulative(rhs);

        double delta = 0.0;
        for (std::size_t j = 0; j < N; ++j)
            delta = std::max(delta,
                             std::max(std::abs(vnew[j] - v[j]), std::abs(wnew[j] - w[j])));
        v.swap(vnew);
        w.swap(wnew);
        out.iterations = it;
        if (delta < tol) break;
        if (it >= 10 && delta > prev_delta)
            throw numerical_error(
                "solve_v: successive approximations stopped contracting; shrink r");
        prev_delta = delta;
        if (it == 60)
            throw numerical_error("solve_v: iteration cap reached without convergence");
    }

    // Endpoint values: one more quadrature pass evaluated at t = 0.
    for (std::size_t j = 0; j < N; ++j) {
        const PathNode& nd = nodes[j];
        Complex omx = 1.0 - nd.s;
        Complex psi = nd.s * (w[j] + 0.25 * v[j]) / omx;
        if (std::abs(v[j]) > 0.0 || std::abs(w[j]) > 0.0) {
            Complex rot = std::exp(kI * kPi * v[j] / nd.w1);
            psi += alpha / (2.0 * omx * omx) *
                   (script_F(nd.w1, nd.qt, nd.yt0 / rot, nd.zt0 * rot) -
                    script_F(nd.w1, nd.qt, nd.yt0, nd.zt0));
        }
        rhs[j] = jac * (nd.phi + psi);
    }
    out.w = grid.total(rhs);
    std::vector<Complex> wcum = grid.cumulative(rhs);
    for (std::size_t j = 0; j < N; ++j) rhs[j] = jac * wcum[j];
    out.v = grid.total(rhs);
    out.bound_ratio = std::abs(out.v) / scale;
    return out;
}

Complex eval_theorem3(const CoveringPoint& x, const EllipticData& ed, const Mu& mu) {
    special::HalfPeriods hp = special::half_periods(x);
    VSolution vs = solve_v(x, ed, mu);
    Complex u = 2.0 * (ed.nu1 * hp.omega1 + ed.nu2 * hp.omega2 + vs.v);
    return special::wp(u, hp) + (1.0 + x.to_complex()) / 3.0;
}

CorollaryCase corollary_classify(double path_V, const EllipticData& ed) {
    if (path_V < 0.0 || path_V > 2.0)
        throw validation_error("corollary_classify: V outside [0, 2]");
    const double tol = 1e-12;
    if (std::abs(ed.nu2.imag()) < 1e-14) {
        double r = ed.nu2.real();
        if (std::abs(r - 1.0) < tol) return CorollaryCase::term_x;
        return r < 1.0 ? CorollaryCase::term_nu2 : CorollaryCase::term_2_minus_nu2;
    }
    if (path_V < tol) return CorollaryCase::oscillatory_V0;
    if (std::abs(path_V - 2.0) < tol) return CorollaryCase::oscillatory_V2;
    if (std::abs(path_V - 1.0) < tol) return CorollaryCase::balanced_V1;
    return path_V < 1.0 ? CorollaryCase::term_nu2 : CorollaryCase::term_2_minus_nu2;
}

Complex picard_closed_form(const CoveringPoint& x, Complex nu1, Complex nu2) {
    if (std::abs(nu1) < 1e-14 && std::abs(nu2) < 1e-14)
        throw validation_error("picard_closed_form: (nu1, nu2) = (0, 0)");
    if (nu1.real() < 0.0 || nu1.real() >= 2.0 || nu2.real() < 0.0 || nu2.real() >= 2.0)
        throw validation_error("picard_closed_form: Re nu_i must lie in [0, 2)");
    special::HalfPeriods hp = special::half_periods(x);
    Complex u = 2.0 * (nu1 * hp.omega1 + nu2 * hp.omega2);
    return special::wp(u, hp) + (1.0 + x.to_complex()) / 3.0;
}

Complex shimomura_eval(const CoveringPoint& x, Complex sigma, Complex k, Complex v) {
    Complex zeta = 0.5 * (sigma - 1.0) * x.log() + 0.5 * k + 0.5 * v;
    // cosh vanishes at zeta = i pi (m + 1/2).
    double frac = zeta.imag() / kPi;
    double nearest = std::round(frac - 0.5) + 0.5;
    double dist = std::hypot(zeta.real(), (frac - nearest) * kPi);
    if (dist < 1e-8)
        throw numerical_error("shimomura_eval: argument within 1e-8 of a cosh zero");
    Complex ch = std::cosh(zeta);
    return 1.0 / (ch * ch);
}

}  // namespace pvi::elliptic
