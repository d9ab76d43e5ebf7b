#ifndef PVI_ELLIPTIC_HPP
#define PVI_ELLIPTIC_HPP

#include "pvi/covering.hpp"
#include "pvi/monodromy.hpp"
#include "pvi/special.hpp"

namespace pvi::elliptic {

using monodromy::Mu;

// Parameters of the elliptic representation together with the derived
// scales A = e^{-i pi nu1}/16^{2-nu2}, B = e^{i pi nu1}/16^{nu2}; AB = 16^{-2}.
struct EllipticData {
    Complex nu1;
    Complex nu2;
    Complex A;
    Complex B;
};

EllipticData make_elliptic_data(Complex nu1, Complex nu2);

// Domain script-D(r; nu1, nu2): |x| < r, |A x^{2-nu2}| < r, |B x^{nu2}| < r.
struct DomainSpecScriptD {
    double r{0.05};
    EllipticData ed;
};

bool script_domain_contains(const CoveringPoint& x, const DomainSpecScriptD& d);

struct VSolution {
    Complex v;
    Complex w;  // x dv/dx
    int iterations{0};
    double bound_ratio{0.0};  // |v| / (|x| + |A x^{2-nu2}| + |B x^{nu2}|)
};

// Phi(x,y,z) = alpha/(2(1-x)^2) * script-F(x,y,z), alpha = (2 mu - 1)^2 / 2.
// Requires |x|, |y| < 1 and |e^{nu2 g(x)} z| < 1.
Complex phi_value(Complex x, Complex y, Complex z, const Mu& mu, Complex nu2);

// Psi(x,y,z,v,w) = x (w + v/4)/(1-x) + alpha/(2(1-x)^2) * script-G(x,y,z,v).
Complex psi_value(Complex x, Complex y, Complex z, Complex v, Complex w,
                  const Mu& mu, Complex nu2);

// Picard iteration of the integral system for the correction v(x) along the
// path L(x); Gauss-Legendre panels in ln|s| with exact per-panel cumulative
// integration.
VSolution solve_v(const CoveringPoint& x, const EllipticData& ed, const Mu& mu,
                  double tol = 1e-12);

// y(x) = pe(nu1 w1 + nu2 w2 + v; w1, w2) + (1+x)/3, via the u-normalized wp.
Complex eval_theorem3(const CoveringPoint& x, const EllipticData& ed, const Mu& mu);

enum class CorollaryCase {
    term_nu2,        // -(1/4) e^{i pi nu1} 16^{1-nu2} x^{nu2} leads
    term_x,          // real nu2 = 1: sin^2(pi nu1/2) x leads
    term_2_minus_nu2,
    oscillatory_V0,
    oscillatory_V2,
    balanced_V1,
};

CorollaryCase corollary_classify(double path_V, const EllipticData& ed);

// Exact mu = 1/2 solution (v = 0).
Complex picard_closed_form(const CoveringPoint& x, Complex nu1, Complex nu2);

// Shimomura form y = 1/cosh^2(((sigma-1)/2) ln x + k/2 + v/2), covering log.
Complex shimomura_eval(const CoveringPoint& x, Complex sigma, Complex k, Complex v);

}  // namespace pvi::elliptic

#endif
