#ifndef PVI_SPECIAL_HPP
#define PVI_SPECIAL_HPP

#include "pvi/covering.hpp"

namespace pvi::special {

// Complex Gamma function, Lanczos approximation with reflection.
// Relative error below 1e-13 for |z| <= 50, poles at nonpositive integers.
Complex gamma(Complex z);

// Complex digamma psi(z) = d/dz ln Gamma(z); recurrence shift + asymptotic
// series, reflection for Re z < 1/2.
Complex digamma(Complex z);

// F(1/2,1/2,1;x) as a power series. Requires |x| <= 0.6.
Complex hyp_F(Complex x);

// F1(x) = sum [(1/2)_n]^2/(n!)^2 * 2[psi(n+1/2) - psi(n+1)] x^n, |x| <= 0.6.
Complex hyp_F1(Complex x);

// g(x) := F1(x)/F(x) + 4 ln 2; g(x) = O(x). Always computed from the two
// series, never as an independent expansion.
Complex log16_correction(Complex x);

// Half-periods of the PVI lattice at x and their ratio.
//   omega1 = (pi/2) F(x),  omega2 = -(i/2)[F(x) log x + F1(x)],  tau = w2/w1,
// with log x taken from the covering argument.
struct HalfPeriods {
    Complex omega1;
    Complex omega2;
    Complex tau;
};

HalfPeriods half_periods(const CoveringPoint& x);

// Weierstrass pe in the u-normalization y = pe(u/2; w1, w2): the function
// below has periods 4*omega1, 4*omega2 in u. Fourier (q-)series with the
// trigonometric part in factored geometric form. Requires Im tau > 0 and
// |Im(u/(4 omega1))| < Im tau.
Complex wp(Complex u, const HalfPeriods& hp);

// d/du of wp(u, hp), term-by-term differentiated series.
Complex wp_du(Complex u, const HalfPeriods& hp);

}  // namespace pvi::special

#endif
