#ifndef PVI_ASYMPTOTIC_HPP
#define PVI_ASYMPTOTIC_HPP

#include <vector>

#include "pvi/connection.hpp"
#include "pvi/covering.hpp"

namespace pvi::asymptotic {

using connection::CriticalData;
using connection::CriticalPoint;

// Domain D(eps; sigma; theta1, theta2, sigma_tilde) where the Theorem-1
// behavior holds. For point one/infinity the coordinate change is applied
// first; for point infinity `epsilon` is the modulus lower bound M.
struct DomainSpecD {
    double epsilon{0.1};
    double theta1{0.0};
    double theta2{0.0};
    double sigma_tilde{0.9};
    Complex sigma;
    CriticalPoint point{CriticalPoint::zero};
};

// Path family along which x -> 0:
//   arg x = arg x0 + (Re sigma - Sigma)/Im sigma * ln(|x|/|x0|),
// radial when Im sigma = 0.
struct SpiralPath {
    CoveringPoint start;
    double Sigma{0.0};
    Complex sigma;
    std::vector<CoveringPoint> samples;
};

// Strip bound B(sigma, a; theta2, sigma_tilde); c is an empirical constant
// (default ln c = 0), used for diagnostics only.
struct StripB {
    Complex sigma;
    Complex a;
    double theta2{0.0};
    double sigma_tilde{0.9};
    double log_c{0.0};
};

bool domain_contains(const CoveringPoint& x, const DomainSpecD& d);
bool strip_contains(const CoveringPoint& x, const StripB& b);

SpiralPath make_spiral(const CoveringPoint& start, double Sigma, Complex sigma,
                       int count, double modulus_floor_ratio = 1e-6);

// Three-term critical behavior and its derivative:
//   y = a x^{1-sigma} + x/2 + x^{1+sigma}/(16a)
// transported to the requested critical point via the symmetry maps.
struct LeadingValue {
    Complex y;
    Complex dy;
};

LeadingValue eval_leading(const CoveringPoint& x, const CriticalData& cd);

// Oscillatory amplitude along a Sigma = 0 path: y = a(x) x^{1-sigma} with
//   a(x) = a0 (1 + |x0^s|/(2 a0) e^{i alpha} + |x0^s|^2/(16 a0^2) e^{2 i alpha}),
//   alpha(x) = Re s arg x + Im s ln |x|.
Complex eval_oscillatory(const CoveringPoint& x, const CriticalData& cd,
                         const SpiralPath& path);

// Oscillatory amplitude a(x) alone (the (cecilia) bracket).
Complex oscillatory_amplitude(const CoveringPoint& x, const CriticalData& cd,
                              const SpiralPath& path);

// Coordinate maps on the covering. map_to_one uses the principal argument
// of 1 - x; map_to_infinity negates the covering argument exactly.
CoveringPoint map_to_one(const CoveringPoint& x);
CoveringPoint map_to_infinity(const CoveringPoint& x);

// Value-level transforms of y under the same symmetries.
Complex y_from_one(Complex y_hat);                   // y = 1 - yhat
Complex y_from_infinity(Complex y_hat, Complex t);   // y = yhat / t

}  // namespace pvi::asymptotic

#endif
