#ifndef PVI_CONNECTION_HPP
#define PVI_CONNECTION_HPP

#include "pvi/covering.hpp"
#include "pvi/monodromy.hpp"

namespace pvi::connection {

using monodromy::MonodromyTriple;
using monodromy::Mu;

enum class CriticalPoint { zero, one, infinity };

// Exponent/amplitude pair of the critical behavior y ~ a x^{1-sigma} at one
// critical point (after the coordinate change for points 1 and infinity).
struct CriticalData {
    Complex sigma;
    Complex a;
    CriticalPoint point{CriticalPoint::zero};
};

enum class CaseKind { GenericI, ZeroII, III1, III2, III3, III4 };

struct CaseTag {
    CaseKind kind{CaseKind::GenericI};
    int m{0};  // only meaningful for the III cases
};

struct ForwardResult {
    MonodromyTriple triple;
    CaseTag tag;
    bool ill_conditioned{false};  // sigma within [1e-8, 1e-5] of a case-III pole
};

struct InverseResult {
    CriticalData cd;
    CaseTag tag;
    bool ill_conditioned{false};
};

// Solves cos(pi sigma) = 1 - x0^2/2 for the representative with
// 0 <= Re sigma <= 1 (sigma in [0,1) when real); boundary ties Re sigma in
// {0,1} broken by Im sigma >= 0. x0 = +-2 (sigma = 1) is excluded.
Complex sigma_from_x0(Complex x0);

// f(sigma,mu) = 2 cos^2(pi sigma/2) / (cos(pi sigma) - cos(2 pi mu)).
// Throws when sigma is within 1e-8 of the case-III set {+-2mu + 2m}.
Complex f_factor(Complex sigma, const Mu& mu);

// G(sigma,mu) = (1/2) 4^sigma Gamma((sigma+1)/2)^2
//               / (Gamma(1-mu+sigma/2) Gamma(mu+sigma/2)).
Complex G_factor(Complex sigma, const Mu& mu);

// F(sigma,mu) = f (2G)^2.
Complex F_factor(Complex sigma, const Mu& mu);

// Case dispatch for sigma against {0} and {+-2mu+2m}; tolerance 1e-8, with
// an ill-conditioned band up to 1e-5.
CaseTag classify_sigma(Complex sigma, const Mu& mu, bool* ill_conditioned = nullptr);

// Triple from (sigma, a); output is canonicalized and satisfies the trace
// relation to 1e-10.
ForwardResult forward(Complex sigma, Complex a, const Mu& mu);

// (sigma, a) at x = 0 from an admissible triple with x0 != +-2.
InverseResult inverse(const MonodromyTriple& t, const Mu& mu);

// Critical data at x = 1 / x = infinity via the substituted triples
// (x1, x0, x0 x1 - xinf) and (xinf, -x1, x0 - x1 xinf).
InverseResult connect_at_one(const MonodromyTriple& t, const Mu& mu);
InverseResult connect_at_infinity(const MonodromyTriple& t, const Mu& mu);

// Analytic continuation around x = 0: (sigma, a) -> (sigma, a e^{-2 pi i sigma}).
CriticalData braid_on_sigma_a(const CriticalData& cd);

// Re-runs the Theorem-2 amplitude formula with sigma -> sign*sigma + 2n for
// the same triple. sign is +1 or -1.
CriticalData alias(const CriticalData& cd, int n, int sign,
                   const MonodromyTriple& t, const Mu& mu);

}  // namespace pvi::connection

#endif
