#ifndef PVI_FUCHSIAN_HPP
#define PVI_FUCHSIAN_HPP

#include <functional>
#include <vector>

#include "pvi/covering.hpp"
#include "pvi/mat2.hpp"
#include "pvi/monodromy.hpp"

namespace pvi::fuchsian {

using monodromy::MonodromyMatrixSet;
using monodromy::MonodromyTriple;
using monodromy::Mu;

// 2x2 Fuchsian system dY/dz = [A0/z + Ax/(z-x) + A1/(z-1)] Y attached to a
// transcendent at fixed x; tr Ai = det Ai = 0, A0+Ax+A1 = -diag(mu,-mu).
struct FuchsianSystem {
    CoveringPoint x;
    Mat2 A0, Ax, A1;
    Complex k;
    Complex mu;
};

enum class LoopCenter { zero, x, one };

struct LoopSpec {
    Complex basepoint{-1.0, 0.0};
    LoopCenter center{LoopCenter::zero};
    double radius{0.1};
    int orientation{+1};  // counter-clockwise
};

// Builds the system from (y, y') via the phi-formulas with u1=0, u2=x, u3=1.
// The gauge scalar k = k0 exp{(2mu-1) int_{base}^{x} (y(z)-z)/(z(z-1)) dz}
// needs a y-evaluator along the quadrature path (log-straight leg from
// quadrature_base to x).
FuchsianSystem build_system(
    const CoveringPoint& x, Complex y, Complex dy, const Mu& mu, Complex k0,
    const CoveringPoint& quadrature_base,
    const std::function<Complex(const CoveringPoint&)>& y_eval);

// Default loop set: counter-clockwise circles around 0, x, 1 based at the
// common basepoint, radii min(|x|, |1-x|, 1)/3.
std::vector<LoopSpec> default_loops(const CoveringPoint& x, Complex basepoint = {-1.0, 0.0});

// Numeric monodromy: integrates the linear system around each loop from
// identity initial data at the basepoint.
MonodromyMatrixSet numeric_monodromy(const FuchsianSystem& fs,
                                     const std::vector<LoopSpec>& loops,
                                     double rel_tol = 1e-11);

// Pair traces to triple, principal roots, canonicalized.
MonodromyTriple traces_to_triple(const MonodromyMatrixSet& ms);

}  // namespace pvi::fuchsian

#endif
