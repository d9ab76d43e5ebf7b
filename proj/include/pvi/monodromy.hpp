#ifndef PVI_MONODROMY_HPP
#define PVI_MONODROMY_HPP

#include "pvi/covering.hpp"
#include "pvi/mat2.hpp"

namespace pvi::monodromy {

// The one-parameter family PVI_mu. mu = 0 is identified with mu = 1 and
// rejected. resonant <=> 2 mu is a nonzero integer.
struct Mu {
    Complex value;
    bool resonant;

    explicit Mu(Complex v) : value(v) {
        if (std::abs(v) < 1e-12)
            throw validation_error("Mu: mu = 0 coincides with mu = 1; use mu = 1");
        resonant = is_near_integer(2.0 * v) && std::abs(2.0 * v) > 0.5;
    }
};

// Trace coordinates (x0, x1, xinf) of a monodromy representation;
// transcendents correspond to equivalence classes under change of two signs.
struct MonodromyTriple {
    Complex x0, x1, xinf;
};

// Monodromy matrices in the loop basis around z = 0, x, 1. minf is defined
// so that minf * m1 * mx * m0 = I (the loop around infinity composed with
// the three finite loops is trivial).
struct MonodromyMatrixSet {
    Mat2 m0, mx, m1, minf;
};

// |x0^2 + x1^2 + xinf^2 - x0 x1 xinf - 4 sin^2(pi mu)|.
double relation_residual(const MonodromyTriple& t, const Mu& mu);

// Admissible: at most one entry is zero, and not in the excluded orbit of
// (2,2,2) under two-sign changes.
bool is_admissible(const MonodromyTriple& t);

// Deterministic representative of the two-sign-change class: the first
// nonzero entry gets argument in (-pi/2, pi/2]; ties broken on the next
// nonzero entry.
MonodromyTriple canonicalize(const MonodromyTriple& t);

bool equivalent(const MonodromyTriple& s, const MonodromyTriple& t, double tol = 1e-9);

// Braid actions of the analytic continuation around x = 0 (beta1) and
// x = 1 (beta2), and their squares (pure braids).
MonodromyTriple braid_beta1(const MonodromyTriple& t);
MonodromyTriple braid_beta2(const MonodromyTriple& t);
MonodromyTriple braid_beta1_sq(const MonodromyTriple& t);
MonodromyTriple braid_beta2_sq(const MonodromyTriple& t);

// Inverse of the squared braids (solves the affine action).
MonodromyTriple braid_beta1_sq_inv(const MonodromyTriple& t);
MonodromyTriple braid_beta2_sq_inv(const MonodromyTriple& t);

// Explicit 2x2 realization anchored at the first nonzero entry:
//   M0 = [[1, -x0], [0, 1]],  Mx = [[1, 0], [x0, 1]],
//   M1 = [[1 + x1 xinf / x0, -x1^2 / x0], [xinf^2 / x0, 1 - x1 xinf / x0]].
// When x0 = 0 the anchor shifts cyclically ((x0,x1,xinf) -> (x1,xinf,x0)
// with the matrix roles shifted back), which preserves all pair traces.
MonodromyMatrixSet matrix_realization(const MonodromyTriple& t);

// Recovers the triple from pair traces 2 - x0^2 = tr(M0 Mx),
// 2 - x1^2 = tr(Mx M1), 2 - xinf^2 = tr(M0 M1); principal square roots,
// canonicalized.
MonodromyTriple trace_check(const MonodromyMatrixSet& ms);

}  // namespace pvi::monodromy

#endif
