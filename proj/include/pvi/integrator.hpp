#ifndef PVI_INTEGRATOR_HPP
#define PVI_INTEGRATOR_HPP

#include <functional>
#include <string>
#include <vector>

#include "pvi/connection.hpp"
#include "pvi/covering.hpp"

namespace pvi::ode {

using connection::CriticalPoint;
using monodromy::Mu;

struct OdeState {
    CoveringPoint x;
    Complex y;
    Complex dy;
};

// Waypoints are joined by legs that are straight in (ln|x|, arg x), so radial
// segments, arcs and spirals are exact and the covering argument is
// transported continuously.
struct PathPlan {
    std::vector<CoveringPoint> waypoints;
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    double pole_guard{1e-4};
    double max_step{0.1};  // in leg parameter units
};

struct Event {
    enum class Kind { pole_proximity, large_y, step_underflow };
    Kind kind;
    OdeState state;
    std::string message;
};

struct TracePoint {
    OdeState state;
    double local_err{0.0};
};

struct IntegrationResult {
    std::vector<TracePoint> trace;
    std::vector<Event> events;
    bool completed{true};
};

struct CriticalFit {
    Complex sigma_hat;
    Complex a_hat;
    double delta_hat{0.0};
    double rms{0.0};
    int points_used{0};
};

// Right-hand side y'' of PVI_mu. Throws when y is within `guard` of
// {0, 1, x} or |y| exceeds 1/guard.
Complex pvi_rhs(const OdeState& s, const Mu& mu, double guard = 1e-4);

// Adaptive Dormand-Prince 5(4) along the plan. Pole-proximity events halt
// the remaining path.
IntegrationResult integrate(const OdeState& seed, const PathPlan& plan, const Mu& mu);

// Power-law fit ln y = ln a + (1 - sigma) ln x over trace points whose
// transformed modulus lies in [window_lo, window_hi]; covering-aware logs,
// residual slope gives delta_hat. Throws on oscillatory windows.
CriticalFit fit_critical_data(const std::vector<TracePoint>& trace, CriticalPoint point,
                              double window_lo, double window_hi);

enum class StencilMode { five_point, circle };

// |y'' - rhs| for a candidate solution at the given points. The default
// trigonometric circle stencil keeps the differentiation error near the
// evaluation accuracy of y_fn; the literal 5-point mode with h = 1e-5 |x| is
// retained for cross-checks at loose tolerance.
std::vector<double> residual_scan(
    const std::function<Complex(const CoveringPoint&)>& y_fn,
    const std::vector<CoveringPoint>& xs, const Mu& mu,
    StencilMode mode = StencilMode::circle);

}  // namespace pvi::ode

#endif
