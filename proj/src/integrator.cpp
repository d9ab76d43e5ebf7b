#include "pvi/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "pvi/asymptotic.hpp"

namespace pvi::ode {

namespace {

constexpr double kPi = std::numbers::pi;

double singular_distance(Complex y, Complex x) {
    return std::min({std::abs(y), std::abs(y - 1.0), std::abs(y - x)});
}

}  // namespace

Complex pvi_rhs(const OdeState& s, const Mu& mu, double guard) {
    Complex x = s.x.to_complex();
    Complex y = s.y, dy = s.dy;
    if (singular_distance(y, x) < guard || std::abs(y) > 1.0 / guard)
        throw numerical_error("pvi_rhs: y too close to {0, 1, x} or too large");
    Complex half_sum = 1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - x);
    Complex drift = 1.0 / x + 1.0 / (x - 1.0) + 1.0 / (y - x);
    Complex two_mu_m1 = 2.0 * mu.value - 1.0;
    Complex core = y * (y - 1.0) * (y - x) / (x * x * (x - 1.0) * (x - 1.0));
    Complex bracket = two_mu_m1 * two_mu_m1 + x * (x - 1.0) / ((y - x) * (y - x));
    return 0.5 * half_sum * dy * dy - drift * dy + 0.5 * core * bracket;
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

struct Vec2 {
    Complex y, dy;
    Vec2 operator+(const Vec2& o) const { return {y + o.y, dy + o.dy}; }
    Vec2 operator*(double s) const { return {y * s, dy * s}; }
    double norm() const { return std::max(std::abs(y), std::abs(dy)); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// One leg straight in (ln r, theta); tau in [0, 1].
struct LogLeg {
    Complex L0, L1;  // log-coordinates of the endpoints
    CoveringPoint at(double tau) const {
        Complex L = (1.0 - tau) * L0 + tau * L1;
        return CoveringPoint(std::exp(L.real()), L.imag());
    }
    Complex dx_dtau(double tau) const {
        Complex L = (1.0 - tau) * L0 + tau * L1;
        return std::exp(L) * (L1 - L0);
    }
};

}  // namespace

IntegrationResult integrate(const OdeState& seed, const PathPlan& plan, const Mu& mu) {
    if (plan.waypoints.size() < 2)
        throw validation_error("integrate: need at least two waypoints");

    IntegrationResult res;
    Vec2 u{seed.y, seed.dy};
    res.trace.push_back({seed, 0.0});

    auto emit_and_halt = [&](Event::Kind kind, const OdeState& st, const char* msg) {
        res.events.push_back({kind, st, msg});
        res.completed = false;
    };

    for (std::size_t leg_i = 0; leg_i + 1 < plan.waypoints.size(); ++leg_i) {
        LogLeg leg{plan.waypoints[leg_i].log(), plan.waypoints[leg_i + 1].log()};
        if (leg_i == 0) {
            // The seed must sit at the first waypoint.
            if (std::abs(leg.at(0.0).to_complex() - seed.x.to_complex()) >
                1e-9 * (1.0 + seed.x.modulus))
                throw validation_error("integrate: seed not at the first waypoint");
        }

        auto deriv = [&](double tau, const Vec2& v) -> Vec2 {
            CoveringPoint xp = leg.at(tau);
            OdeState st{xp, v.y, v.dy};
            Complex ypp = pvi_rhs(st, mu, plan.pole_guard);
            Complex dxd = leg.dx_dtau(tau);
            return {v.dy * dxd, ypp * dxd};
        };

        double tau = 0.0;
        double h = std::min(plan.max_step, 1e-2);
        int guard_steps = 0;
        while (tau < 1.0) {
            h = std::min(h, 1.0 - tau);
            Vec2 k1, k2, k3, k4, k5, k6, k7;
            Vec2 u5;
            double err = 0.0;
            try {
                k1 = deriv(tau, u);
                k2 = deriv(tau + c2 * h, u + h * (a21 * k1));
                k3 = deriv(tau + c3 * h, u + h * (a31 * k1 + a32 * k2));
                k4 = deriv(tau + c4 * h, u + h * (a41 * k1 + a42 * k2 + a43 * k3));
                k5 = deriv(tau + c5 * h,
                           u + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
                k6 = deriv(tau + h,
                           u + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
                u5 = u + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
                k7 = deriv(tau + h, u5);
                Vec2 ev = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
                err = ev.norm();
            } catch (const numerical_error&) {
                // Singular configuration met inside the step: shrink.
                h *= 0.25;
                if (h < 1e-14) {
                    OdeState st{leg.at(tau), u.y, u.dy};
                    emit_and_halt(Event::Kind::pole_proximity, st,
                                  "pole proximity: cannot step");
                    return res;
                }
                continue;
            }
            double scale = plan.abs_tol + plan.rel_tol * std::max(u.norm(), u5.norm());
            if (err <= scale) {
                tau += h;
                u = u5;
                OdeState st{leg.at(tau), u.y, u.dy};
                res.trace.push_back({st, err});
                double dist = singular_distance(u.y, st.x.to_complex());
                if (dist < plan.pole_guard || std::abs(u.y) > 1.0 / plan.pole_guard) {
                    emit_and_halt(Event::Kind::pole_proximity, st,
                                  "pole proximity event");
                    return res;
                }
                guard_steps = 0;
            } else if (++guard_steps > 60) {
                OdeState st{leg.at(tau), u.y, u.dy};
                emit_and_halt(Event::Kind::step_underflow, st, "step underflow");
                return res;
            }
            double fac = 0.9 * std::pow(scale / std::max(err, 1e-300), 0.2);
            h *= std::clamp(fac, 0.2, 5.0);
            h = std::min(h, plan.max_step);
            if (h < 1e-14) {
                OdeState st{leg.at(tau), u.y, u.dy};
                emit_and_halt(Event::Kind::step_underflow, st, "step underflow");
                return res;
            }
        }
    }
    return res;
}

namespace {

struct FitSample {
    Complex lx;  // covering log of the transformed coordinate
    Complex ly;  // log of the transformed value, continuously unwrapped
};

}  // namespace

CriticalFit fit_critical_data(const std::vector<TracePoint>& trace, CriticalPoint point,
                              double window_lo, double window_hi) {
    std::vector<FitSample> samples;
    double prev_arg = 0.0;
    bool have_prev = false;
    for (const TracePoint& tp : trace) {
        const OdeState& s = tp.state;
        CoveringPoint t = s.x;
        Complex vhat = s.y;
        if (point == CriticalPoint::one) {
            Complex tc = 1.0 - s.x.to_complex();
            if (std::abs(tc) == 0.0) continue;
            t = covering_from(tc);
            vhat = 1.0 - s.y;
        } else if (point == CriticalPoint::infinity) {
            t = asymptotic::map_to_infinity(s.x);
            vhat = s.y * t.to_complex();
        }
        if (t.modulus < window_lo || t.modulus > window_hi) continue;
        if (std::abs(vhat) < 1e-300) continue;
        double arg = std::arg(vhat);
        if (have_prev) {
            while (arg - prev_arg > kPi) arg -= 2.0 * kPi;
            while (arg - prev_arg < -kPi) arg += 2.0 * kPi;
        }
        prev_arg = arg;
        have_prev = true;
        samples.push_back({t.log(), Complex(std::log(std::abs(vhat)), arg)});
    }
    if (samples.size() < 10)
        throw validation_error("fit_critical_data: fewer than 10 trace points in window");

    // Least squares ly = c0 + c1 lx over the real parameter Re lx (moduli
    // decrease monotonically along the window); complex coefficients.
    std::size_t n = samples.size();
    Complex sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& s : samples) {
        sx += s.lx;
        sy += s.ly;
        sxx += s.lx * s.lx;
        sxy += s.lx * s.ly;
    }
    Complex denom = static_cast<double>(n) * sxx - sx * sx;
    Complex c1 = (static_cast<double>(n) * sxy - sx * sy) / denom;
    Complex c0 = (sy - c1 * sx) / static_cast<double>(n);

    CriticalFit fit;
    fit.sigma_hat = 1.0 - c1;
    fit.a_hat = std::exp(c0);
    fit.points_used = static_cast<int>(n);

    double ss = 0.0;
    std::vector<double> rmod, rlog;
    for (const auto& s : samples) {
        Complex r = s.ly - (c0 + c1 * s.lx);
        ss += std::norm(r);
        if (std::abs(r) > 1e-300) {
            rmod.push_back(s.lx.real());
            rlog.push_back(std::log(std::abs(r)));
        }
    }
    fit.rms = std::sqrt(ss / n);
    if (fit.rms > 0.25)
        throw validation_error(
            "fit_critical_data: oscillatory window (rms too large); use Sigma = 0 tooling");

    // delta_hat from the slope of ln|residual| against ln|t|.
    if (rmod.size() >= 4) {
        double n2 = static_cast<double>(rmod.size());
        double mx = 0.0, my = 0.0, mxx = 0.0, mxy = 0.0;
        for (std::size_t i = 0; i < rmod.size(); ++i) {
            mx += rmod[i];
            my += rlog[i];
            mxx += rmod[i] * rmod[i];
            mxy += rmod[i] * rlog[i];
        }
        double dd = n2 * mxx - mx * mx;
        if (std::abs(dd) > 1e-30) fit.delta_hat = (n2 * mxy - mx * my) / dd;
    }
    return fit;
}

std::vector<double> residual_scan(
    const std::function<Complex(const CoveringPoint&)>& y_fn,
    const std::vector<CoveringPoint>& xs, const Mu& mu, StencilMode mode) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (const CoveringPoint& x : xs) {
        Complex xc = x.to_complex();
        Complex y0 = y_fn(x);
        Complex d1, d2;
        if (mode == StencilMode::five_point) {
            double h = 1e-5 * x.modulus;
            auto at = [&](double k) {
                return y_fn(covering_from(xc + k * h));
            };
            Complex ym2 = at(-2), ym1 = at(-1), yp1 = at(1), yp2 = at(2);
            d1 = (8.0 * (yp1 - ym1) - (yp2 - ym2)) / (12.0 * h);
            d2 = (-yp2 + 16.0 * yp1 - 30.0 * y0 + 16.0 * ym1 - ym2) / (12.0 * h * h);
        } else {
            // Trigonometric stencil on a circle of radius h around x: for an
            // analytic y_fn the m-th derivative comes out with O(eps/h^m)
            // roundoff but without cancellation between O(1) samples.
            const int N = 16;
            double h = 0.1 * x.modulus;
            Complex s1 = 0.0, s2 = 0.0;
            for (int k = 0; k < N; ++k) {
                double th = 2.0 * kPi * k / N;
                Complex w = std::polar(1.0, th);
                Complex f = y_fn(covering_from(xc + h * w));
                s1 += f / w;
                s2 += f / (w * w);
            }
            d1 = s1 / (static_cast<double>(N) * h);
            d2 = 2.0 * s2 / (static_cast<double>(N) * h * h);
        }
        OdeState st{x, y0, d1};
        out.push_back(std::abs(d2 - pvi_rhs(st, mu)));
    }
    return out;
}

}  // namespace pvi::ode
