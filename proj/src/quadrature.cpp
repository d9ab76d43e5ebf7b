#include "pvi/quadrature.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace pvi::quad {

namespace {

GaussRule compute_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p0 = 0.0, p1 = 0.0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged node for the weight.
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double legendre_P(int m, double xi) {
    if (m == 0) return 1.0;
    double p0 = 1.0, p1 = xi;
    for (int k = 2; k <= m; ++k) {
        double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

PanelGrid::PanelGrid(double t_min, double t_max, int panels, int order)
    : order_(order), panel_count_(panels) {
    if (!(t_max > t_min) || panels < 1 || order < 2)
        throw validation_error("PanelGrid: bad construction parameters");
    edges_.resize(panels + 1);
    double h = (t_max - t_min) / panels;
    for (int p = 0; p <= panels; ++p) edges_[p] = t_min + p * h;
    const GaussRule& rule = gauss_legendre(order);
    nodes_.reserve(static_cast<std::size_t>(panels) * order);
    for (int p = 0; p < panels; ++p) {
        double a = edges_[p], b = edges_[p + 1];
        for (int k = 0; k < order; ++k)
            nodes_.push_back(0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[k]);
    }
}

std::vector<Complex> PanelGrid::cumulative(const std::vector<Complex>& values) const {
    if (values.size() != nodes_.size())
        throw validation_error("PanelGrid::cumulative: size mismatch");
    const GaussRule& rule = gauss_legendre(order_);
    std::vector<Complex> out(values.size());
    Complex carried = 0.0;
    for (int p = 0; p < panel_count_; ++p) {
        double half = 0.5 * (edges_[p + 1] - edges_[p]);
        const Complex* f = values.data() + static_cast<std::size_t>(p) * order_;
        // Legendre coefficients of the panel interpolant.
        std::vector<Complex> coef(order_);
        for (int m = 0; m < order_; ++m) {
            Complex c = 0.0;
            for (int k = 0; k < order_; ++k)
                c += rule.weights[k] * f[k] * legendre_P(m, rule.nodes[k]);
            coef[m] = (2.0 * m + 1.0) / 2.0 * c;
        }
        // Antiderivative from the panel's left edge at each node:
        // int_{-1}^{xi} P_0 = xi + 1, int_{-1}^{xi} P_m = (P_{m+1}-P_{m-1})/(2m+1).
        for (int k = 0; k < order_; ++k) {
            double xi = rule.nodes[k];
            Complex F = coef[0] * (xi + 1.0);
            for (int m = 1; m < order_; ++m)
                F += coef[m] * (legendre_P(m + 1, xi) - legendre_P(m - 1, xi)) /
                     (2.0 * m + 1.0);
            out[static_cast<std::size_t>(p) * order_ + k] = carried + half * F;
        }
        // Full panel integral = 2 * c_0 * half.
        carried += 2.0 * coef[0] * half;
    }
    return out;
}

Complex PanelGrid::total(const std::vector<Complex>& values) const {
    if (values.size() != nodes_.size())
        throw validation_error("PanelGrid::total: size mismatch");
    const GaussRule& rule = gauss_legendre(order_);
    Complex acc = 0.0;
    for (int p = 0; p < panel_count_; ++p) {
        double half = 0.5 * (edges_[p + 1] - edges_[p]);
        const Complex* f = values.data() + static_cast<std::size_t>(p) * order_;
        Complex s = 0.0;
        for (int k = 0; k < order_; ++k) s += rule.weights[k] * f[k];
        acc += half * s;
    }
    return acc;
}

Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex a,
                          Complex b, int panels, int order) {
    const GaussRule& rule = gauss_legendre(order);
    Complex acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        Complex pa = a + (b - a) * (static_cast<double>(p) / panels);
        Complex pb = a + (b - a) * (static_cast<double>(p + 1) / panels);
        Complex mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
        Complex s = 0.0;
        for (int k = 0; k < order; ++k)
            s += rule.weights[k] * f(mid + half * rule.nodes[k]);
        acc += half * s;
    }
    return acc;
}

}  // namespace pvi::quad
