#ifndef PVI_QUADRATURE_HPP
#define PVI_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "pvi/covering.hpp"

namespace pvi::quad {

// Gauss-Legendre nodes and weights on [-1, 1], computed once by Newton
// iteration on P_n.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

// Legendre polynomial P_m(xi) on [-1,1].
double legendre_P(int m, double xi);

// A set of contiguous panels in a real parameter t, each carrying the
// Gauss-Legendre nodes of the given order. Supports cumulative integration:
// given integrand values at all nodes, returns the antiderivative
// F(t) = int_{t_min}^{t} f at every node (exact for the per-panel
// degree-(n-1) interpolant, via Legendre antidifferentiation).
class PanelGrid {
  public:
    PanelGrid(double t_min, double t_max, int panels, int order);

    const std::vector<double>& nodes() const { return nodes_; }
    int order() const { return order_; }
    int panel_count() const { return panel_count_; }

    std::vector<Complex> cumulative(const std::vector<Complex>& values) const;
    Complex total(const std::vector<Complex>& values) const;

  private:
    int order_;
    int panel_count_;
    std::vector<double> edges_;
    std::vector<double> nodes_;
};

// Integral of f over a straight segment [a, b] in the complex plane,
// composite Gauss-Legendre.
Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex a,
                          Complex b, int panels = 8, int order = 12);

}  // namespace pvi::quad

#endif
