#pragma once

// Gauss-Legendre panel quadrature. Nodes/weights are computed once per
// order by Newton iteration on the Legendre polynomials; integration over
// an interval splits into uniform panels, with an adaptive driver that
// subdivides until two refinement levels agree.

#include <cstddef>
#include <functional>
#include <vector>

#include "bianchi/linalg.hpp"

namespace bianchi {

struct QuadRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule of given order (number of nodes).
const QuadRule& gauss_legendre(int order);

// Nodes/weights mapped to [a, b] split into `panels` uniform panels.
struct PanelGrid {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};

PanelGrid panel_grid(double a, double b, int panels, int order = 16);

template <typename Fn>
auto integrate(const PanelGrid& g, Fn&& f) -> decltype(f(0.0)) {
  decltype(f(0.0)) acc{};
  for (std::size_t i = 0; i < g.size(); ++i) acc += g.w[i] * f(g.x[i]);
  return acc;
}

// Adaptive scalar integration: doubles panel count until successive values
// agree to rel_tol (or max_panels reached).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-8, int order = 16, int max_panels = 256);

}  // namespace bianchi
