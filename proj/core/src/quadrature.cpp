#include "bianchi/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace bianchi {

namespace {

QuadRule compute_rule(int n) {
  QuadRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-based initial guess, Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[n - 1 - i] = x;
    r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

std::map<int, QuadRule> g_rules;
std::mutex g_rules_mutex;

}  // namespace

const QuadRule& gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  std::lock_guard<std::mutex> lock(g_rules_mutex);
  auto it = g_rules.find(order);
  if (it == g_rules.end()) it = g_rules.emplace(order, compute_rule(order)).first;
  return it->second;
}

PanelGrid panel_grid(double a, double b, int panels, int order) {
  if (panels < 1) throw std::invalid_argument("panel count must be >= 1");
  const QuadRule& rule = gauss_legendre(order);
  PanelGrid g;
  g.x.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
  g.w.reserve(g.x.capacity());
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    double mid = lo + 0.5 * h, half = 0.5 * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      g.x.push_back(mid + half * rule.nodes[i]);
      g.w.push_back(half * rule.weights[i]);
    }
  }
  return g;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int order, int max_panels) {
  double prev = integrate(panel_grid(a, b, 1, order), f);
  for (int panels = 2; panels <= max_panels; panels *= 2) {
    double cur = integrate(panel_grid(a, b, panels, order), f);
    double scale = std::max(std::abs(cur), 1e-300);
    if (std::abs(cur - prev) <= rel_tol * scale) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace bianchi
