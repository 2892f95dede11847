#pragma once

// Adaptive Dormand-Prince integration (via boost::odeint) for the second
// order linear problems used here:
//   a * u'' + c1(z) u' + c0(z) u = 0,  complex or real coefficients,
// with dense output on caller-supplied grids and, for the real case, node
// counting for Sturm bracketing.

#include <complex>
#include <functional>
#include <vector>

namespace bianchi {

struct OdeTol {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
};

// Integrates a u'' + c1(z) u' + c0(z) u = 0 from z0 with u(z0)=u0,
// u'(z0)=du0, reporting (u, u') at each point of `zs` (strictly monotone,
// first entry may equal z0; increasing or decreasing).
void integrate_linear2_complex(double a, const std::function<std::complex<double>(double)>& c1,
                               const std::function<std::complex<double>(double)>& c0, double z0,
                               std::complex<double> u0, std::complex<double> du0,
                               const std::vector<double>& zs,
                               std::vector<std::complex<double>>& u_out,
                               std::vector<std::complex<double>>& du_out,
                               const OdeTol& tol = {});

// Real variant; returns the number of sign changes of u on (z0, zs.back())
// when count_nodes is true.
int integrate_linear2_real(double a, const std::function<double(double)>& c1,
                           const std::function<double(double)>& c0, double z0, double u0,
                           double du0, const std::vector<double>& zs, std::vector<double>& u_out,
                           std::vector<double>& du_out, bool count_nodes = false,
                           const OdeTol& tol = {});

}  // namespace bianchi
