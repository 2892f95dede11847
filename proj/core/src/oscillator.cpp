#include "bianchi/oscillator.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <stdexcept>

#include "bianchi/ode.hpp"

namespace bianchi {

namespace odeint = boost::numeric::odeint;

using State4 = std::array<double, 4>;  // (Re u, Im u, Re u', Im u')
using State2 = std::array<double, 2>;

void integrate_linear2_complex(double a, const std::function<cplx(double)>& c1,
                               const std::function<cplx(double)>& c0, double z0, cplx u0, cplx du0,
                               const std::vector<double>& zs, std::vector<cplx>& u_out,
                               std::vector<cplx>& du_out, const OdeTol& tol) {
  u_out.assign(zs.size(), cplx(0));
  du_out.assign(zs.size(), cplx(0));
  if (zs.empty()) return;
  const double dir = zs.back() >= z0 ? 1.0 : -1.0;
  auto rhs = [&](const State4& s, State4& ds, double z) {
    cplx u(s[0], s[1]), du(s[2], s[3]);
    cplx ddu = -(c1(z) * du + c0(z) * u) / a;
    ds[0] = du.real();
    ds[1] = du.imag();
    ds[2] = ddu.real();
    ds[3] = ddu.imag();
  };
  auto stepper =
      odeint::make_dense_output(tol.abs_tol, tol.rel_tol, odeint::runge_kutta_dopri5<State4>());
  State4 s{u0.real(), u0.imag(), du0.real(), du0.imag()};
  stepper.initialize(s, z0, dir * 1e-4);
  std::size_t idx = 0;
  while (idx < zs.size() && dir * (zs[idx] - z0) <= 1e-14) {
    u_out[idx] = u0;
    du_out[idx] = du0;
    ++idx;
  }
  const double z_end = zs.back();
  while (idx < zs.size() && dir * (stepper.current_time() - z_end) < 0.0) {
    stepper.do_step(rhs);
    while (idx < zs.size() && dir * (zs[idx] - stepper.current_time()) <= 1e-14) {
      State4 si;
      stepper.calc_state(zs[idx], si);
      u_out[idx] = cplx(si[0], si[1]);
      du_out[idx] = cplx(si[2], si[3]);
      ++idx;
    }
  }
  if (idx != zs.size()) throw std::runtime_error("integrate_linear2_complex: grid not covered");
}

int integrate_linear2_real(double a, const std::function<double(double)>& c1,
                           const std::function<double(double)>& c0, double z0, double u0,
                           double du0, const std::vector<double>& zs, std::vector<double>& u_out,
                           std::vector<double>& du_out, bool count_nodes, const OdeTol& tol) {
  u_out.assign(zs.size(), 0.0);
  du_out.assign(zs.size(), 0.0);
  if (zs.empty()) return 0;
  const double dir = zs.back() >= z0 ? 1.0 : -1.0;
  auto rhs = [&](const State2& s, State2& ds, double z) {
    ds[0] = s[1];
    ds[1] = -(c1(z) * s[1] + c0(z) * s[0]) / a;
  };
  auto stepper =
      odeint::make_dense_output(tol.abs_tol, tol.rel_tol, odeint::runge_kutta_dopri5<State2>());
  State2 s{u0, du0};
  stepper.initialize(s, z0, dir * 1e-4);
  std::size_t idx = 0;
  while (idx < zs.size() && dir * (zs[idx] - z0) <= 1e-14) {
    u_out[idx] = u0;
    du_out[idx] = du0;
    ++idx;
  }
  int nodes = 0;
  double last_sign = (u0 > 0.0) ? 1.0 : (u0 < 0.0 ? -1.0 : 0.0);
  const double z_end = zs.back();
  while (idx < zs.size() && dir * (stepper.current_time() - z_end) < 0.0) {
    double t_prev = stepper.current_time();
    stepper.do_step(rhs);
    double t_cur = stepper.current_time();
    if (count_nodes) {
      for (int m = 1; m <= 4; ++m) {
        double t = t_prev + (t_cur - t_prev) * m / 4.0;
        if (dir * (t - z_end) > 0.0) t = z_end;
        State2 si;
        stepper.calc_state(t, si);
        double sign = (si[0] > 0.0) ? 1.0 : (si[0] < 0.0 ? -1.0 : 0.0);
        if (sign != 0.0 && last_sign != 0.0 && sign != last_sign) ++nodes;
        if (sign != 0.0) last_sign = sign;
        if (t == z_end) break;
      }
    }
    while (idx < zs.size() && dir * (zs[idx] - t_cur) <= 1e-14) {
      State2 si;
      stepper.calc_state(zs[idx], si);
      u_out[idx] = si[0];
      du_out[idx] = si[1];
      ++idx;
    }
  }
  if (idx != zs.size()) throw std::runtime_error("integrate_linear2_real: grid not covered");
  return nodes;
}

// ---------------------------------------------------------------------------
// FiberOperator
// ---------------------------------------------------------------------------

FiberOperator::FiberOperator(const BianchiClass& cls, const InvariantMetric& h, Vec2 kvec)
    : cls_(cls), h33_(h.inv33()), kvec_(kvec), A_inv_(h.block2_inv()), H2_(h.inv2x2()),
      mixed_(h.inv_mixed()) {}

Vec2 FiberOperator::kappa(double z) const { return transpose(F_matrix(cls_, z)) * kvec_; }

double FiberOperator::potential(double z) const {
  Vec2 k = kappa(z);
  return dot(k, A_inv_ * k);
}

double FiberOperator::b_coeff(double z) const { return 2.0 * dot(kappa(z), mixed_); }

cplx FiberOperator::c_coeff(double z) const {
  Vec2 k = kappa(z);
  Vec2 kprime = transpose(structure_matrix(cls_)) * k;
  return cplx(dot(k, H2_ * k), -dot(mixed_, kprime));
}

double FiberOperator::gauge_phase(double z) const {
  // int_0^z F(u) du = z Phi(z), so int_0^z kappa . mixed du = z (Phi(z)^T kvec).mixed
  Vec2 avg = transpose(Phi_matrix(cls_, z)) * kvec_;
  return -(z / h33_) * dot(avg, mixed_);
}

double FiberOperator::gauge_phase_slope0() const { return -dot(kvec_, mixed_) / h33_; }

cplx FiberOperator::apply(const std::function<cplx(double)>& f, double z, double step) const {
  auto derivs = [&](double hstep) {
    cplx fm2 = f(z - 2 * hstep), fm1 = f(z - hstep), f0 = f(z), fp1 = f(z + hstep),
         fp2 = f(z + 2 * hstep);
    cplx d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * hstep);
    cplx dd = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * hstep * hstep);
    return std::pair<cplx, cplx>(d1, dd);
  };
  auto [d1a, d2a] = derivs(step);
  auto [d1b, d2b] = derivs(step / 2.0);
  cplx d1 = (16.0 * d1b - d1a) / 15.0;
  cplx dd = (16.0 * d2b - d2a) / 15.0;
  return h33_ * dd + cplx(0, 1) * b_coeff(z) * d1 - c_coeff(z) * f(z);
}

// ---------------------------------------------------------------------------
// OscillatorSolution
// ---------------------------------------------------------------------------

namespace {

// quintic Hermite on a uniform grid from (value, derivative, 2nd derivative)
template <typename T>
T hermite5_eval(const std::vector<double>& zs, const std::vector<T>& v, const std::vector<T>& dv,
                const std::vector<T>& ddv, double z0, double dz, double z, bool deriv) {
  if (zs.empty()) return T{};
  if (z <= zs.front()) return deriv ? dv.front() : v.front() + (z - zs.front()) * dv.front();
  if (z >= zs.back()) return deriv ? dv.back() : v.back() + (z - zs.back()) * dv.back();
  std::size_t i = static_cast<std::size_t>((z - z0) / dz);
  if (i >= zs.size() - 1) i = zs.size() - 2;
  double t = (z - zs[i]) / dz;
  T f0 = v[i], f1 = v[i + 1];
  T d0 = dz * dv[i], d1 = dz * dv[i + 1];
  T s0 = (dz * dz) * ddv[i], s1 = (dz * dz) * ddv[i + 1];
  T r0 = f1 - f0 - d0 - 0.5 * s0;
  T r1 = d1 - d0 - s0;
  T r2 = s1 - s0;
  T C = 0.5 * (r2 - 6.0 * r1 + 12.0 * r0);
  T B = r1 - 3.0 * r0 - 2.0 * C;
  T A = r0 - B - C;
  if (!deriv) return f0 + t * (d0 + t * (0.5 * s0 + t * (A + t * (B + t * C))));
  T p = d0 + t * (s0 + t * (3.0 * A + t * (4.0 * B + t * 5.0 * C)));
  return (1.0 / dz) * p;
}

// cubic Hermite on a uniform grid
template <typename T>
T hermite_eval(const std::vector<double>& zs, const std::vector<T>& v, const std::vector<T>& dv,
               double z0, double dz, double z) {
  if (zs.empty()) return T{};
  if (z <= zs.front()) return v.front() + (z - zs.front()) * dv.front();
  if (z >= zs.back()) return v.back() + (z - zs.back()) * dv.back();
  std::size_t i = static_cast<std::size_t>((z - z0) / dz);
  if (i >= zs.size() - 1) i = zs.size() - 2;
  double t = (z - zs[i]) / dz;
  double t2 = t * t, t3 = t2 * t;
  double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t, h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return h00 * v[i] + (h10 * dz) * dv[i] + h01 * v[i + 1] + (h11 * dz) * dv[i + 1];
}

template <typename T>
T hermite_eval_deriv(const std::vector<double>& zs, const std::vector<T>& v,
                     const std::vector<T>& dv, double z0, double dz, double z) {
  if (zs.empty()) return T{};
  if (z <= zs.front()) return dv.front();
  if (z >= zs.back()) return dv.back();
  std::size_t i = static_cast<std::size_t>((z - z0) / dz);
  if (i >= zs.size() - 1) i = zs.size() - 2;
  double t = (z - zs[i]) / dz;
  double t2 = t * t;
  double g00 = (6 * t2 - 6 * t) / dz, g10 = 3 * t2 - 4 * t + 1, g01 = (6 * t - 6 * t2) / dz,
         g11 = 3 * t2 - 2 * t;
  return g00 * v[i] + g10 * dv[i] + g01 * v[i + 1] + g11 * dv[i + 1];
}

}  // namespace

cplx OscillatorSolution::eval_P(double z) const {
  return hermite5_eval(zs, P, dP, ddP, z0, dz, z, false);
}
cplx OscillatorSolution::eval_Q(double z) const {
  return hermite5_eval(zs, Q, dQ, ddQ, z0, dz, z, false);
}
cplx OscillatorSolution::eval_dP(double z) const {
  return hermite5_eval(zs, P, dP, ddP, z0, dz, z, true);
}
cplx OscillatorSolution::eval_dQ(double z) const {
  return hermite5_eval(zs, Q, dQ, ddQ, z0, dz, z, true);
}

OscillatorSolution solve_oscillator_fiber(const FiberOperator& op, double lambda, double z_lo,
                                          double z_hi, int n_samples, const OscillatorInit& init,
                                          double ode_rel_tol) {
  if (!(z_hi > z_lo) || n_samples < 2)
    throw std::invalid_argument("solve_oscillator_fiber: bad grid");
  OscillatorSolution sol;
  sol.lambda = lambda;
  sol.z0 = z_lo;
  sol.dz = (z_hi - z_lo) / (n_samples - 1);
  sol.zs.resize(n_samples);
  for (int i = 0; i < n_samples; ++i) sol.zs[i] = z_lo + i * sol.dz;
  sol.P.resize(n_samples);
  sol.dP.resize(n_samples);
  sol.Q.resize(n_samples);
  sol.dQ.resize(n_samples);

  auto c1 = [&](double z) { return cplx(0.0, op.b_coeff(z)); };
  auto c0 = [&](double z) { return -(lambda + op.c_coeff(z)); };
  // D_k P = lambda P  <=>  h33 P'' + i b P' - c P = lambda P
  //                  <=>  h33 P'' + c1 P' + (-(lambda) - c) P = 0

  OdeTol tol{1e-12, ode_rel_tol};
  // split the grid at z = 0 and integrate outward in both directions
  std::vector<double> right, left;
  for (double z : sol.zs) (z >= 0.0 ? right : left).push_back(z);
  std::sort(left.begin(), left.end(), std::greater<double>());

  auto run = [&](cplx u0, cplx du0, std::vector<cplx>& u_all, std::vector<cplx>& du_all) {
    std::vector<cplx> u, du;
    if (!right.empty()) {
      integrate_linear2_complex(op.h33(), c1, c0, 0.0, u0, du0, right, u, du, tol);
      std::size_t off = left.size();
      for (std::size_t i = 0; i < right.size(); ++i) {
        u_all[off + i] = u[i];
        du_all[off + i] = du[i];
      }
    }
    if (!left.empty()) {
      integrate_linear2_complex(op.h33(), c1, c0, 0.0, u0, du0, left, u, du, tol);
      for (std::size_t i = 0; i < left.size(); ++i) {
        u_all[left.size() - 1 - i] = u[i];
        du_all[left.size() - 1 - i] = du[i];
      }
    }
  };
  run(init.P0, init.dP0, sol.P, sol.dP);
  run(init.Q0, init.dQ0, sol.Q, sol.dQ);
  // second derivatives from the equation itself
  sol.ddP.resize(n_samples);
  sol.ddQ.resize(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    double z = sol.zs[i];
    sol.ddP[i] = -(c1(z) * sol.dP[i] + c0(z) * sol.P[i]) / op.h33();
    sol.ddQ[i] = -(c1(z) * sol.dQ[i] + c0(z) * sol.Q[i]) / op.h33();
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Box quantization
// ---------------------------------------------------------------------------

namespace {

// Extend the box on each side until either the WKB decay margin is reached
// (classically forbidden side) or the cap L is hit (continuum side).
BoxDomain choose_box(const FiberOperator& op, double lambda_min, double L, double efolds) {
  // Wall placement is tightest for the most deeply bound level in the
  // window (its turning point sits closest to the wall), so accumulate the
  // WKB decay rate sqrt((V - |lambda_min|)/h33) beyond that turning point.
  auto side = [&](double dir) {
    double z = 0.0, acc = 0.0;
    const double step = 0.25;
    auto rate = [&](double zz) {
      return std::sqrt(std::max(0.0, (op.potential(zz) + lambda_min) / op.h33()));
    };
    double prev = rate(0.0);
    while (std::abs(z) < L) {
      double zn = z + dir * step;
      double g = rate(zn);
      acc += 0.5 * (prev + g) * step;
      prev = g;
      z = zn;
      if (acc >= efolds) break;
    }
    return std::abs(z);
  };
  BoxDomain box;
  box.zR = side(+1.0);
  box.zL = -side(-1.0);
  return box;
}

}  // namespace

double SpectralBasis1D::theta_at(double z) const {
  Vec2 avg = transpose(Phi_matrix(cls, z)) * kvec;
  return -(z / h33) * dot(avg, mixed);
}

double SpectralBasis1D::theta_slope_at(double z) const {
  Vec2 kap = transpose(F_matrix(cls, z)) * kvec;
  return -dot(kap, mixed) / h33;
}

double SpectralBasis1D::eval_u(std::size_t j, double z) const {
  if (z <= box.zL || z >= box.zR) return 0.0;
  return hermite_eval(zs, u[j], du[j], zs.front(), zs[1] - zs[0], z);
}

cplx SpectralBasis1D::eval_w(std::size_t j, double z) const {
  if (z <= box.zL || z >= box.zR) return cplx(0);
  double uv = hermite_eval(zs, u[j], du[j], zs.front(), zs[1] - zs[0], z);
  return std::polar(1.0, theta_at(z)) * uv;
}

cplx SpectralBasis1D::eval_dw(std::size_t j, double z) const {
  if (z <= box.zL || z >= box.zR) return cplx(0);
  double dzg = zs[1] - zs[0];
  double uv = hermite_eval(zs, u[j], du[j], zs.front(), dzg, z);
  double duv = hermite_eval_deriv(zs, u[j], du[j], zs.front(), dzg, z);
  return std::polar(1.0, theta_at(z)) * cplx(duv, theta_slope_at(z) * uv);
}

cplx SpectralBasis1D::pair(std::size_t j, const std::function<cplx(double)>& f) const {
  cplx acc(0);
  double dzg = zs[1] - zs[0];
  for (std::size_t i = 0; i < pair_grid.size(); ++i) {
    double z = pair_grid.x[i];
    double uv = hermite_eval(zs, u[j], du[j], zs.front(), dzg, z);
    acc += pair_grid.w[i] * uv * std::polar(1.0, -theta_at(z)) * f(z);
  }
  return acc;
}

SpectralBasis1D build_spectral_basis(const BianchiClass& cls, const InvariantMetric& h,
                                     const CrossSectionParam& k, const BasisOptions& opt) {
  SpectralBasis1D basis;
  basis.cls = cls;
  basis.k = k;
  basis.kvec = cross_section_point(cls, involution(cls, k));
  FiberOperator op(cls, h, basis.kvec);
  basis.h33 = op.h33();
  basis.theta0_slope = op.gauge_phase_slope0();
  basis.mixed = h.inv_mixed();
  basis.box = choose_box(op, opt.lambda_min, opt.L, opt.forbidden_efolds);

  const double a = op.h33();
  const double zL = basis.box.zL, zR = basis.box.zR;
  auto zero = [](double) { return 0.0; };
  std::vector<double> endpoint{zR};

  auto shoot = [&](double lambda, int* nodes, double rel_tol) {
    std::vector<double> u, du;
    auto c0eq = [&](double z) { return -(lambda + op.potential(z)); };
    int n = integrate_linear2_real(a, zero, c0eq, zL, 0.0, 1.0, endpoint, u, du, nodes != nullptr,
                                   {1e-12, rel_tol});
    if (nodes) *nodes = n;
    return u[0];
  };

  // top of the box spectrum: - min V over the box
  double minV = op.potential(0.0);
  for (double z = zL; z <= zR; z += 0.05) minV = std::min(minV, op.potential(z));
  double lam_hi = -minV - 1e-12;
  double lam_lo = opt.lambda_min;
  if (lam_lo >= lam_hi) return basis;

  int nodes_lo = 0, nodes_hi = 0;
  shoot(lam_hi, &nodes_hi, opt.scan_rel_tol);
  shoot(lam_lo, &nodes_lo, opt.scan_rel_tol);

  for (int target = nodes_hi; target < nodes_lo; ++target) {
    double lo = lam_lo, hi = lam_hi;
    for (int it = 0; it < 48; ++it) {
      double mid = 0.5 * (lo + hi);
      int nm = 0;
      shoot(mid, &nm, opt.scan_rel_tol);
      if (nm > target)
        lo = mid;
      else
        hi = mid;
      if (hi - lo < 1e-12 * (1.0 + std::abs(mid))) break;
    }
    // value bisection inside the bracket, full tolerance
    double flo = shoot(lo, nullptr, opt.ode_rel_tol);
    double fhi = shoot(hi, nullptr, opt.ode_rel_tol);
    double lambda;
    if (flo * fhi <= 0.0 && flo != fhi) {
      for (int it = 0; it < 64; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = shoot(mid, nullptr, opt.ode_rel_tol);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((flo < 0.0) != (fm < 0.0)) {
          hi = mid;
          fhi = fm;
        } else {
          lo = mid;
          flo = fm;
        }
        if (hi - lo < 1e-13 * (1.0 + std::abs(mid))) break;
      }
      lambda = 0.5 * (lo + hi);
    } else {
      lambda = 0.5 * (lo + hi);
    }
    BoxLevel lev;
    lev.lambda = lambda;
    basis.levels.push_back(lev);
  }

  // dense grid, gauge phase, normalized profiles, (P,Q) coefficients
  int n = opt.samples;
  basis.zs.resize(n);
  double dzg = (zR - zL) / (n - 1);
  for (int i = 0; i < n; ++i) basis.zs[i] = zL + i * dzg;
  basis.theta.resize(n);
  for (int i = 0; i < n; ++i) basis.theta[i] = op.gauge_phase(basis.zs[i]);
  basis.pair_grid = panel_grid(zL, zR, opt.pair_panels, opt.pair_order);

  basis.u.resize(basis.levels.size());
  basis.du.resize(basis.levels.size());
  for (std::size_t j = 0; j < basis.levels.size(); ++j) {
    auto& lev = basis.levels[j];
    auto c0eq = [&](double z) { return -(lev.lambda + op.potential(z)); };
    std::vector<double> uu, duu;
    integrate_linear2_real(a, zero, c0eq, zL, 0.0, 1.0, basis.zs, uu, duu, false,
                           {1e-12, opt.ode_rel_tol});
    // norm over the box via the pairing grid (Hermite interpolation)
    double nrm2 = 0.0;
    for (std::size_t i = 0; i < basis.pair_grid.size(); ++i) {
      double z = basis.pair_grid.x[i];
      double uv = hermite_eval(basis.zs, uu, duu, zL, dzg, z);
      nrm2 += basis.pair_grid.w[i] * uv * uv;
    }
    double inv_nrm = 1.0 / std::sqrt(nrm2);
    for (auto& v : uu) v *= inv_nrm;
    for (auto& v : duu) v *= inv_nrm;
    double u0 = hermite_eval(basis.zs, uu, duu, zL, dzg, 0.0);
    double du0 = hermite_eval_deriv(basis.zs, uu, duu, zL, dzg, 0.0);
    lev.alpha = u0;
    lev.beta = du0;
    lev.cP = cplx(u0, 0.0);
    lev.cQ = cplx(du0, basis.theta0_slope * u0);
    basis.u[j] = std::move(uu);
    basis.du[j] = std::move(duu);
  }
  return basis;
}

}  // namespace bianchi
