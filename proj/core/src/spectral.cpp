#include "bianchi/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace bianchi {

Mat3 left_invariant_fields(const BianchiClass& cls, const GroupElement& point) {
  return from_blocks(transpose(F_matrix(cls, point.z)), {0, 0}, {0, 0}, 1.0);
}

double scalar_curvature(const BianchiClass& cls, const InvariantMetric& h) {
  Mat2 M = structure_matrix(cls);
  Mat2 A = h.block2();
  Mat2 S0 = 0.5 * (M + inverse(A) * transpose(M) * A);
  double t = trace(S0);
  double t2 = trace(S0 * S0);
  return -h.inv33() * (t2 + t * t);
}

Spectrum spectrum(const BianchiClass& cls, const InvariantMetric& h) {
  if (cls.tag == ClassTag::I) return {0.0};
  return {scalar_curvature(cls, h)};
}

OscillatorCoefficients oscillator_coefficients(const BianchiClass& cls, const InvariantMetric& h,
                                               const CrossSectionParam& k, double r,
                                               double lambda) {
  Vec2 kneg = cross_section_point(cls, involution(cls, k));
  auto op = std::make_shared<FiberOperator>(cls, h, kneg);
  OscillatorCoefficients co;
  co.h33 = op->h33();
  co.c1 = [op, r](double z) { return cplx(0.0, op->b_coeff(z - r)); };
  co.c0 = [op, r, lambda](double z) { return -(lambda + op->c_coeff(z - r)); };
  return co;
}

OscillatorSolution solve_oscillator(const BianchiClass& cls, const InvariantMetric& h,
                                    const CrossSectionParam& k, double lambda, double z_lo,
                                    double z_hi, int n_samples, const OscillatorInit& init,
                                    double ode_rel_tol) {
  Vec2 kneg = cross_section_point(cls, involution(cls, k));
  FiberOperator op(cls, h, kneg);
  OscillatorSolution sol = solve_oscillator_fiber(op, lambda, z_lo, z_hi, n_samples, init,
                                                  ode_rel_tol);
  sol.k = k;
  return sol;
}

Eigenfunction::Eigenfunction(const BianchiClass& cls, const InvariantMetric& h,
                             const EigenParams& par, double z_lo, double z_hi, int n_samples)
    : cls_(cls), par_(par) {
  double haar = h.sqrt_det();
  if (cls.tag == ClassTag::I) {
    plane_wave_ = true;
    plane_k_ = par.wave_vector;
    amp_ = 1.0 / std::sqrt(haar);
    return;
  }
  Vec2 k0neg = cross_section_point(cls, involution(cls, par.k));
  phase_covector_ = coadjoint_action(cls, par.r, k0neg);
  amp_ = det_F(cls, -par.r) / std::sqrt(haar);
  sol_ = std::make_shared<OscillatorSolution>(
      solve_oscillator(cls, h, par.k, par.lambda, z_lo, z_hi, n_samples));
}

cplx Eigenfunction::operator()(const GroupElement& x) const {
  if (plane_wave_)
    return amp_ * std::polar(1.0, plane_k_.x * x.x + plane_k_.y * x.y + plane_k_.z * x.z);
  cplx prof = par_.s >= 0 ? sol_->eval_P(x.z - par_.r) : sol_->eval_Q(x.z - par_.r);
  return amp_ * std::polar(1.0, phase_covector_.x * x.x + phase_covector_.y * x.y) * prof;
}

namespace {

using Field = std::function<cplx(const GroupElement&)>;

GroupElement shifted(const GroupElement& x, int axis, double d) {
  GroupElement y = x;
  if (axis == 0) y.x += d;
  else if (axis == 1) y.y += d;
  else y.z += d;
  return y;
}

cplx directional1(const Field& f, const GroupElement& x, int axis, double h) {
  return (f(shifted(x, axis, -2 * h)) - 8.0 * f(shifted(x, axis, -h)) +
          8.0 * f(shifted(x, axis, h)) - f(shifted(x, axis, 2 * h))) /
         (12.0 * h);
}

cplx second_same(const Field& f, const GroupElement& x, int axis, double h) {
  return (-f(shifted(x, axis, -2 * h)) + 16.0 * f(shifted(x, axis, -h)) - 30.0 * f(x) +
          16.0 * f(shifted(x, axis, h)) - f(shifted(x, axis, 2 * h))) /
         (12.0 * h * h);
}

cplx second_mixed(const Field& f, const GroupElement& x, int a, int b, double h) {
  auto g = [&](const GroupElement& y) { return directional1(f, y, b, h); };
  return (g(shifted(x, a, -2 * h)) - 8.0 * g(shifted(x, a, -h)) + 8.0 * g(shifted(x, a, h)) -
          g(shifted(x, a, 2 * h))) /
         (12.0 * h);
}

cplx laplacian_once(const BianchiClass& cls, const InvariantMetric& hm, const Field& f,
                    const GroupElement& x, double h) {
  Mat3 B = left_invariant_fields(cls, x);
  Mat3 C = transpose(B) * hm.h_inv() * B;
  // drift from the z-dependence of the frame: sum_j h^{3j} (M^T F^T(z))_{jm}
  Mat2 MtFt = transpose(structure_matrix(cls)) * transpose(F_matrix(cls, x.z));
  Vec2 hb = hm.inv_mixed();
  Vec2 drift = {hb.x * MtFt.a + hb.y * MtFt.c, hb.x * MtFt.b + hb.y * MtFt.d};

  cplx acc(0);
  for (int l = 0; l < 3; ++l) {
    acc += C(l, l) * second_same(f, x, l, h);
    for (int m = l + 1; m < 3; ++m) acc += 2.0 * C(l, m) * second_mixed(f, x, l, m, h);
  }
  acc += drift.x * directional1(f, x, 0, h);
  acc += drift.y * directional1(f, x, 1, h);
  return acc;
}

}  // namespace

cplx laplacian_apply_fd(const BianchiClass& cls, const InvariantMetric& h, const Field& field,
                        const GroupElement& x, double step) {
  cplx v1 = laplacian_once(cls, h, field, x, step);
  cplx v2 = laplacian_once(cls, h, field, x, step / 2.0);
  return (16.0 * v2 - v1) / 15.0;
}

}  // namespace bianchi
