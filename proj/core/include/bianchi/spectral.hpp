#pragma once

// Left-invariant fields, the group Laplacian Delta_h = sum h^{ij} X_i X_j,
// scalar curvature of the left-invariant metric, and the Laplacian
// eigenfunctions zeta_{k,lambda,r,s} built from the 1-D oscillator
// solutions.

#include <functional>
#include <memory>

#include "bianchi/dual.hpp"
#include "bianchi/group.hpp"
#include "bianchi/metric.hpp"
#include "bianchi/oscillator.hpp"

namespace bianchi {

// Rows are the coordinate components of the left-invariant frame
// (X1, X2, X3) at the point: [[F(z)^T, 0], [0, 1]].
Mat3 left_invariant_fields(const BianchiClass& cls, const GroupElement& point);

// Scalar curvature of the left-invariant metric h: with A the 2x2 metric
// block, S = (1/2) sqrt(h^33) (M + A^{-1} M^T A) and
// R_h = -Tr[S^2] - (Tr S)^2. Constant over the group.
double scalar_curvature(const BianchiClass& cls, const InvariantMetric& h);

struct Spectrum {
  double sup;  // R_h for classes II-VII, 0 for class I; spectrum is (-inf, sup]
};
Spectrum spectrum(const BianchiClass& cls, const InvariantMetric& h);

// Coefficients of the oscillator equation for the fiber over
// F^perp(r) k0(neg k):
//   h33 P'' + c1(z) P' + c0(z; lambda) P = 0.
struct OscillatorCoefficients {
  double h33 = 1.0;
  std::function<cplx(double)> c1;
  std::function<cplx(double)> c0;
};
OscillatorCoefficients oscillator_coefficients(const BianchiClass& cls, const InvariantMetric& h,
                                               const CrossSectionParam& k, double r,
                                               double lambda);

// Solves the fiber problem at r = 0 on [z_lo, z_hi]; shifts in r are taken
// by evaluating at z - r downstream.
OscillatorSolution solve_oscillator(const BianchiClass& cls, const InvariantMetric& h,
                                    const CrossSectionParam& k, double lambda, double z_lo,
                                    double z_hi, int n_samples, const OscillatorInit& init = {},
                                    double ode_rel_tol = 1e-10);

// Spectral parameter of one eigenfunction. Class I eigenfunctions are the
// plane waves labeled by wave_vector; all other classes use (k, lambda, r, s).
struct EigenParams {
  CrossSectionParam k;
  double lambda = 0.0;
  double r = 0.0;
  int s = +1;  // +1 -> P branch, -1 -> Q branch
  Vec3 wave_vector;  // class I only
};

// zeta_{k,lambda,r,s}(x) = h^{-1/2} det F(-r)
//     exp(i <F_perp(r) k0(neg k), (x,y)>) P_{lambda,k,s}(z - r),
// an eigenfunction of Delta_h with eigenvalue lambda. The oscillator
// solution must cover z - r.
class Eigenfunction {
 public:
  Eigenfunction(const BianchiClass& cls, const InvariantMetric& h, const EigenParams& par,
                double z_lo = -14.0, double z_hi = 14.0, int n_samples = 2048);

  cplx operator()(const GroupElement& x) const;
  const EigenParams& params() const { return par_; }
  const OscillatorSolution& profile() const { return *sol_; }

 private:
  BianchiClass cls_;
  EigenParams par_;
  Vec2 phase_covector_;  // F_perp(r) k0(neg k)
  double amp_ = 1.0;     // h^{-1/2} det F(-r)
  bool plane_wave_ = false;  // class I
  Vec3 plane_k_;
  std::shared_ptr<OscillatorSolution> sol_;
};

// Delta_h applied to a callable at x by exact frame coefficients and
// finite differences of the callable (4th order, one Richardson level).
cplx laplacian_apply_fd(const BianchiClass& cls, const InvariantMetric& h,
                        const std::function<cplx(const GroupElement&)>& field,
                        const GroupElement& x, double step = 1e-3);

}  // namespace bianchi
