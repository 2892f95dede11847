#pragma once

// The 1-D fiber of the Laplacian over a covector k: the generalized
// oscillator operator
//   D_k = h^33 d^2/dz^2 + i b(z) d/dz - c(z),
//   b(z) = 2 kappa(z).(h^13,h^23),
//   c(z) = kappa(z).H2 kappa(z) - i (h^13,h^23).kappa'(z),
//   kappa(z) = F(z)^T k,
// which satisfies D_k f(z) = e^{-i<k,x>} Delta_h [ e^{i<k,x>} f(z) ] and is
// symmetric on L^2(R, dz). The gauge substitution u = e^{i theta(z)} v with
// theta' = -b/(2 h^33) reduces D_k to the real Schroedinger form
//   h^33 v'' - V(z) v,  V(z) = kappa(z) . A^{-1} kappa(z),
// with A the 2x2 block of the metric. Dirichlet quantization of that form
// on a box supplies a discrete resolution of the identity used by the
// Fourier transform.

#include <array>
#include <functional>
#include <vector>

#include "bianchi/dual.hpp"
#include "bianchi/group.hpp"
#include "bianchi/linalg.hpp"
#include "bianchi/metric.hpp"
#include "bianchi/quadrature.hpp"

namespace bianchi {

class FiberOperator {
 public:
  FiberOperator(const BianchiClass& cls, const InvariantMetric& h, Vec2 kvec);

  Vec2 kappa(double z) const;
  double potential(double z) const;       // V(z) >= 0
  double b_coeff(double z) const;         // real
  cplx c_coeff(double z) const;           // complex zeroth-order coefficient
  double gauge_phase(double z) const;     // theta(z), theta(0) = 0
  double gauge_phase_slope0() const;      // theta'(0)
  double h33() const { return h33_; }
  Vec2 kvec() const { return kvec_; }
  const BianchiClass& cls() const { return cls_; }

  // D_k applied to a callable by 4th-order finite differences with one
  // Richardson level.
  cplx apply(const std::function<cplx(double)>& f, double z, double step = 1e-3) const;

 private:
  BianchiClass cls_;
  double h33_;
  Vec2 kvec_;
  Mat2 A_inv_, H2_;
  Vec2 mixed_;
};

// Dense sampled solution pair (P, Q) of D_k P = lambda P with
// P(0)=1, P'(0)=0, Q(0)=0, Q'(0)=1, on a uniform grid. Second derivatives
// are filled from the equation itself, so evaluation between samples is
// quintic Hermite.
struct OscillatorSolution {
  double z0 = 0.0, dz = 0.0;
  std::vector<double> zs;
  std::vector<cplx> P, dP, ddP, Q, dQ, ddQ;
  double lambda = 0.0;
  CrossSectionParam k;

  cplx eval_P(double z) const;
  cplx eval_Q(double z) const;
  cplx eval_dP(double z) const;
  cplx eval_dQ(double z) const;
  // s = +1 -> P branch, s = -1 -> Q branch
  cplx eval(int s, double z) const { return s >= 0 ? eval_P(z) : eval_Q(z); }
  cplx wronskian(std::size_t i) const { return P[i] * dQ[i] - dP[i] * Q[i]; }
};

struct OscillatorInit {
  cplx P0{1.0, 0.0}, dP0{0.0, 0.0};
  cplx Q0{0.0, 0.0}, dQ0{1.0, 0.0};
};

OscillatorSolution solve_oscillator_fiber(const FiberOperator& op, double lambda, double z_lo,
                                          double z_hi, int n_samples,
                                          const OscillatorInit& init = {},
                                          double ode_rel_tol = 1e-10);

// ------------------------------------------------------------------
// Dirichlet box quantization of the fiber operator
// ------------------------------------------------------------------

struct BoxDomain {
  double zL = -12.0, zR = 12.0;
};

struct BoxLevel {
  double lambda = 0.0;
  // w_j = cP * P + cQ * Q (the L^2(dz)-normalized box eigenfunction of D_k)
  cplx cP{0.0, 0.0}, cQ{0.0, 0.0};
  // real gauge profile: u_j = alpha v_c + beta v_s at the anchor z = 0
  double alpha = 0.0, beta = 0.0;
};

struct BasisOptions {
  double lambda_min = -40.0;   // bottom of the searched spectral window
  double L = 12.0;             // half-width cap on the continuum side
  double forbidden_efolds = 14.0;  // WKB decay margin on classically forbidden sides
  int samples = 1024;          // dense grid resolution across the box
  int pair_order = 16;         // GL order for pairings
  int pair_panels = 48;
  double ode_rel_tol = 1e-10;
  double scan_rel_tol = 1e-8;  // looser tolerance during eigenvalue scans
};

// A discrete spectral basis for one cross-section parameter k: levels
// lambda_j with normalized eigenfunctions w_j expressed in the (P,Q) basis,
// plus dense samples of the real gauge solutions for fast evaluation.
struct SpectralBasis1D {
  BianchiClass cls;
  CrossSectionParam k;
  Vec2 kvec;            // k0(neg k), the fiber covector entering the ODE
  BoxDomain box;
  double h33 = 1.0;
  double theta0_slope = 0.0;
  Vec2 mixed;           // (h^13, h^23), for the closed-form gauge phase
  std::vector<BoxLevel> levels;

  std::vector<double> zs;               // uniform dense grid on [zL, zR]
  std::vector<double> theta;            // gauge phase on the grid
  // per level: real gauge eigenfunction samples (normalized) and derivative
  std::vector<std::vector<double>> u, du;
  PanelGrid pair_grid;                  // quadrature for pairings on the box

  std::size_t size() const { return levels.size(); }
  double theta_at(double z) const;
  double theta_slope_at(double z) const;
  double eval_u(std::size_t j, double z) const;   // real gauge profile
  // normalized box eigenfunction w_j(z) of D_k (0 outside the box)
  cplx eval_w(std::size_t j, double z) const;
  cplx eval_dw(std::size_t j, double z) const;
  // <w_j, f> = int conj(w_j) f dz over the box
  cplx pair(std::size_t j, const std::function<cplx(double)>& f) const;
};

SpectralBasis1D build_spectral_basis(const BianchiClass& cls, const InvariantMetric& h,
                                     const CrossSectionParam& k, const BasisOptions& opt = {});

}  // namespace bianchi
