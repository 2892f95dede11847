#pragma once

// Dual-space structure for the Bianchi groups: null spaces V^0 = ker M^T,
// the coadjoint action k -> F(r)^{-T} k on R^2, per-class cross-sections
// through the generic orbits, the orbit-chart measure density rho(k,r),
// the Plancherel density nu-dot(k), and the involution on the parameter
// set realizing k0(neg(k)) = -k0(k).

#include <optional>
#include <string>
#include <vector>

#include "bianchi/group.hpp"
#include "bianchi/linalg.hpp"

namespace bianchi {

struct NullSpace {
  std::vector<Vec2> basis;  // 0, 1 or 2 vectors
  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(Vec2 v, double tol = 1e-12) const;
};

// Cross-section parameter. Layout per class:
//   II:        k1 in R\{0}
//   III:       (k1 in R, k2 in {-1,1})
//   IV:        (k1 >= 0, k2 in {-1,1})
//   V, VI q<0: angle k1 in [0, 2*pi)
//   VI q>0:    (k1 >= 0, k2 in {0,1,2,3})
//   VII:       k1 in (-e^{pi p}, -1] U [1, e^{pi p})
struct CrossSectionParam {
  double k1 = 0.0;
  int k2 = 0;
};

struct OrbitCoords {
  CrossSectionParam k;
  double r = 0.0;
};

NullSpace null_space(const BianchiClass& cls);

// F^perp(r) = F(r)^{-T} = F(-r)^T.
Mat2 coadjoint_matrix(const BianchiClass& cls, double r);
Vec2 coadjoint_action(const BianchiClass& cls, double r, Vec2 kvec);

bool in_parameter_set(const BianchiClass& cls, const CrossSectionParam& k, double tol = 0.0);

// k0(k), the point of the cross-section. Throws if k is outside the
// parameter set.
Vec2 cross_section_point(const BianchiClass& cls, const CrossSectionParam& k);

// Inverse chart: the unique (k, r) with F^perp(r) k0(k) = kvec. Closed form
// for II, III, V, VI q>0, VII; a bracketed monotone root find for IV and
// VI q<0. Throws for kvec in V^0.
OrbitCoords orbit_coordinates(const BianchiClass& cls, Vec2 kvec);

// rho(k,r) = |det d(kvec)/d(k,r)|.
double measure_density(const BianchiClass& cls, const CrossSectionParam& k, double r);

// nu-dot(k); satisfies rho(k,r) = nu-dot(k) / det F(r).
double plancherel_density(const BianchiClass& cls, const CrossSectionParam& k);

// neg(k): the parameter-set involution with k0(neg(k)) = -k0(k).
CrossSectionParam involution(const BianchiClass& cls, const CrossSectionParam& k);

std::string format_param(const BianchiClass& cls, const CrossSectionParam& k);

}  // namespace bianchi
