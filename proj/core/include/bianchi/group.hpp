#pragma once

// The seven solvable Bianchi groups realized as semidirect products
// R^2 x_F R on the global chart (x, y, z): multiplication
//   (x,y,z)(x',y',z') = ((x,y) + F(z)(x',y'), z+z'),  F(z) = exp(z*M),
// together with exp/log, the adjoint representations, the Haar density
// and the modular function.

#include <stdexcept>
#include <string>

#include "bianchi/linalg.hpp"

namespace bianchi {

enum class ClassTag { I, II, III, IV, V, VI, VII };

// Group class with its continuous parameter: q in (-1,1] for VI, p >= 0
// for VII. VI with q = 0 coincides with III and is routed to the III
// formulas wherever the generic VI expression degenerates.
struct BianchiClass {
  ClassTag tag = ClassTag::I;
  double q = 0.0;  // VI only
  double p = 0.0;  // VII only

  static BianchiClass make(ClassTag t, double param = 0.0);
  static BianchiClass parse(const std::string& name, double q, double p);

  bool is_type_vi_like_iii() const { return tag == ClassTag::VI && q == 0.0; }
  std::string name() const;
};

struct GroupElement {
  double x = 0.0, y = 0.0, z = 0.0;
  Vec2 xy() const { return {x, y}; }
};

struct AlgebraElement {
  double X = 0.0, Y = 0.0, Z = 0.0;
  Vec2 xy() const { return {X, Y}; }
};

inline GroupElement group_identity() { return {}; }

// Structure matrix M (the derivation f(1) acting on the abelian ideal).
Mat2 structure_matrix(const BianchiClass& cls);

// F(z) = exp(z*M), in closed form per class.
Mat2 F_matrix(const BianchiClass& cls, double z);

// det F(z) = exp(z * tr M).
double det_F(const BianchiClass& cls, double z);
double trace_M(const BianchiClass& cls);

// Phi(z) = \int_0^1 F(t z) dt = (F(z) - 1)(zM)^{-1}; exp((X,Y,Z)) =
// (Phi(Z)(X,Y), Z). Invertible for all z except VII p=0 at z in 2*pi*Z\{0}.
Mat2 Phi_matrix(const BianchiClass& cls, double z);

// D(z) with 1 + F(z) D(z) = Phi(z); removable singularity at z = 0 is
// evaluated by the defining series for small |z|.
Mat2 D_matrix(const BianchiClass& cls, double z);

GroupElement multiply(const BianchiClass& cls, const GroupElement& g, const GroupElement& h);
GroupElement inverse(const BianchiClass& cls, const GroupElement& g);

GroupElement exp_map(const BianchiClass& cls, const AlgebraElement& a);
AlgebraElement log_map(const BianchiClass& cls, const GroupElement& g);

// Semidirect bracket [(a,b),(a',b')] = (f(b)a' - f(b')a, 0).
AlgebraElement bracket(const BianchiClass& cls, const AlgebraElement& a, const AlgebraElement& b);

Mat3 adjoint_Ad(const BianchiClass& cls, const GroupElement& g);
Mat3 adjoint_ad(const BianchiClass& cls, const AlgebraElement& a);

// Left Haar density: dg = h * det F(-g_z) dx dy dz.
double haar_density(const BianchiClass& cls, const GroupElement& g, double haar_constant);

// Modular function Delta(g) = det Ad_{g^{-1}} = det F(-g_z).
double modular_function(const BianchiClass& cls, const GroupElement& g);

// Faithful 3x3 matrix realization g -> [[F(z), (x,y)^T],[0,1]] and its
// algebra realization (X,Y,Z) -> [[Z M, (X,Y)^T],[0,0]].
Mat3 matrix_realization(const BianchiClass& cls, const GroupElement& g);
Mat3 algebra_realization(const BianchiClass& cls, const AlgebraElement& a);

}  // namespace bianchi
