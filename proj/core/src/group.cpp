#include "bianchi/group.hpp"

#include <cmath>

namespace bianchi {

BianchiClass BianchiClass::make(ClassTag t, double param) {
  BianchiClass c;
  c.tag = t;
  if (t == ClassTag::VI) {
    if (!(param > -1.0 && param <= 1.0))
      throw std::invalid_argument("class VI requires q in (-1, 1]");
    c.q = param;
  } else if (t == ClassTag::VII) {
    if (!(param >= 0.0)) throw std::invalid_argument("class VII requires p >= 0");
    c.p = param;
  }
  return c;
}

BianchiClass BianchiClass::parse(const std::string& name, double q, double p) {
  if (name == "I") return make(ClassTag::I);
  if (name == "II") return make(ClassTag::II);
  if (name == "III") return make(ClassTag::III);
  if (name == "IV") return make(ClassTag::IV);
  if (name == "V") return make(ClassTag::V);
  if (name == "VI") return make(ClassTag::VI, q);
  if (name == "VII") return make(ClassTag::VII, p);
  throw std::invalid_argument("unknown Bianchi class: " + name);
}

std::string BianchiClass::name() const {
  switch (tag) {
    case ClassTag::I: return "I";
    case ClassTag::II: return "II";
    case ClassTag::III: return "III";
    case ClassTag::IV: return "IV";
    case ClassTag::V: return "V";
    case ClassTag::VI: return "VI";
    case ClassTag::VII: return "VII";
  }
  return "?";
}

Mat2 structure_matrix(const BianchiClass& cls) {
  switch (cls.tag) {
    case ClassTag::I: return Mat2::zero();
    case ClassTag::II: return {0, 0, 1, 0};
    case ClassTag::III: return {1, 0, 0, 0};
    case ClassTag::IV: return {1, 0, 1, 1};
    case ClassTag::V: return Mat2::identity();
    case ClassTag::VI: return {1, 0, 0, -cls.q};
    case ClassTag::VII: return {cls.p, -1, 1, cls.p};
  }
  return Mat2::zero();
}

double trace_M(const BianchiClass& cls) {
  switch (cls.tag) {
    case ClassTag::I:
    case ClassTag::II: return 0.0;
    case ClassTag::III: return 1.0;
    case ClassTag::IV:
    case ClassTag::V: return 2.0;
    case ClassTag::VI: return 1.0 - cls.q;
    case ClassTag::VII: return 2.0 * cls.p;
  }
  return 0.0;
}

Mat2 F_matrix(const BianchiClass& cls, double z) {
  switch (cls.tag) {
    case ClassTag::I: return Mat2::identity();
    case ClassTag::II: return {1, 0, z, 1};
    case ClassTag::III: return {std::exp(z), 0, 0, 1};
    case ClassTag::IV: {
      double e = std::exp(z);
      return {e, 0, z * e, e};
    }
    case ClassTag::V: {
      double e = std::exp(z);
      return {e, 0, 0, e};
    }
    case ClassTag::VI: return {std::exp(z), 0, 0, std::exp(-cls.q * z)};
    case ClassTag::VII: {
      double e = std::exp(cls.p * z), c = std::cos(z), s = std::sin(z);
      return {e * c, -e * s, e * s, e * c};
    }
  }
  return Mat2::identity();
}

double det_F(const BianchiClass& cls, double z) { return std::exp(z * trace_M(cls)); }

namespace {

// phi(w) = (e^w - 1)/w = sum w^m/(m+1)!; expm1 keeps the closed form exact.
double phi1(double w) {
  if (std::abs(w) < 1e-8) return 1.0 + w / 2.0;
  return std::expm1(w) / w;
}

// phi'(w) = (e^w (w-1) + 1)/w^2 = sum (m+1) w^m/(m+2)!. The closed form
// cancels like 3e-16/w^2, so stay on the series until |w| ~ 0.5.
double phi1p(double w) {
  if (std::abs(w) < 0.5) {
    double term = 0.5, sum = 0.5;
    for (int m = 1; m <= 40; ++m) {
      term *= w * (m + 1.0) / (m * (m + 2.0));
      sum += term;
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }
  return (std::exp(w) * (w - 1.0) + 1.0) / (w * w);
}

cplx phi1c(cplx w) {
  if (std::abs(w) < 0.5) {
    cplx term(1.0, 0.0), sum(1.0, 0.0);
    for (int m = 1; m <= 40; ++m) {
      term *= w / static_cast<double>(m + 1);
      sum += term;
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }
  return (std::exp(w) - 1.0) / w;
}

}  // namespace

Mat2 Phi_matrix(const BianchiClass& cls, double z) {
  switch (cls.tag) {
    case ClassTag::I: return Mat2::identity();
    case ClassTag::II: return {1, 0, z / 2.0, 1};
    case ClassTag::III: return {phi1(z), 0, 0, 1};
    case ClassTag::IV: return {phi1(z), 0, z * phi1p(z), phi1(z)};
    case ClassTag::V: {
      double f = phi1(z);
      return {f, 0, 0, f};
    }
    case ClassTag::VI: return {phi1(z), 0, 0, phi1(-cls.q * z)};
    case ClassTag::VII: {
      cplx f = phi1c(cplx(cls.p, 1.0) * z);
      return {f.real(), -f.imag(), f.imag(), f.real()};
    }
  }
  return Mat2::identity();
}

Mat2 D_matrix(const BianchiClass& cls, double z) {
  Mat2 M = structure_matrix(cls);
  // Series sum_{m>=1} (1-m)/m! (-zM)^{m-1} for small z; else the closed form
  // D = F(-z) Phi(z) - F(-z) = F(-z)(Phi(z) - 1).
  if (std::abs(z) < 1e-3) {
    Mat2 term = Mat2::identity();  // (-zM)^{m-1}, m = 1
    Mat2 acc = Mat2::zero();
    double factorial = 1.0;
    for (int m = 1; m <= 30; ++m) {
      factorial *= m;
      double coeff = (1.0 - m) / factorial;
      Mat2 contrib = coeff * term;
      acc = acc + contrib;
      if (frobenius(contrib) < 1e-16 && m > 2) break;
      term = (-z) * (term * M);
    }
    return acc;
  }
  Mat2 Fneg = F_matrix(cls, -z);
  return Fneg * (Phi_matrix(cls, z) - Mat2::identity());
}

GroupElement multiply(const BianchiClass& cls, const GroupElement& g, const GroupElement& h) {
  Vec2 xy = g.xy() + F_matrix(cls, g.z) * h.xy();
  return {xy.x, xy.y, g.z + h.z};
}

GroupElement inverse(const BianchiClass& cls, const GroupElement& g) {
  Vec2 xy = -(F_matrix(cls, -g.z) * g.xy());
  return {xy.x, xy.y, -g.z};
}

GroupElement exp_map(const BianchiClass& cls, const AlgebraElement& a) {
  Vec2 xy = Phi_matrix(cls, a.Z) * a.xy();
  return {xy.x, xy.y, a.Z};
}

AlgebraElement log_map(const BianchiClass& cls, const GroupElement& g) {
  Mat2 Phi = Phi_matrix(cls, g.z);
  double d = det(Phi);
  if (std::abs(d) < 1e-14)
    throw std::domain_error("log_map: exp is singular at this z (class VII p=0, z in 2*pi*Z)");
  Vec2 XY = inverse(Phi) * g.xy();
  return {XY.x, XY.y, g.z};
}

AlgebraElement bracket(const BianchiClass& cls, const AlgebraElement& a, const AlgebraElement& b) {
  Mat2 M = structure_matrix(cls);
  Vec2 v = a.Z * (M * b.xy()) - b.Z * (M * a.xy());
  return {v.x, v.y, 0.0};
}

Mat3 adjoint_Ad(const BianchiClass& cls, const GroupElement& g) {
  Mat2 M = structure_matrix(cls);
  Vec2 col = -(M * g.xy());
  return from_blocks(F_matrix(cls, g.z), col, {0, 0}, 1.0);
}

Mat3 adjoint_ad(const BianchiClass& cls, const AlgebraElement& a) {
  Mat2 M = structure_matrix(cls);
  Vec2 col = -(M * a.xy());
  return from_blocks(a.Z * M, col, {0, 0}, 0.0);
}

double haar_density(const BianchiClass& cls, const GroupElement& g, double haar_constant) {
  if (!(haar_constant > 0.0)) throw std::invalid_argument("Haar constant must be positive");
  return haar_constant * det_F(cls, -g.z);
}

double modular_function(const BianchiClass& cls, const GroupElement& g) {
  return det_F(cls, -g.z);
}

Mat3 matrix_realization(const BianchiClass& cls, const GroupElement& g) {
  return from_blocks(F_matrix(cls, g.z), g.xy(), {0, 0}, 1.0);
}

Mat3 algebra_realization(const BianchiClass& cls, const AlgebraElement& a) {
  Mat2 M = structure_matrix(cls);
  return from_blocks(a.Z * M, a.xy(), {0, 0}, 0.0);
}

}  // namespace bianchi
