#include "bianchi/dual.hpp"

#include <cmath>
#include <sstream>

namespace bianchi {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

// Rotation by k2 * pi/2 applied to (1, k1): the four-ray cross-section of
// class VI with q > 0.
Vec2 quarter_turn(double k1, int k2) {
  switch (((k2 % 4) + 4) % 4) {
    case 0: return {1.0, k1};
    case 1: return {-k1, 1.0};
    case 2: return {-1.0, -k1};
    default: return {k1, -1.0};
  }
}

// Monotone 1-D root find: f strictly monotone, root bracketed by expanding
// around r0. Bisection to 1e-13 of the bracket, then a few Newton steps.
template <typename Fn, typename Dn>
double solve_monotone(Fn f, Dn df, double r0) {
  double lo = r0, hi = r0;
  double flo = f(lo), fhi = f(hi);
  double step = 1.0;
  for (int i = 0; i < 200 && flo * fhi > 0.0; ++i) {
    lo -= step;
    hi += step;
    step *= 1.5;
    flo = f(lo);
    fhi = f(hi);
  }
  if (flo * fhi > 0.0) throw std::domain_error("orbit_coordinates: bracketing failed");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) { lo = hi = mid; break; }
    if (flo * fm <= 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
    if (hi - lo < 1e-13 * (1.0 + std::abs(mid))) break;
  }
  double r = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    double d = df(r);
    if (d == 0.0) break;
    r -= f(r) / d;
  }
  return r;
}

}  // namespace

bool NullSpace::contains(Vec2 v, double tol) const {
  if (basis.empty()) return norm(v) <= tol;
  if (basis.size() == 2) return true;
  // one-dimensional: v parallel to basis[0]
  double cross = v.x * basis[0].y - v.y * basis[0].x;
  return std::abs(cross) <= tol * (1.0 + norm(v));
}

NullSpace null_space(const BianchiClass& cls) {
  NullSpace ns;
  switch (cls.tag) {
    case ClassTag::I:
      ns.basis = {{1, 0}, {0, 1}};
      break;
    case ClassTag::II:
      ns.basis = {{1, 0}};
      break;
    case ClassTag::III:
      ns.basis = {{0, 1}};
      break;
    case ClassTag::VI:
      if (cls.q == 0.0) ns.basis = {{0, 1}};
      break;
    default:
      break;
  }
  return ns;
}

Mat2 coadjoint_matrix(const BianchiClass& cls, double r) {
  return transpose(F_matrix(cls, -r));
}

Vec2 coadjoint_action(const BianchiClass& cls, double r, Vec2 kvec) {
  return coadjoint_matrix(cls, r) * kvec;
}

bool in_parameter_set(const BianchiClass& cls, const CrossSectionParam& k, double tol) {
  switch (cls.tag) {
    case ClassTag::I:
      return false;  // no generic orbits
    case ClassTag::II:
      return std::abs(k.k1) > tol;
    case ClassTag::III:
      return k.k2 == 1 || k.k2 == -1;
    case ClassTag::IV:
      return k.k1 >= -tol && (k.k2 == 1 || k.k2 == -1);
    case ClassTag::V:
      return k.k1 >= -tol && k.k1 < kTwoPi + tol;
    case ClassTag::VI:
      if (cls.q == 0.0) return k.k2 == 1 || k.k2 == -1;       // III coincidence
      if (cls.q < 0.0) return k.k1 >= -tol && k.k1 < kTwoPi + tol;
      return k.k1 >= -tol && k.k2 >= 0 && k.k2 <= 3;
    case ClassTag::VII: {
      double lim = std::exp(M_PI * cls.p);
      double a = std::abs(k.k1);
      return a >= 1.0 - tol && a < lim + tol && (cls.p > 0.0 || a <= 1.0 + tol);
    }
  }
  return false;
}

Vec2 cross_section_point(const BianchiClass& cls, const CrossSectionParam& k) {
  if (!in_parameter_set(cls, k, 1e-12))
    throw std::invalid_argument("cross_section_point: parameter outside the set for class " +
                                cls.name());
  switch (cls.tag) {
    case ClassTag::II:
      return {0.0, k.k1};
    case ClassTag::III:
      return {static_cast<double>(k.k2), k.k1};
    case ClassTag::IV:
      return {static_cast<double>(k.k2), k.k2 * k.k1};
    case ClassTag::V:
      return {std::cos(k.k1), std::sin(k.k1)};
    case ClassTag::VI:
      if (cls.q == 0.0) return {static_cast<double>(k.k2), k.k1};
      if (cls.q < 0.0) return {std::cos(k.k1), std::sin(k.k1)};
      return quarter_turn(k.k1, k.k2);
    case ClassTag::VII:
      return {k.k1, 0.0};
    default:
      throw std::invalid_argument("class I has no generic cross-section");
  }
}

OrbitCoords orbit_coordinates(const BianchiClass& cls, Vec2 kv) {
  if (null_space(cls).contains(kv, 1e-13))
    throw std::domain_error("orbit_coordinates: covector lies in the null space V^0");
  OrbitCoords oc;
  switch (cls.tag) {
    case ClassTag::II:
      // F^perp(r)(0,k) = (-r k, k)
      oc.k.k1 = kv.y;
      oc.r = -kv.x / kv.y;
      return oc;
    case ClassTag::III: {
      oc.k.k2 = kv.x > 0.0 ? 1 : -1;
      oc.r = -std::log(std::abs(kv.x));
      oc.k.k1 = kv.y;
      return oc;
    }
    case ClassTag::IV: {
      // kvec = e^{-r} k2 (1 - r k1, k1); monotone scalar equation for r.
      if (kv.y == 0.0) {
        oc.k.k2 = kv.x > 0.0 ? 1 : -1;
        oc.k.k1 = 0.0;
        oc.r = -std::log(std::abs(kv.x));
        return oc;
      }
      int k2 = kv.y > 0.0 ? 1 : -1;
      auto f = [&](double r) { return k2 * std::exp(-r) - kv.x - r * kv.y; };
      auto df = [&](double r) { return -k2 * std::exp(-r) - kv.y; };
      double r = solve_monotone(f, df, 0.0);
      oc.k.k2 = k2;
      oc.r = r;
      oc.k.k1 = kv.y / (k2 * std::exp(-r));
      if (oc.k.k1 < 0.0) oc.k.k1 = 0.0;
      return oc;
    }
    case ClassTag::V: {
      double rad = norm(kv);
      oc.r = -std::log(rad);
      oc.k.k1 = wrap_angle(std::atan2(kv.y, kv.x));
      return oc;
    }
    case ClassTag::VI: {
      if (cls.q == 0.0) {
        oc.k.k2 = kv.x > 0.0 ? 1 : -1;
        oc.r = -std::log(std::abs(kv.x));
        oc.k.k1 = kv.y;
        return oc;
      }
      double q = cls.q;
      if (q < 0.0) {
        // kx^2 e^{2r} + ky^2 e^{-2qr} = 1, both exponents positive in r.
        auto f = [&](double r) {
          return kv.x * kv.x * std::exp(2 * r) + kv.y * kv.y * std::exp(-2 * q * r) - 1.0;
        };
        auto df = [&](double r) {
          return 2 * kv.x * kv.x * std::exp(2 * r) - 2 * q * kv.y * kv.y * std::exp(-2 * q * r);
        };
        double r = solve_monotone(f, df, 0.0);
        oc.r = r;
        oc.k.k1 = wrap_angle(std::atan2(kv.y * std::exp(q * r), kv.x * std::exp(r)));
        return oc;
      }
      // q > 0: quadrant picks the ray, then r and k1 in closed form.
      int k2;
      if (kv.x > 0.0 && kv.y >= 0.0) k2 = 0;
      else if (kv.x <= 0.0 && kv.y > 0.0) k2 = 1;
      else if (kv.x < 0.0 && kv.y <= 0.0) k2 = 2;
      else k2 = 3;
      double u, v;  // components along the ray frame: (u, v) = sigma^{-k2} kvec
      switch (k2) {
        case 0: u = kv.x; v = kv.y; break;
        case 1: u = kv.y; v = -kv.x; break;
        case 2: u = -kv.x; v = -kv.y; break;
        default: u = -kv.y; v = kv.x; break;
      }
      // (u, v) = (e^{-r}, e^{q r} k1) for even k2-turns of the base ray; the
      // rotation mixes which exponential sits where for odd k2.
      if (k2 % 2 == 0) {
        oc.r = -std::log(u);
        oc.k.k1 = v * std::exp(-cls.q * oc.r);
      } else {
        oc.r = std::log(u) / cls.q;
        oc.k.k1 = v * std::exp(oc.r);
      }
      oc.k.k2 = k2;
      if (oc.k.k1 < 0.0) oc.k.k1 = 0.0;
      return oc;
    }
    case ClassTag::VII: {
      double p = cls.p;
      double rad = norm(kv);
      double theta = std::atan2(kv.y, kv.x);
      if (p == 0.0) {
        if (std::abs(rad - 1.0) > 1e-9)
          throw std::domain_error(
              "orbit_coordinates: class VII p=0 chart covers only the unit circle");
        double th = wrap_angle(theta);
        if (th < M_PI) {
          oc.k.k1 = 1.0;
          oc.r = th;
        } else {
          oc.k.k1 = -1.0;
          oc.r = th - M_PI;
        }
        return oc;
      }
      // r = theta + pi*m with ln|k| = ln(rad) + p*r in [0, pi*p).
      double t0 = std::log(rad) + p * theta;
      double m = std::floor(-t0 / (M_PI * p));
      double t = t0 + p * M_PI * m;
      if (t < 0.0) {  // guard rounding at the seam
        m += 1.0;
        t += M_PI * p;
      } else if (t >= M_PI * p) {
        m -= 1.0;
        t -= M_PI * p;
      }
      long mi = static_cast<long>(std::llround(m));
      oc.r = theta + M_PI * m;
      oc.k.k1 = (mi % 2 == 0) ? std::exp(t) : -std::exp(t);
      return oc;
    }
    default:
      throw std::domain_error("orbit_coordinates: class I has no generic orbits");
  }
}

double measure_density(const BianchiClass& cls, const CrossSectionParam& k, double r) {
  if (!in_parameter_set(cls, k, 1e-12))
    throw std::invalid_argument("measure_density: parameter outside the set");
  switch (cls.tag) {
    case ClassTag::II: return std::abs(k.k1);
    case ClassTag::III: return std::exp(-r);
    case ClassTag::IV: return std::exp(-2.0 * r) * (1.0 + k.k1);
    case ClassTag::V: return std::exp(-2.0 * r);
    case ClassTag::VI: {
      if (cls.q == 0.0) return std::exp(-r);
      double w = std::exp(-(1.0 - cls.q) * r);
      if (cls.q < 0.0) {
        double c = std::cos(k.k1), s = std::sin(k.k1);
        return w * (c * c - cls.q * s * s);
      }
      return w * ((k.k2 % 2 == 0) ? 1.0 : cls.q);
    }
    case ClassTag::VII: return std::exp(-2.0 * cls.p * r) * std::abs(k.k1);
    default: return 0.0;
  }
}

double plancherel_density(const BianchiClass& cls, const CrossSectionParam& k) {
  switch (cls.tag) {
    case ClassTag::II: return std::abs(k.k1);
    case ClassTag::III: return 1.0;
    case ClassTag::IV: return 1.0 + k.k1;
    case ClassTag::V: return 1.0;
    case ClassTag::VI: {
      if (cls.q == 0.0) return 1.0;
      if (cls.q < 0.0) {
        double c = std::cos(k.k1), s = std::sin(k.k1);
        return c * c - cls.q * s * s;
      }
      return (k.k2 % 2 == 0) ? 1.0 : cls.q;
    }
    case ClassTag::VII: return std::abs(k.k1);
    default: return 0.0;
  }
}

CrossSectionParam involution(const BianchiClass& cls, const CrossSectionParam& k) {
  CrossSectionParam n = k;
  switch (cls.tag) {
    case ClassTag::II:
      n.k1 = -k.k1;
      return n;
    case ClassTag::III:
      n.k1 = -k.k1;
      n.k2 = -k.k2;
      return n;
    case ClassTag::IV:
      n.k2 = -k.k2;
      return n;
    case ClassTag::V:
      n.k1 = wrap_angle(k.k1 + M_PI);
      return n;
    case ClassTag::VI:
      if (cls.q == 0.0) {
        n.k1 = -k.k1;
        n.k2 = -k.k2;
      } else if (cls.q < 0.0) {
        n.k1 = wrap_angle(k.k1 + M_PI);
      } else {
        n.k2 = (k.k2 + 2) % 4;
      }
      return n;
    case ClassTag::VII:
      n.k1 = -k.k1;
      return n;
    default:
      return n;
  }
}

std::string format_param(const BianchiClass& cls, const CrossSectionParam& k) {
  std::ostringstream os;
  os << "{class=" << cls.name() << ", k1=" << k.k1;
  bool two = cls.tag == ClassTag::III || cls.tag == ClassTag::IV ||
             (cls.tag == ClassTag::VI && cls.q > 0.0) ||
             (cls.tag == ClassTag::VI && cls.q == 0.0);
  if (two) os << ", k2=" << k.k2;
  os << "}";
  return os.str();
}

}  // namespace bianchi
