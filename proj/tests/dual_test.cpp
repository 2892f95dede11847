#include "bianchi/dual.hpp"

#include <cmath>

#include "doctest.h"
#include "test_support.hpp"

using namespace bianchi;
using testsup::Rng;

namespace {

// draw a parameter uniformly from the class's set
CrossSectionParam random_param(Rng& rng, const BianchiClass& cls) {
  CrossSectionParam k;
  switch (cls.tag) {
    case ClassTag::II:
      do { k.k1 = rng.uniform(-4, 4); } while (std::abs(k.k1) < 0.05);
      break;
    case ClassTag::III:
      k.k1 = rng.uniform(-4, 4);
      k.k2 = rng.uniform(0, 1) < 0.5 ? -1 : 1;
      break;
    case ClassTag::IV:
      k.k1 = rng.uniform(0, 4);
      k.k2 = rng.uniform(0, 1) < 0.5 ? -1 : 1;
      break;
    case ClassTag::V:
      k.k1 = rng.uniform(0, 2 * M_PI);
      break;
    case ClassTag::VI:
      if (cls.q == 0.0) {
        k.k1 = rng.uniform(-4, 4);
        k.k2 = rng.uniform(0, 1) < 0.5 ? -1 : 1;
      } else if (cls.q < 0.0) {
        k.k1 = rng.uniform(0, 2 * M_PI);
      } else {
        k.k1 = rng.uniform(0, 4);
        k.k2 = static_cast<int>(rng.uniform(0, 4)) % 4;
      }
      break;
    case ClassTag::VII: {
      double lim = std::exp(M_PI * cls.p);
      double mag = rng.uniform(1.0, lim - 1e-9);
      k.k1 = rng.uniform(0, 1) < 0.5 ? -mag : mag;
      break;
    }
    default:
      break;
  }
  return k;
}

}  // namespace

TEST_CASE("null spaces per class") {
  CHECK(null_space(BianchiClass::make(ClassTag::I)).dim() == 2);
  auto ii = null_space(BianchiClass::make(ClassTag::II));
  REQUIRE(ii.dim() == 1);
  CHECK(ii.basis[0].x == 1.0);
  CHECK(ii.basis[0].y == 0.0);
  auto iii = null_space(BianchiClass::make(ClassTag::III));
  REQUIRE(iii.dim() == 1);
  CHECK(iii.basis[0].x == 0.0);
  CHECK(null_space(BianchiClass::make(ClassTag::IV)).dim() == 0);
  CHECK(null_space(BianchiClass::make(ClassTag::V)).dim() == 0);
  CHECK(null_space(BianchiClass::make(ClassTag::VI, 0.0)).dim() == 1);
  CHECK(null_space(BianchiClass::make(ClassTag::VI, 0.5)).dim() == 0);
  CHECK(null_space(BianchiClass::make(ClassTag::VII, 1.0)).dim() == 0);
}

TEST_CASE("null space basis is killed by M^T") {
  for (const auto& cls : testsup::all_classes()) {
    Mat2 Mt = transpose(structure_matrix(cls));
    for (Vec2 v : null_space(cls).basis) CHECK(norm(Mt * v) == 0.0);
  }
}

TEST_CASE("coadjoint action spot values") {
  auto ii = BianchiClass::make(ClassTag::II);
  Vec2 r = coadjoint_action(ii, 3.0, {1, 2});
  CHECK(r.x == doctest::Approx(-5.0));
  CHECK(r.y == doctest::Approx(2.0));

  auto v = BianchiClass::make(ClassTag::V);
  Vec2 s = coadjoint_action(v, std::log(2.0), {2, 4});
  CHECK(s.x == doctest::Approx(1.0));
  CHECK(s.y == doctest::Approx(2.0));

  for (const auto& cls : testsup::all_classes()) {
    Vec2 w = coadjoint_action(cls, 0.0, {0.7, -0.3});
    CHECK(w.x == doctest::Approx(0.7));
    CHECK(w.y == doctest::Approx(-0.3));
  }
}

TEST_CASE("coadjoint action is the inverse transpose of F") {
  Rng rng;
  for (const auto& cls : testsup::all_classes()) {
    for (int i = 0; i < 20; ++i) {
      double r = rng.uniform(-2, 2);
      Mat2 expect = transpose(inverse(F_matrix(cls, r)));
      CHECK(frobenius(coadjoint_matrix(cls, r) - expect) < 1e-13);
    }
  }
}

TEST_CASE("cross-section spot values") {
  auto ii = BianchiClass::make(ClassTag::II);
  Vec2 a = cross_section_point(ii, {3.0, 0});
  CHECK(a.x == 0.0);
  CHECK(a.y == 3.0);

  auto v = BianchiClass::make(ClassTag::V);
  Vec2 b = cross_section_point(v, {0.0, 0});
  CHECK(b.x == 1.0);
  CHECK(b.y == 0.0);

  auto iv = BianchiClass::make(ClassTag::IV);
  Vec2 c = cross_section_point(iv, {2.0, -1});
  CHECK(c.x == -1.0);
  CHECK(c.y == -2.0);

  CHECK_THROWS(cross_section_point(ii, {0.0, 0}));
  CHECK_THROWS(cross_section_point(BianchiClass::make(ClassTag::VII, 1.0), {0.5, 0}));
}

TEST_CASE("cross-section points avoid the null space") {
  Rng rng;
  for (const auto& cls : testsup::dual_classes()) {
    NullSpace ns = null_space(cls);
    for (int i = 0; i < 50; ++i) {
      CrossSectionParam k = random_param(rng, cls);
      CHECK(!ns.contains(cross_section_point(cls, k), 1e-9));
    }
  }
}

TEST_CASE("involution realizes the sign flip and is an involution") {
  Rng rng;
  for (const auto& cls : testsup::dual_classes()) {
    for (int i = 0; i < 80; ++i) {
      CrossSectionParam k = random_param(rng, cls);
      CrossSectionParam nk = involution(cls, k);
      CHECK(in_parameter_set(cls, nk, 1e-12));
      Vec2 a = cross_section_point(cls, k);
      Vec2 b = cross_section_point(cls, nk);
      CHECK(norm(a + b) < 1e-12);
      CrossSectionParam back = involution(cls, nk);
      Vec2 c = cross_section_point(cls, back);
      CHECK(norm(a - c) < 1e-12);
    }
  }
  // spot values
  auto v = BianchiClass::make(ClassTag::V);
  CHECK(involution(v, {0.0, 0}).k1 == doctest::Approx(M_PI));
  auto ii = BianchiClass::make(ClassTag::II);
  CHECK(involution(ii, {3.0, 0}).k1 == -3.0);
  auto vi = BianchiClass::make(ClassTag::VI, 0.5);
  CHECK(involution(vi, {1.25, 2}).k2 == 0);
}

TEST_CASE("orbit coordinates invert the chart") {
  Rng rng;
  for (const auto& cls : testsup::dual_classes()) {
    for (int i = 0; i < 400; ++i) {
      CrossSectionParam k = random_param(rng, cls);
      double r = rng.uniform(-2.0, 2.0);
      Vec2 kv = coadjoint_action(cls, r, cross_section_point(cls, k));
      OrbitCoords oc = orbit_coordinates(cls, kv);
      Vec2 back = coadjoint_action(cls, oc.r, cross_section_point(cls, oc.k));
      CHECK(norm(back - kv) < 1e-10 * (1.0 + norm(kv)));
      // uniqueness: recovered parameters match the generators
      CHECK(oc.r == doctest::Approx(r).epsilon(1e-8));
    }
  }
}

TEST_CASE("orbit coordinate spot values") {
  auto v = BianchiClass::make(ClassTag::V);
  OrbitCoords oc = orbit_coordinates(v, {3, 4});
  CHECK(oc.k.k1 == doctest::Approx(std::atan2(4.0, 3.0)));
  CHECK(oc.r == doctest::Approx(-std::log(5.0)));

  auto ii = BianchiClass::make(ClassTag::II);
  OrbitCoords oc2 = orbit_coordinates(ii, {0, 7});
  CHECK(oc2.k.k1 == 7.0);
  CHECK(oc2.r == 0.0);

  auto vii = BianchiClass::make(ClassTag::VII, 1.0);
  Vec2 kv = coadjoint_action(vii, 0.4, {1.5, 0.0});
  OrbitCoords oc3 = orbit_coordinates(vii, kv);
  CHECK(oc3.k.k1 == doctest::Approx(1.5));
  CHECK(oc3.r == doctest::Approx(0.4));

  CHECK_THROWS(orbit_coordinates(ii, {1, 0}));  // V^0 direction
}

TEST_CASE("measure density spot values") {
  auto ii = BianchiClass::make(ClassTag::II);
  CHECK(measure_density(ii, {-2.0, 0}, 0.77) == doctest::Approx(2.0));

  auto v = BianchiClass::make(ClassTag::V);
  CHECK(measure_density(v, {1.0, 0}, 1.0) == doctest::Approx(std::exp(-2.0)));

  auto vi = BianchiClass::make(ClassTag::VI, 0.5);
  CHECK(measure_density(vi, {2.0, 1}, 0.0) == doctest::Approx(0.5));
}

TEST_CASE("plancherel density spot values") {
  auto ii = BianchiClass::make(ClassTag::II);
  CHECK(plancherel_density(ii, {-2.0, 0}) == 2.0);

  auto iv = BianchiClass::make(ClassTag::IV);
  CHECK(plancherel_density(iv, {3.0, 1}) == 4.0);
  CHECK(plancherel_density(iv, {3.0, -1}) == 4.0);

  auto vim = BianchiClass::make(ClassTag::VI, -0.5);
  CHECK(plancherel_density(vim, {0.0, 0}) == 1.0);
}

TEST_CASE("rho = plancherel density / det F(r)") {
  Rng rng;
  for (const auto& cls : testsup::dual_classes()) {
    for (int i = 0; i < 200; ++i) {
      CrossSectionParam k = random_param(rng, cls);
      double r = rng.uniform(-2.5, 2.5);
      double lhs = measure_density(cls, k, r);
      double rhs = plancherel_density(cls, k) / det_F(cls, r);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("measure density matches the finite-difference chart Jacobian") {
  Rng rng;
  for (const auto& cls : testsup::dual_classes()) {
    for (int i = 0; i < 25; ++i) {
      CrossSectionParam k = random_param(rng, cls);
      if (cls.tag == ClassTag::IV || (cls.tag == ClassTag::VI && cls.q > 0.0)) {
        if (k.k1 < 0.05) k.k1 += 0.1;  // keep away from the boundary of the ray
      }
      double r = rng.uniform(-1.5, 1.5);
      double eps = 1e-6;
      auto chart = [&](double k1, double rr) {
        CrossSectionParam kk = k;
        kk.k1 = k1;
        return coadjoint_action(cls, rr, cross_section_point(cls, kk));
      };
      Vec2 dk = (1.0 / (2 * eps)) * (chart(k.k1 + eps, r) - chart(k.k1 - eps, r));
      Vec2 dr = (1.0 / (2 * eps)) * (chart(k.k1, r + eps) - chart(k.k1, r - eps));
      double jac = std::abs(dk.x * dr.y - dk.y * dr.x);
      CHECK(measure_density(cls, k, r) == doctest::Approx(jac).epsilon(1e-6));
    }
  }
}

TEST_CASE("monte carlo: rho dk dr reproduces Lebesgue measure") {
  // integrate a Gaussian over R^2 \ V^0 in chart coordinates with weight rho
  // and compare with direct quadrature
  Rng rng;
  for (const auto& cls : {BianchiClass::make(ClassTag::V), BianchiClass::make(ClassTag::II)}) {
    auto gauss = [](Vec2 v) { return std::exp(-dot(v, v)); };
    // direct: integral of exp(-|x|^2) over R^2 = pi
    double direct = M_PI;
    // chart integral via tensor quadrature over the parameter set
    double acc = 0.0;
    int nk = 400, nr = 400;
    double r_lo = -8, r_hi = 8;
    if (cls.tag == ClassTag::V) {
      for (int i = 0; i < nk; ++i) {
        double k = (i + 0.5) * 2 * M_PI / nk;
        for (int j = 0; j < nr; ++j) {
          double r = r_lo + (j + 0.5) * (r_hi - r_lo) / nr;
          Vec2 kv = coadjoint_action(cls, r, cross_section_point(cls, {k, 0}));
          acc += gauss(kv) * measure_density(cls, {k, 0}, r) * (2 * M_PI / nk) *
                 ((r_hi - r_lo) / nr);
        }
      }
    } else {
      // the class II chart reaches the neighborhood of V^0 (the k_x axis)
      // only at large |r|, so test with a bump centered away from it
      auto bump = [](Vec2 v) { return std::exp(-dot(v - Vec2{0, 4}, v - Vec2{0, 4})); };
      double k_lo = 0.5, k_hi = 8;
      double acc2 = 0.0;
      for (int i = 0; i < nk; ++i) {
        double k = k_lo + (i + 0.5) * (k_hi - k_lo) / nk;
        for (int j = 0; j < nr; ++j) {
          double r = r_lo + (j + 0.5) * (r_hi - r_lo) / nr;
          Vec2 kv = coadjoint_action(cls, r, cross_section_point(cls, {k, 0}));
          acc2 += bump(kv) * measure_density(cls, {k, 0}, r) * ((k_hi - k_lo) / nk) *
                  ((r_hi - r_lo) / nr);
        }
      }
      acc = acc2;
    }
    CHECK(acc == doctest::Approx(direct).epsilon(5e-3));
  }
}

TEST_CASE("singleton criterion: coadjoint action fixes only V^0") {
  Rng rng;
  for (const auto& cls : testsup::dual_classes()) {
    NullSpace ns = null_space(cls);
    for (Vec2 v : ns.basis) {
      Vec2 moved = coadjoint_action(cls, 1.7, v);
      CHECK(norm(moved - v) < 1e-12);
    }
    for (int i = 0; i < 40; ++i) {
      Vec2 v = rng.vec2();
      if (ns.contains(v, 1e-6) || norm(v) < 0.1) continue;
      bool fixed = true;
      for (double r : {0.5, 1.0, -0.8}) {
        if (norm(coadjoint_action(cls, r, v) - v) > 1e-9 * norm(v)) fixed = false;
      }
      CHECK(!fixed);
    }
  }
}
