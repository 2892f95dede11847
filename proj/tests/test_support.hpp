#pragma once

// Shared helpers for the test suites: seeded RNG draws, the matrix
// exponential oracle (series + scaling/squaring, independent of the
// closed-form F), and the list of classes exercised everywhere.

#include <cmath>
#include <random>
#include <vector>

#include "bianchi/group.hpp"
#include "bianchi/linalg.hpp"

namespace testsup {

using bianchi::BianchiClass;
using bianchi::ClassTag;
using bianchi::Mat2;

inline std::vector<BianchiClass> all_classes() {
  return {
      BianchiClass::make(ClassTag::I),
      BianchiClass::make(ClassTag::II),
      BianchiClass::make(ClassTag::III),
      BianchiClass::make(ClassTag::IV),
      BianchiClass::make(ClassTag::V),
      BianchiClass::make(ClassTag::VI, -0.5),
      BianchiClass::make(ClassTag::VI, 0.5),
      BianchiClass::make(ClassTag::VI, 1.0),
      BianchiClass::make(ClassTag::VII, 0.0),
      BianchiClass::make(ClassTag::VII, 1.0),
  };
}

// classes with a generic dual (II-VII); VI q=0 rides the III path
inline std::vector<BianchiClass> dual_classes() {
  return {
      BianchiClass::make(ClassTag::II),
      BianchiClass::make(ClassTag::III),
      BianchiClass::make(ClassTag::IV),
      BianchiClass::make(ClassTag::V),
      BianchiClass::make(ClassTag::VI, -0.5),
      BianchiClass::make(ClassTag::VI, 0.5),
      BianchiClass::make(ClassTag::VI, 1.0),
      BianchiClass::make(ClassTag::VII, 1.0),
  };
}

// 2x2 matrix exponential by scaling and squaring on the plain series.
inline Mat2 expm2_oracle(Mat2 m) {
  double scale = bianchi::frobenius(m);
  int squarings = 0;
  while (scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  double f = std::ldexp(1.0, -squarings);
  Mat2 a = f * m;
  Mat2 term = Mat2::identity();
  Mat2 sum = Mat2::identity();
  for (int n = 1; n <= 24; ++n) {
    term = (1.0 / n) * (term * a);
    sum = sum + term;
    if (bianchi::frobenius(term) < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// 3x3 matrix exponential oracle (same scheme).
inline bianchi::Mat3 expm3_oracle(bianchi::Mat3 m) {
  double scale = bianchi::frobenius(m);
  int squarings = 0;
  while (scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  double f = std::ldexp(1.0, -squarings);
  bianchi::Mat3 a = f * m;
  bianchi::Mat3 term = bianchi::Mat3::identity();
  bianchi::Mat3 sum = bianchi::Mat3::identity();
  for (int n = 1; n <= 30; ++n) {
    term = (1.0 / n) * (term * a);
    sum = sum + term;
    if (bianchi::frobenius(term) < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned seed = 20240817u) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  bianchi::GroupElement element(double box = 3.0) {
    return {uniform(-box, box), uniform(-box, box), uniform(-box, box)};
  }
  bianchi::AlgebraElement algebra(double box = 3.0) {
    return {uniform(-box, box), uniform(-box, box), uniform(-box, box)};
  }
  bianchi::Vec2 vec2(double box = 3.0) { return {uniform(-box, box), uniform(-box, box)}; }
};

}  // namespace testsup
