#pragma once

// Left-invariant Riemannian metric on a Bianchi group, given by a constant
// symmetric positive-definite matrix h_ij in the left-invariant coframe.
// Caches the inverse and its named blocks: the 2x2 block, the mixed column
// (h^13, h^23), and h^33.

#include <stdexcept>

#include "bianchi/linalg.hpp"

namespace bianchi {

class InvariantMetric {
 public:
  explicit InvariantMetric(const Mat3& h);

  static InvariantMetric identity() { return InvariantMetric(Mat3::identity()); }
  static InvariantMetric from_upper(double h11, double h12, double h13, double h22, double h23,
                                    double h33);

  const Mat3& h() const { return h_; }
  const Mat3& h_inv() const { return h_inv_; }

  // Blocks of the inverse metric.
  Mat2 inv2x2() const { return inv2x2_; }
  Vec2 inv_mixed() const { return inv_mixed_; }  // (h^13, h^23)
  double inv33() const { return inv33_; }

  // 2x2 block of the metric itself, and its inverse.
  Mat2 block2() const { return block2_; }
  Mat2 block2_inv() const { return block2_inv_; }

  double det() const { return det_; }
  double sqrt_det() const { return sqrt_det_; }  // the Haar constant tied to the metric

 private:
  Mat3 h_, h_inv_;
  Mat2 inv2x2_, block2_, block2_inv_;
  Vec2 inv_mixed_;
  double inv33_ = 0.0, det_ = 0.0, sqrt_det_ = 0.0;
};

inline InvariantMetric::InvariantMetric(const Mat3& h) : h_(h) {
  double asym = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) asym = std::max(asym, std::abs(h(i, j) - h(j, i)));
  if (asym > 1e-12) throw std::invalid_argument("metric matrix must be symmetric");
  // positive definite: leading minors
  double m1 = h(0, 0);
  double m2 = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
  det_ = bianchi::det(h);
  if (!(m1 > 0.0 && m2 > 0.0 && det_ > 0.0))
    throw std::invalid_argument("metric matrix must be positive definite");
  h_inv_ = inverse(h);
  inv2x2_ = block2x2(h_inv_);
  inv_mixed_ = {h_inv_(0, 2), h_inv_(1, 2)};
  inv33_ = h_inv_(2, 2);
  block2_ = block2x2(h);
  block2_inv_ = inverse(block2_);
  sqrt_det_ = std::sqrt(det_);
}

inline InvariantMetric InvariantMetric::from_upper(double h11, double h12, double h13, double h22,
                                                   double h23, double h33) {
  Mat3 m;
  m(0, 0) = h11; m(0, 1) = h12; m(0, 2) = h13;
  m(1, 0) = h12; m(1, 1) = h22; m(1, 2) = h23;
  m(2, 0) = h13; m(2, 1) = h23; m(2, 2) = h33;
  return InvariantMetric(m);
}

}  // namespace bianchi
