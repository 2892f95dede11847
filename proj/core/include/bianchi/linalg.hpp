#pragma once

// Small fixed-size real/complex linear algebra. Everything is closed form;
// the dimensions never exceed 3.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>

namespace bianchi {

using cplx = std::complex<double>;

struct Vec2 {
  double x = 0.0, y = 0.0;

  double& operator[](std::size_t i) { return i == 0 ? x : y; }
  double operator[](std::size_t i) const { return i == 0 ? x : y; }
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

// Row-major 2x2.
struct Mat2 {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }
};

inline Mat2 operator+(Mat2 m, Mat2 n) { return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d}; }
inline Mat2 operator-(Mat2 m, Mat2 n) { return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d}; }
inline Mat2 operator*(double s, Mat2 m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
inline Mat2 operator*(Mat2 m, Mat2 n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
inline Vec2 operator*(Mat2 m, Vec2 v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }

inline Mat2 transpose(Mat2 m) { return {m.a, m.c, m.b, m.d}; }
inline double det(Mat2 m) { return m.a * m.d - m.b * m.c; }
inline double trace(Mat2 m) { return m.a + m.d; }
inline Mat2 inverse(Mat2 m) {
  double id = 1.0 / det(m);
  return {id * m.d, -id * m.b, -id * m.c, id * m.a};
}
inline double frobenius(Mat2 m) {
  return std::sqrt(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d);
}

// Row-major 3x3.
struct Mat3 {
  std::array<double, 9> e{};

  double& operator()(std::size_t i, std::size_t j) { return e[3 * i + j]; }
  double operator()(std::size_t i, std::size_t j) const { return e[3 * i + j]; }

  static Mat3 identity() {
    Mat3 m;
    m.e = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return m;
  }
  static Mat3 zero() { return {}; }
};

inline Mat3 operator+(const Mat3& m, const Mat3& n) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = m.e[i] + n.e[i];
  return r;
}
inline Mat3 operator-(const Mat3& m, const Mat3& n) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = m.e[i] - n.e[i];
  return r;
}
inline Mat3 operator*(double s, const Mat3& m) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.e[i] = s * m.e[i];
  return r;
}
inline Mat3 operator*(const Mat3& m, const Mat3& n) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += m(i, k) * n(k, j);
      r(i, j) = s;
    }
  return r;
}
inline Vec3 operator*(const Mat3& m, Vec3 v) {
  return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
          m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
          m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

inline Mat3 transpose(const Mat3& m) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = m(j, i);
  return r;
}
inline double trace(const Mat3& m) { return m(0, 0) + m(1, 1) + m(2, 2); }
inline double det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}
inline Mat3 inverse(const Mat3& m) {
  Mat3 r;
  double id = 1.0 / det(m);
  r(0, 0) = id * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  r(0, 1) = id * (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2));
  r(0, 2) = id * (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1));
  r(1, 0) = id * (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2));
  r(1, 1) = id * (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0));
  r(1, 2) = id * (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2));
  r(2, 0) = id * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  r(2, 1) = id * (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1));
  r(2, 2) = id * (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  return r;
}
inline double frobenius(const Mat3& m) {
  double s = 0.0;
  for (double v : m.e) s += v * v;
  return std::sqrt(s);
}

inline Mat3 from_blocks(Mat2 tl, Vec2 tr, Vec2 bl, double br) {
  Mat3 m;
  m(0, 0) = tl.a; m(0, 1) = tl.b; m(0, 2) = tr.x;
  m(1, 0) = tl.c; m(1, 1) = tl.d; m(1, 2) = tr.y;
  m(2, 0) = bl.x; m(2, 1) = bl.y; m(2, 2) = br;
  return m;
}
inline Mat2 block2x2(const Mat3& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

inline std::ostream& operator<<(std::ostream& os, Vec2 v) {
  return os << "(" << v.x << ", " << v.y << ")";
}
inline std::ostream& operator<<(std::ostream& os, Vec3 v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}
inline std::ostream& operator<<(std::ostream& os, Mat2 m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

}  // namespace bianchi
