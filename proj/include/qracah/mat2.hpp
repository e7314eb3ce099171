#pragma once

#include <array>

namespace qracah {

template <class T>
struct Vec2 {
  T x, y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const T& c, const Vec2& a) { return {c * a.x, c * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.x + a.y * b.y;
}

// det[a, b] with a, b as columns
template <class T>
T det2(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class T>
struct Mat2 {
  T a11, a12, a21, a22;

  static Mat2 diag(const T& d1, const T& d2, const T& zero) { return {d1, zero, zero, d2}; }

  T det() const { return a11 * a22 - a12 * a21; }
  T trace() const { return a11 + a22; }
  Mat2 adj() const { return {a22, -a12, -a21, a11}; }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }
  Vec2<T> col1() const { return {a11, a21}; }
  Vec2<T> col2() const { return {a12, a22}; }

  template <class F>
  auto map(F f) const -> Mat2<decltype(f(a11))> {
    return {f(a11), f(a12), f(a21), f(a22)};
  }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22, a.a21 * b.a11 + a.a22 * b.a21,
            a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend Vec2<T> operator*(const Mat2& a, const Vec2<T>& v) {
    return {a.a11 * v.x + a.a12 * v.y, a.a21 * v.x + a.a22 * v.y};
  }
  friend Mat2 operator*(const T& c, const Mat2& a) { return {c * a.a11, c * a.a12, c * a.a21, c * a.a22}; }
  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.a11 == b.a11 && a.a12 == b.a12 && a.a21 == b.a21 && a.a22 == b.a22;
  }
};

// Outer product a b^T
template <class T>
Mat2<T> outer(const Vec2<T>& a, const Vec2<T>& b) {
  return {a.x * b.x, a.x * b.y, a.y * b.x, a.y * b.y};
}

}  // namespace qracah
