#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <memory>
#include <string>
#include <variant>

#include "qracah/errors.hpp"

namespace qracah {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
// Accepts "p/q", "p", or a plain decimal integer; throws ParseError otherwise.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
// Exact square root when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);
Rational rpow(const Rational& base, long e);

// a + b*u with u^2 = r. The r value is shared by every element built in one
// context; elements from different contexts refuse to mix.
class QuadExt {
 public:
  QuadExt(Rational a, Rational b, std::shared_ptr<const Rational> r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& r() const { return *r_; }
  const std::shared_ptr<const Rational>& context() const { return r_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  Rational norm() const { return a_ * a_ - *r_ * b_ * b_; }
  QuadExt conj() const { return QuadExt(a_, -b_, r_); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, r_); }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend bool operator==(const QuadExt& x, const QuadExt& y);

 private:
  void check_same(const QuadExt& o) const;
  Rational a_, b_;
  std::shared_ptr<const Rational> r_;
};

// MPFR float that remembers its precision; arithmetic rounds to nearest at the
// larger operand precision.
class BigFloat {
 public:
  using value_type = boost::multiprecision::mpfr_float;

  explicit BigFloat(unsigned bits = 64);
  BigFloat(const Rational& r, unsigned bits);
  BigFloat(const value_type& v, unsigned bits);

  unsigned bits() const { return bits_; }
  const value_type& value() const { return v_; }
  bool is_zero() const;
  double to_double() const;
  std::string str(int digits = 0) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator/(const BigFloat& x, const BigFloat& y);
  friend bool operator==(const BigFloat& x, const BigFloat& y);

  BigFloat abs() const;
  BigFloat log() const;

 private:
  value_type v_;
  unsigned bits_;
};

enum class Backend { rational, quadext, bigfloat };
const char* backend_name(Backend b);

class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& r) : v_(r) {}
  Scalar(const QuadExt& q) : v_(q) {}
  Scalar(const BigFloat& f) : v_(f) {}

  Backend backend() const { return static_cast<Backend>(v_.index()); }
  bool is_zero() const;
  // Zero and one of the same field as *this.
  Scalar zero_like() const;
  Scalar one_like() const;
  Scalar lift(const Rational& r) const;

  // Rational value; QuadExt values qualify only when the u-part vanishes.
  bool is_rational() const;
  Rational rational() const;
  // Direct access; the caller has checked backend().
  const Rational& rat() const { return std::get<Rational>(v_); }
  const QuadExt& quad() const { return std::get<QuadExt>(v_); }
  const BigFloat& bigfloat() const { return std::get<BigFloat>(v_); }

  double to_double() const;
  // "num/den", "a+b*u;u2=r", or a decimal for floats.
  std::string str() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  friend bool operator==(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  Scalar pow(long e) const;

 private:
  std::variant<Rational, QuadExt, BigFloat> v_;
};

// Arithmetic context: which backend constants are created in, plus u.
class Field {
 public:
  static Field rational();
  // u^2 = r. When r is a rational square, u itself is that rational.
  static Field quadratic(const Rational& r);
  static Field real(unsigned bits);

  Backend backend() const { return backend_; }
  unsigned bits() const { return bits_; }
  const std::shared_ptr<const Rational>& context() const { return r_; }

  Scalar operator()(const Rational& x) const;
  Scalar operator()(long x) const { return (*this)(Rational(x)); }
  Scalar zero() const { return (*this)(0L); }
  Scalar one() const { return (*this)(1L); }
  // The generator u; for the rational backend only defined when u2 is a square.
  Scalar u(const Rational& u2) const;

 private:
  Backend backend_ = Backend::rational;
  std::shared_ptr<const Rational> r_;
  unsigned bits_ = 0;
};

// Exact backends: x == 0. BigFloat: |x| <= 2^-(bits/2) |scale|.
bool negligible(const Scalar& x, const Scalar& scale);

}  // namespace qracah
