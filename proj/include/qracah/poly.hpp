#pragma once

#include <string>
#include <vector>

#include "qracah/scalar.hpp"

namespace qracah {

// Dense univariate polynomial, ascending coefficients. Every polynomial knows
// the zero of its field so that constants and padding stay in one backend.
class Poly {
 public:
  // Zero polynomial over the rationals; placeholders are overwritten.
  Poly() : Poly(Scalar()) {}
  explicit Poly(const Scalar& zero);
  // coeffs must be nonempty; trailing zeros are dropped.
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, int k);
  // z - root
  static Poly linear(const Scalar& root);
  // prod (z - r_i), in the field of `one`
  static Poly from_roots(const std::vector<Scalar>& roots, const Scalar& one);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Scalar& zero() const { return zero_; }
  const Scalar& coeff(int i) const;
  const Scalar& lead() const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar operator()(const Scalar& z) const;
  Poly derivative() const;
  Poly monic() const;
  // z^k * p
  Poly shift(int k) const;
  // p(z0 + h) as a polynomial in h
  Poly taylor_shift(const Scalar& z0) const;
  // p(c z)
  Poly scale_arg(const Scalar& c) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& a);
  Poly operator/(const Scalar& c) const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b);

  // Euclidean division a = q*b + r with deg r < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // a / b when b divides a; CancellationFailure otherwise. Float backends use
  // a relative remainder tolerance of 2^-(bits/2).
  Poly divexact(const Poly& b) const;

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  Scalar zero_;
  std::vector<Scalar> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

// Relative remainder test shared by divexact and ratfunc cancellation.
bool negligible_remainder(const Poly& rem, const Poly& reference);

}  // namespace qracah
