#pragma once

#include <vector>

#include "qracah/poly.hpp"

namespace qracah {

class RatFunc {
 public:
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Scalar& zero() const { return num_.zero(); }

  // Value at z; EvaluationAtPole when the (uncancelled) denominator vanishes.
  Scalar operator()(const Scalar& z) const;
  RatFunc derivative() const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  // Equal as functions (cross multiplication).
  friend bool operator==(const RatFunc& a, const RatFunc& b);

 private:
  Poly num_, den_;
};

// Divide out gcd(num, den) and make den monic.
RatFunc ratfunc_cancel(const RatFunc& f);

// Coefficients c_{-1}, c_0, ..., c_order of f around z0. HigherOrderPole when
// the pole at z0 has order > 1.
std::vector<Scalar> laurent_expand(const RatFunc& f, const Scalar& z0, int order);

}  // namespace qracah
