#include "qracah/ratfunc.hpp"

namespace qracah {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
}

RatFunc::RatFunc(Poly p) : num_(p), den_(Poly::constant(p.zero().one_like())) {}

Scalar RatFunc::operator()(const Scalar& z) const {
  Scalar d = den_(z);
  if (d.is_zero()) throw EvaluationAtPole("denominator vanishes at z = " + z.str());
  return num_(z) / d;
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw DivisionByZero("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFunc ratfunc_cancel(const RatFunc& f) {
  Poly g = gcd(f.num(), f.den());
  Poly num = f.num(), den = f.den();
  if (g.degree() > 0) {
    num = num.divexact(g);
    den = den.divexact(g);
  }
  Scalar lc = den.lead();
  return RatFunc(num / lc, den / lc);
}

std::vector<Scalar> laurent_expand(const RatFunc& f, const Scalar& z0, int order) {
  if (order < 0) throw InvalidParams("laurent_expand needs order >= 0");
  // Work in h = z - z0 and strip common powers of h.
  Poly n = f.num().taylor_shift(z0);
  Poly d = f.den().taylor_shift(z0);
  auto low = [](const Poly& p) {
    int k = 0;
    while (k <= p.degree() && p.coeff(k).is_zero()) ++k;
    return k;
  };
  int kn = n.is_zero() ? 1 << 20 : low(n);
  int kd = low(d);
  int common = std::min(kn, kd);
  auto drop = [](const Poly& p, int k) {
    if (p.is_zero() || k == 0) return p;
    std::vector<Scalar> v(p.coeffs().begin() + k, p.coeffs().end());
    return Poly(std::move(v));
  };
  n = drop(n, common);
  d = drop(d, common);
  int pole = kd - common;
  if (pole > 1) throw HigherOrderPole("pole of order " + std::to_string(pole) + " at z = " + z0.str());

  // Power series of n/d in h to degree order + pole.
  int terms = order + 1 + pole;
  const Scalar& d0 = d.coeff(pole);
  std::vector<Scalar> dd;  // d divided by h^pole
  for (int i = pole; i <= d.degree(); ++i) dd.push_back(d.coeff(i));
  std::vector<Scalar> s(static_cast<size_t>(terms), z0.zero_like());
  for (int k = 0; k < terms; ++k) {
    Scalar acc = n.coeff(k);
    for (int j = 1; j <= k && j < static_cast<int>(dd.size()); ++j) acc -= dd[static_cast<size_t>(j)] * s[static_cast<size_t>(k - j)];
    s[static_cast<size_t>(k)] = acc / d0;
  }
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(order) + 2);
  if (pole == 1) {
    out = s;
  } else {
    out.push_back(z0.zero_like());
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

}  // namespace qracah
