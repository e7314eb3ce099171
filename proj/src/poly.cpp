#include "qracah/poly.hpp"

#include <sstream>

namespace qracah {

Poly::Poly(const Scalar& zero) : zero_(zero.zero_like()) {}

Poly::Poly(std::vector<Scalar> coeffs) : zero_(coeffs.empty() ? Scalar() : coeffs.front().zero_like()), c_(std::move(coeffs)) {
  if (c_.empty()) throw InvalidParams("Poly needs at least one coefficient to fix its field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<size_t>(k) + 1, c.zero_like());
  v[static_cast<size_t>(k)] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Scalar& root) { return Poly(std::vector<Scalar>{-root, root.one_like()}); }

Poly Poly::from_roots(const std::vector<Scalar>& roots, const Scalar& one) {
  Poly p = constant(one);
  for (const auto& r : roots) p *= linear(r);
  return p;
}

const Scalar& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_;
  return c_[static_cast<size_t>(i)];
}

const Scalar& Poly::lead() const {
  if (c_.empty()) return zero_;
  return c_.back();
}

Scalar Poly::operator()(const Scalar& z) const {
  if (c_.empty()) return z.zero_like();
  Scalar acc = c_.back();
  for (int i = degree() - 1; i >= 0; --i) acc = acc * z + c_[static_cast<size_t>(i)];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(zero_);
  std::vector<Scalar> d;
  d.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * zero_.lift(Rational(static_cast<long>(i))));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this / lead();
}

Poly Poly::shift(int k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<Scalar> v(static_cast<size_t>(k), zero_);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::taylor_shift(const Scalar& z0) const {
  // Horner in the polynomial ring: p(z0 + h) = (...(a_n)(z0+h) + a_{n-1})...
  Poly h_plus = Poly(std::vector<Scalar>{z0, z0.one_like()});
  Poly acc(zero_);
  for (int i = degree(); i >= 0; --i) acc = acc * h_plus + constant(c_[static_cast<size_t>(i)]);
  return acc;
}

Poly Poly::scale_arg(const Scalar& c) const {
  if (c_.empty()) return *this;
  std::vector<Scalar> v = c_;
  Scalar pw = c.one_like();
  for (auto& x : v) {
    x *= pw;
    pw *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r(zero_);
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(-x);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
  const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
  Poly r = big;
  for (size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, a.zero_);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  Poly r(a.zero_);
  r.c_ = std::move(v);
  r.trim();
  return r;
}

Poly operator*(const Scalar& c, const Poly& a) {
  Poly r(a.zero_);
  if (c.is_zero()) return r;
  r.c_.reserve(a.c_.size());
  for (const auto& x : a.c_) r.c_.push_back(c * x);
  r.trim();
  return r;
}

Poly Poly::operator/(const Scalar& c) const {
  if (c.is_zero()) throw DivisionByZero("polynomial divided by zero");
  Poly r(zero_);
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(x / c);
  r.trim();
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  int db = b.degree();
  r = a;
  int dq = a.degree() - db;
  if (dq < 0) {
    q = Poly(a.zero_);
    return;
  }
  std::vector<Scalar> qc(static_cast<size_t>(dq) + 1, a.zero_);
  const Scalar& lb = b.lead();
  bool exact = a.zero_.backend() != Backend::bigfloat;
  for (int k = dq; k >= 0; --k) {
    int top = k + db;
    if (top >= static_cast<int>(r.c_.size())) continue;
    Scalar t = r.c_[static_cast<size_t>(top)] / lb;
    qc[static_cast<size_t>(k)] = t;
    for (int j = 0; j <= db; ++j) r.c_[static_cast<size_t>(k + j)] -= t * b.c_[static_cast<size_t>(j)];
    // Force the eliminated coefficient to an exact zero in float mode.
    if (!exact) r.c_[static_cast<size_t>(top)] = a.zero_;
  }
  r.trim();
  q = Poly(a.zero_);
  q.c_ = std::move(qc);
  q.trim();
}

bool negligible_remainder(const Poly& rem, const Poly& reference) {
  if (rem.is_zero()) return true;
  if (rem.zero().backend() != Backend::bigfloat) return false;
  unsigned bits = rem.zero().bigfloat().bits();
  BigFloat scale(bits), worst(bits);
  for (const auto& c : reference.coeffs()) {
    BigFloat a = c.bigfloat().abs();
    if (a.value() > scale.value()) scale = a;
  }
  for (const auto& c : rem.coeffs()) {
    BigFloat a = c.bigfloat().abs();
    if (a.value() > worst.value()) worst = a;
  }
  BigFloat tol(Rational(1), bits);
  for (unsigned i = 0; i < bits / 2; ++i) tol = tol / BigFloat(Rational(2), bits);
  return worst.value() <= (tol * scale).value();
}

Poly Poly::divexact(const Poly& b) const {
  Poly q(zero_), r(zero_);
  divmod(*this, b, q, r);
  if (!negligible_remainder(r, *this))
    throw CancellationFailure("polynomial of degree " + std::to_string(b.degree()) + " does not divide one of degree " +
                              std::to_string(degree()));
  return q;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q(a.zero()), r(a.zero());
    Poly::divmod(a, b, q, r);
    if (negligible_remainder(r, a)) r = Poly(a.zero());
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

}  // namespace qracah
