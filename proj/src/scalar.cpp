#include "qracah/scalar.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace qracah {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + i, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("not an exact rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (sgn(r) < 0) return false;
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = Rational(sn, sd);
  root.canonicalize();
  return true;
}

Rational rpow(const Rational& base, long e) {
  if (e < 0) {
    if (sgn(base) == 0) throw DivisionByZero("0 to a negative power");
    return rpow(Rational(1) / base, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(Rational a, Rational b, std::shared_ptr<const Rational> r)
    : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {
  if (!r_) throw BackendMismatch("QuadExt without a context");
}

void QuadExt::check_same(const QuadExt& o) const {
  if (r_ != o.r_ && *r_ != *o.r_)
    throw BackendMismatch("QuadExt contexts differ: u2=" + to_string(*r_) + " vs " + to_string(*o.r_));
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  x.check_same(y);
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.r_);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  x.check_same(y);
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.r_);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  x.check_same(y);
  if (sgn(x.b_) == 0 && sgn(y.b_) == 0) return QuadExt(x.a_ * y.a_, Rational(0), x.r_);
  return QuadExt(x.a_ * y.a_ + *x.r_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.r_);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  x.check_same(y);
  if (sgn(y.b_) == 0) {
    if (sgn(y.a_) == 0) throw DivisionByZero("division by zero in Q(u)");
    return QuadExt(x.a_ / y.a_, x.b_ / y.a_, x.r_);
  }
  Rational n = y.norm();
  // A zero norm with y != 0 only happens when u2 is a square and y is a
  // multiple of u -+ sqrt(u2); that element has no inverse.
  if (sgn(n) == 0) throw DivisionByZero("non-invertible element of Q(u)");
  QuadExt num = x * y.conj();
  return QuadExt(num.a_ / n, num.b_ / n, x.r_);
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  x.check_same(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

// --------------------------------------------------------------- BigFloat

namespace {
mpfr_ptr raw(BigFloat::value_type& v) { return v.backend().data(); }
mpfr_srcptr raw(const BigFloat::value_type& v) { return v.backend().data(); }

BigFloat::value_type with_bits(unsigned bits) {
  BigFloat::value_type v;
  mpfr_set_prec(raw(v), bits);
  mpfr_set_zero(raw(v), 1);
  return v;
}

template <class Op>
BigFloat binop(const BigFloat& x, const BigFloat& y, Op op) {
  unsigned bits = std::max(x.bits(), y.bits());
  auto v = with_bits(bits);
  op(raw(v), raw(x.value()), raw(y.value()), MPFR_RNDN);
  return BigFloat(v, bits);
}
}  // namespace

BigFloat::BigFloat(unsigned bits) : v_(with_bits(std::max(bits, 64u))), bits_(std::max(bits, 64u)) {}

BigFloat::BigFloat(const Rational& r, unsigned bits) : BigFloat(bits) {
  mpfr_set_q(raw(v_), r.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const value_type& v, unsigned bits) : BigFloat(bits) {
  mpfr_set(raw(v_), raw(v), MPFR_RNDN);
}

bool BigFloat::is_zero() const { return mpfr_zero_p(raw(v_)) != 0; }
double BigFloat::to_double() const { return mpfr_get_d(raw(v_), MPFR_RNDN); }

std::string BigFloat::str(int digits) const {
  if (digits <= 0) digits = static_cast<int>(bits_ * 0.30103) + 1;
  std::ostringstream os;
  os << std::setprecision(digits) << v_;
  return os.str();
}

BigFloat BigFloat::operator-() const {
  auto v = with_bits(bits_);
  mpfr_neg(raw(v), raw(v_), MPFR_RNDN);
  return BigFloat(v, bits_);
}

BigFloat operator+(const BigFloat& x, const BigFloat& y) { return binop(x, y, mpfr_add); }
BigFloat operator-(const BigFloat& x, const BigFloat& y) { return binop(x, y, mpfr_sub); }
BigFloat operator*(const BigFloat& x, const BigFloat& y) { return binop(x, y, mpfr_mul); }
BigFloat operator/(const BigFloat& x, const BigFloat& y) {
  if (y.is_zero()) throw DivisionByZero("float division by zero");
  return binop(x, y, mpfr_div);
}
bool operator==(const BigFloat& x, const BigFloat& y) { return mpfr_equal_p(raw(x.v_), raw(y.v_)) != 0; }

BigFloat BigFloat::abs() const {
  auto v = with_bits(bits_);
  mpfr_abs(raw(v), raw(v_), MPFR_RNDN);
  return BigFloat(v, bits_);
}

BigFloat BigFloat::log() const {
  auto v = with_bits(bits_);
  mpfr_log(raw(v), raw(v_), MPFR_RNDN);
  return BigFloat(v, bits_);
}

// ----------------------------------------------------------------- Scalar

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::rational: return "rational";
    case Backend::quadext: return "quadext";
    case Backend::bigfloat: return "bigfloat";
  }
  return "?";
}

namespace {
[[noreturn]] void mismatch(const Scalar& x, const Scalar& y) {
  throw BackendMismatch(std::string("cannot combine ") + backend_name(x.backend()) + " with " +
                        backend_name(y.backend()));
}

template <class Op>
Scalar combine(const Scalar& x, const Scalar& y, Op op) {
  if (x.backend() != y.backend()) mismatch(x, y);
  switch (x.backend()) {
    case Backend::rational: return Scalar(op(x.rat(), y.rat()));
    case Backend::quadext: return Scalar(op(x.quad(), y.quad()));
    case Backend::bigfloat: return Scalar(op(x.bigfloat(), y.bigfloat()));
  }
  mismatch(x, y);
}
}  // namespace

bool Scalar::is_zero() const {
  switch (backend()) {
    case Backend::rational: return sgn(std::get<Rational>(v_)) == 0;
    case Backend::quadext: return quad().is_zero();
    case Backend::bigfloat: return bigfloat().is_zero();
  }
  return false;
}

Scalar Scalar::lift(const Rational& r) const {
  switch (backend()) {
    case Backend::rational: return Scalar(r);
    case Backend::quadext: return Scalar(QuadExt(r, Rational(0), quad().context()));
    case Backend::bigfloat: return Scalar(BigFloat(r, bigfloat().bits()));
  }
  return Scalar(r);
}

Scalar Scalar::zero_like() const { return lift(Rational(0)); }
Scalar Scalar::one_like() const { return lift(Rational(1)); }

bool Scalar::is_rational() const {
  if (backend() == Backend::rational) return true;
  if (backend() == Backend::quadext) return sgn(quad().b()) == 0;
  return false;
}

Rational Scalar::rational() const {
  if (backend() == Backend::rational) return std::get<Rational>(v_);
  if (backend() == Backend::quadext && sgn(quad().b()) == 0) return quad().a();
  throw BackendMismatch("value is not rational: " + str());
}

double Scalar::to_double() const {
  switch (backend()) {
    case Backend::rational: return std::get<Rational>(v_).get_d();
    case Backend::quadext: {
      const auto& x = quad();
      double u = std::sqrt(x.r().get_d());
      return x.a().get_d() + x.b().get_d() * u;
    }
    case Backend::bigfloat: return bigfloat().to_double();
  }
  return 0;
}

std::string Scalar::str() const {
  switch (backend()) {
    case Backend::rational: return to_string(std::get<Rational>(v_));
    case Backend::quadext: {
      const auto& x = quad();
      return to_string(x.a()) + "+" + to_string(x.b()) + "*u;u2=" + to_string(x.r());
    }
    case Backend::bigfloat: return bigfloat().str();
  }
  return "?";
}

Scalar Scalar::operator-() const {
  switch (backend()) {
    case Backend::rational: return Scalar(Rational(-std::get<Rational>(v_)));
    case Backend::quadext: return Scalar(-quad());
    case Backend::bigfloat: return Scalar(-bigfloat());
  }
  return *this;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return std::decay_t<decltype(a)>(a + b); });
}
Scalar operator-(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return std::decay_t<decltype(a)>(a - b); });
}
Scalar operator*(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return std::decay_t<decltype(a)>(a * b); });
}
Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw DivisionByZero("division by zero");
  return combine(x, y, [](const auto& a, const auto& b) { return std::decay_t<decltype(a)>(a / b); });
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.backend() == y.backend()) {
    switch (x.backend()) {
      case Backend::rational: return std::get<Rational>(x.v_) == std::get<Rational>(y.v_);
      case Backend::quadext: return x.quad() == y.quad();
      case Backend::bigfloat: return x.bigfloat() == y.bigfloat();
    }
  }
  // Q sits inside Q(u): a QuadExt with no u-part equals its rational part.
  if (x.is_rational() && y.is_rational() && x.backend() != Backend::bigfloat &&
      y.backend() != Backend::bigfloat)
    return x.rational() == y.rational();
  return false;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return one_like() / pow(-e);
  Scalar result = one_like(), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

// ------------------------------------------------------------------ Field

Field Field::rational() { return Field(); }

Field Field::quadratic(const Rational& r) {
  Field f;
  f.backend_ = Backend::quadext;
  f.r_ = std::make_shared<const Rational>(r);
  return f;
}

Field Field::real(unsigned bits) {
  if (bits < 64) throw InvalidParams("BigFloat precision must be at least 64 bits");
  Field f;
  f.backend_ = Backend::bigfloat;
  f.bits_ = bits;
  return f;
}

Scalar Field::operator()(const Rational& x) const {
  switch (backend_) {
    case Backend::rational: return Scalar(x);
    case Backend::quadext: return Scalar(QuadExt(x, Rational(0), r_));
    case Backend::bigfloat: return Scalar(BigFloat(x, bits_));
  }
  return Scalar(x);
}

Scalar Field::u(const Rational& u2) const {
  Rational root;
  bool square = rational_sqrt(u2, root);
  switch (backend_) {
    case Backend::rational:
      if (!square) throw BackendMismatch("u = sqrt(" + to_string(u2) + ") is not rational; use the quadext backend");
      return Scalar(root);
    case Backend::quadext:
      if (*r_ != u2) throw BackendMismatch("field context u2=" + to_string(*r_) + " does not match " + to_string(u2));
      if (square) return Scalar(QuadExt(root, Rational(0), r_));
      return Scalar(QuadExt(Rational(0), Rational(1), r_));
    case Backend::bigfloat: {
      BigFloat x(u2, bits_);
      auto v = with_bits(bits_);
      mpfr_sqrt(v.backend().data(), x.value().backend().data(), MPFR_RNDN);
      return Scalar(BigFloat(v, bits_));
    }
  }
  return Scalar(root);
}

bool negligible(const Scalar& x, const Scalar& scale) {
  if (x.backend() != Backend::bigfloat) return x.is_zero();
  const BigFloat& v = x.bigfloat();
  BigFloat::value_type bound = scale.bigfloat().abs().value() * boost::multiprecision::pow(
                                                                     BigFloat::value_type(2), -static_cast<int>(v.bits() / 2));
  return v.abs().value() <= bound;
}

}  // namespace qracah
