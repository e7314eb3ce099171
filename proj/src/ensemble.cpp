#include "qracah/ensemble.hpp"

namespace qracah {

EnsembleParams preset(const std::string& name) {
  EnsembleParams p;
  if (name == "P0") {
    p.q = make_rational(1, 4);
    p.M = 3;
    p.N = 2;
    p.alpha = 256;
    p.beta = 256;
    p.delta = make_rational(1, 1024);
  } else if (name == "P1") {
    p.q = make_rational(1, 2);
    p.M = 4;
    p.N = 2;
    p.alpha = 32;
    p.beta = 32;
    p.delta = make_rational(1, 64);
  } else {
    throw InvalidParams("unknown preset '" + name + "' (known: P0, P1)");
  }
  return p;
}

std::vector<std::string> validate(const EnsembleParams& p) {
  std::vector<std::string> bad;
  if (!(sgn(p.q) > 0 && p.q < 1)) bad.push_back("0<q<1");
  if (p.N < 1) bad.push_back("N>=1");
  if (p.M < p.N - 1) bad.push_back("M>=N-1");
  if (sgn(p.alpha) <= 0) bad.push_back("alpha>0");
  if (sgn(p.beta) <= 0) bad.push_back("beta>0");
  if (sgn(p.delta) < 0) bad.push_back("delta>=0");
  // Everything below involves gamma = q^{-M-1}, meaningless for bad q.
  if (!bad.empty() && (sgn(p.q) <= 0 || p.q >= 1)) return bad;
  Rational g = p.gamma();
  if (!(p.beta * p.delta < 1)) bad.push_back("beta*delta<1");
  if (!(p.beta >= g)) bad.push_back("beta>=gamma");
  if (!(p.alpha >= g)) bad.push_back("alpha>=gamma");
  return bad;
}

void require_valid(const EnsembleParams& p) {
  auto bad = validate(p);
  // Node ordering needs gamma*delta*q < 1 on top of the weight assumptions.
  if (bad.empty() && !(p.gamma() * p.delta * p.q < 1)) bad.push_back("gamma*delta*q<1");
  if (bad.empty()) return;
  std::string msg = "parameter assumptions violated:";
  for (const auto& b : bad) msg += " " + b;
  throw InvalidParams(msg);
}

Scalar qpochhammer(const Scalar& y, const Scalar& q, int k) {
  Scalar r = y.one_like(), t = y;
  for (int j = 0; j < k; ++j) {
    r *= y.one_like() - t;
    t *= q;
  }
  return r;
}

Rational qpochhammer(const Rational& y, const Rational& q, int k) {
  Rational r = 1, t = y;
  for (int j = 0; j < k; ++j) {
    r *= 1 - t;
    t *= q;
  }
  return r;
}

namespace {
void check_index(int x, const EnsembleParams& p) {
  if (x < 0 || x > p.M) throw IndexOutOfRange("weight index " + std::to_string(x) + " outside [0, M]");
}
}  // namespace

Rational weight(int x, const EnsembleParams& p) {
  check_index(x, p);
  const Rational &q = p.q, &a = p.alpha, &b = p.beta, &d = p.delta;
  Rational g = p.gamma();
  Rational num = qpochhammer(Rational(a * q), q, x) * qpochhammer(Rational(b * d * q), q, x) *
                 qpochhammer(Rational(g * q), q, x) * qpochhammer(Rational(g * d * q), q, x);
  Rational den = qpochhammer(q, q, x) * qpochhammer(Rational(g * d * q / a), q, x) *
                 qpochhammer(Rational(g * q / b), q, x) * qpochhammer(Rational(d * q), q, x);
  den *= rpow(a * b * q, x) * (1 - g * d * q);
  if (sgn(den) == 0) throw InvalidParams("q-Racah weight has a vanishing denominator at x=" + std::to_string(x));
  return num / den * (1 - g * d * rpow(q, 2 * x + 1));
}

Rational weight_qhahn(int x, const EnsembleParams& p) {
  check_index(x, p);
  const Rational &q = p.q, &a = p.alpha, &b = p.beta;
  Rational qm = rpow(q, -p.M);
  Rational num = qpochhammer(Rational(a * q), q, x) * qpochhammer(qm, q, x);
  Rational den = qpochhammer(q, q, x) * qpochhammer(Rational(qm / b), q, x) * rpow(a * b * q, x);
  if (sgn(den) == 0) throw InvalidParams("q-Hahn weight has a vanishing denominator at x=" + std::to_string(x));
  return num / den;
}

Rational weight_ratio_closed_form(int x, const EnsembleParams& p) {
  Scalar z(rpow(p.q, -x));
  auto [pp, pm] = phi_factors(z, p);
  Rational u2 = p.u2(), z2 = rpow(p.q, -2 * x);
  return pp.rational() * (z2 - p.q * u2) / (p.q * pm.rational() * (z2 - u2 / p.q));
}

Scalar sigma(const Scalar& z, const EnsembleParams& p) {
  if (z.is_zero()) throw ZeroArgument("sigma(0) is undefined");
  return z + z.lift(p.u2()) / (z.lift(p.q) * z);
}

Rational node(int x, const EnsembleParams& p) { return sigma(Scalar(rpow(p.q, -x)), p).rational(); }

std::pair<Scalar, Scalar> phi_factors(const Scalar& z, const EnsembleParams& p) {
  auto c = [&](const Rational& r) { return z.lift(r); };
  const Rational &q = p.q, &a = p.alpha, &b = p.beta, &d = p.delta;
  Rational g = p.gamma();
  Scalar plus = (z - c(a * q)) * (z - c(b * d * q)) * (z - c(g * q)) * (z - c(g * d * q));
  Scalar minus = c(a * b) * (z - c(g * d * q / a)) * (z - c(g * q / b)) * (z - c(d * q)) * (z - c(q));
  return {plus, minus};
}

std::pair<Poly, Poly> phi_polys(const EnsembleParams& p, const Field& f) {
  const Rational &q = p.q, &a = p.alpha, &b = p.beta, &d = p.delta;
  Rational g = p.gamma();
  Poly plus = Poly::from_roots({f(a * q), f(b * d * q), f(g * q), f(g * d * q)}, f.one());
  Poly minus = f(a * b) * Poly::from_roots({f(g * d * q / a), f(g * q / b), f(d * q), f(q)}, f.one());
  return {plus, minus};
}

NodeGrid make_grid(const EnsembleParams& p, const Field& field) {
  NodeGrid g{p, field, {}, {}};
  for (int x = 0; x <= p.M; ++x) {
    g.nodes.push_back(field(node(x, p)));
    g.weights.push_back(field(weight(x, p)));
  }
  return g;
}

int printed_case(int a, int b, int c, int t) {
  (void)a;
  int T = b + c, S = c;
  if (t < S && t < T - S) return 1;
  if (S - 1 < t && t < T - S + 1) return 2;
  if (T - S + 1 < t && t < S) return 3;
  if (S - 1 < t && T - S - 1 < t) return 4;
  return 0;
}

SliceEnsemble tiling_to_ensemble(int a, int b, int c, int t, const Rational& kappa2, const Rational& q,
                                 CaseRule rule) {
  if (a < 1 || b < 1 || c < 1) throw InvalidParams("hexagon sides must be >= 1");
  int N = a, T = b + c, S = c;
  if (t < 0 || t > T) throw InvalidParams("slice t outside [0, b+c]");
  if (!(sgn(q) > 0 && q < 1)) throw InvalidParams("tiling needs 0<q<1");
  if (sgn(kappa2) < 0 || !(kappa2 < rpow(q, T - 1)))
    throw InvalidKappa("kappa^2 = " + to_string(kappa2) + " outside [0, q^(T-1))");

  SliceEnsemble out;
  out.printed_case = printed_case(a, b, c, t);
  int cs = out.printed_case;
  if (rule == CaseRule::verified && (cs == 0 || cs == 3)) cs = 4;
  if (cs == 0) throw NoCaseApplies("no case of the tiling dictionary covers t=" + std::to_string(t));
  out.case_index = cs;

  EnsembleParams& p = out.params;
  p.q = q;
  p.N = N;
  auto Q = [&](int e) { return rpow(q, e); };
  switch (cs) {
    case 1:
      p.alpha = Q(-S - N), p.beta = Q(S - T - N), p.delta = kappa2 * Q(-S + N), p.M = t + N - 1;
      break;
    case 2:
      p.alpha = Q(-t - N), p.beta = Q(t - T - N), p.delta = kappa2 * Q(-t + N), p.M = S + N - 1;
      break;
    case 3:
      p.alpha = Q(-T - N + t), p.beta = Q(-T - N), p.delta = kappa2 * Q(-T + t + N), p.M = T - S + N - 1;
      out.shift = t + S - T;
      break;
    default:
      p.alpha = Q(-T - N + S), p.beta = Q(-S - N), p.delta = kappa2 * Q(-T + S + N), p.M = T - t + N - 1;
      out.shift = t + S - T;
      break;
  }
  return out;
}

}  // namespace qracah
