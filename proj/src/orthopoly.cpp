#include "qracah/orthopoly.hpp"


#include <cmath>

namespace qracah {

namespace {
Scalar moment_ip(const Poly& f, const Poly& g, const std::vector<Scalar>& m) {
  Scalar acc = m.front().zero_like();
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (int j = 0; j <= g.degree(); ++j) acc += f.coeff(i) * g.coeff(j) * m[static_cast<size_t>(i + j)];
  }
  return acc;
}
}  // namespace

Scalar inner_product(const Poly& f, const Poly& g, const std::vector<Scalar>& nodes,
                     const std::vector<Scalar>& weights) {
  Scalar acc = nodes.front().zero_like();
  for (size_t x = 0; x < nodes.size(); ++x) acc += weights[x] * f(nodes[x]) * g(nodes[x]);
  return acc;
}

OPSystem build_ops(const std::vector<Scalar>& nodes, const std::vector<Scalar>& weights, int nmax) {
  if (nodes.empty() || nodes.size() != weights.size()) throw InvalidParams("build_ops needs matching nonempty nodes/weights");
  if (nmax < 0) throw InvalidParams("build_ops needs nmax >= 0");
  const Scalar zero = nodes.front().zero_like(), one = zero.one_like();
  OPSystem ops;
  for (int k = 0; k <= 2 * nmax + 1; ++k) {
    Scalar m = zero;
    for (size_t x = 0; x < nodes.size(); ++x) m += weights[x] * nodes[x].pow(k);
    ops.moments.push_back(m);
  }
  Poly z = Poly::monomial(one, 1);
  ops.P.push_back(Poly::constant(one));
  for (int n = 0; n <= nmax; ++n) {
    const Poly& Pn = ops.P.back();
    ops.c.push_back(moment_ip(Pn, Pn, ops.moments));
    if (n == nmax) break;
    if (ops.c.back().is_zero())
      throw DegenerateWeight("zero norm at degree " + std::to_string(n) + " (Hankel minor vanishes)");
    Scalar a = moment_ip(z * Pn, Pn, ops.moments) / ops.c.back();
    Poly next = (z - Poly::constant(a)) * Pn;
    if (n > 0) next -= (ops.c[static_cast<size_t>(n)] / ops.c[static_cast<size_t>(n - 1)]) * ops.P[static_cast<size_t>(n - 1)];
    ops.P.push_back(next);
  }
  return ops;
}

OPSystem build_ops(const NodeGrid& grid) { return build_ops(grid.nodes, grid.weights, grid.size() - 1); }

namespace {
void check_xy(const NodeGrid& grid, int x, int y) {
  if (x < 0 || y < 0 || x >= grid.size() || y >= grid.size())
    throw IndexOutOfRange("kernel index outside the node grid");
}
}  // namespace

Scalar cd_kernel(const OPSystem& ops, const NodeGrid& grid, int N, int x, int y) {
  check_xy(grid, x, y);
  if (N < 1 || N > static_cast<int>(ops.c.size())) throw IndexOutOfRange("kernel rank outside the OP system");
  const Scalar &a = grid.nodes[static_cast<size_t>(x)], &b = grid.nodes[static_cast<size_t>(y)];
  Scalar acc = a.zero_like();
  for (int i = 0; i < N; ++i) {
    const Poly& Pi = ops.P[static_cast<size_t>(i)];
    acc += Pi(a) * Pi(b) / ops.c[static_cast<size_t>(i)];
  }
  return grid.weights[static_cast<size_t>(x)] * acc;
}

Scalar cd_kernel_two_point(const OPSystem& ops, const NodeGrid& grid, int N, int x, int y) {
  check_xy(grid, x, y);
  if (x == y) throw InvalidParams("two-point kernel form needs x != y");
  if (N < 1 || N >= static_cast<int>(ops.P.size())) throw IndexOutOfRange("kernel rank outside the OP system");
  const Scalar &a = grid.nodes[static_cast<size_t>(x)], &b = grid.nodes[static_cast<size_t>(y)];
  const Poly &PN = ops.P[static_cast<size_t>(N)], &PM = ops.P[static_cast<size_t>(N - 1)];
  Scalar num = PN(a) * PM(b) - PM(a) * PN(b);
  return grid.weights[static_cast<size_t>(x)] * num / (ops.c[static_cast<size_t>(N - 1)] * (a - b));
}

BigFloat qpochhammer_inf(const Rational& a, const Rational& q, unsigned bits) {
  if (!(abs(q) < 1)) throw NonConvergent("(a; q)_inf needs |q| < 1, got q = " + to_string(q));
  BigFloat one(Rational(1), bits), r = one, t(a, bits), qf(q, bits);
  // Once |a q^j| < 1/2 the tail prod_{i>=j}(1 - a q^i) has |log| at most
  // 2|a q^j|/(1-|q|); stop when that is below 2^-(bits+8).
  double lq = std::log2(std::fabs(q.get_d()));
  double bound_bits = bits + 8 + std::log2(2.0 / (1.0 - std::fabs(q.get_d())));
  double la = sgn(a) == 0 ? -1e9 : std::log2(std::fabs(a.get_d()));
  long terms = la < -bound_bits ? 0 : static_cast<long>(std::ceil((la + bound_bits) / -lq)) + 1;
  for (long j = 0; j < terms; ++j) {
    r = r * (one - t);
    t = t * qf;
  }
  return r;
}

BigFloat cn_closed_form(const EnsembleParams& p, int n, unsigned bits) {
  if (n < 0 || n > p.M) throw IndexOutOfRange("cn_closed_form degree outside [0, M]");
  // Guard digits for the products; result rounded back to `bits`.
  unsigned w = bits + 32;
  const Rational &q = p.q, &a = p.alpha, &b = p.beta, &d = p.delta;
  Rational g = p.gamma();
  auto inf = [&](const Rational& x) { return qpochhammer_inf(x, q, w); };
  auto fin = [&](const Rational& x) { return BigFloat(qpochhammer(x, q, n), w); };
  BigFloat pre = inf(g * d * q * q) * inf(g / (a * b)) * inf(d / a) * inf(1 / b);
  BigFloat pre_den = inf(g * d * q / a) * inf(g * q / b) * inf(d * q) * inf(1 / (a * b * q));
  if (pre_den.is_zero()) throw NonConvergent("closed-form norm has a vanishing infinite product");
  Rational mid = (1 - a * b * q) * rpow(g * d * q, n) / (1 - a * b * rpow(q, 2 * n + 1));
  BigFloat tail = fin(q) * fin(b * q) * fin(a * q / d) * fin(a * b * q / g);
  BigFloat tail_den = fin(a * b * q) * fin(a * q) * fin(b * d * q) * fin(g * q);
  BigFloat rn_norm = pre / pre_den * BigFloat(mid, w) * tail / tail_den;
  // The closed-form norm belongs to the 4phi3-normalized polynomial; divide by the
  // square of its leading coefficient in sigma(q^-x) to get the monic norm.
  Rational lead = rpow(q, n * (n + 1) / 2) * qpochhammer(rpow(q, -n), q, n) * qpochhammer(Rational(a * b * rpow(q, n + 1)), q, n) /
                  (qpochhammer(Rational(a * q), q, n) * qpochhammer(Rational(b * d * q), q, n) *
                   qpochhammer(Rational(g * q), q, n) * qpochhammer(q, q, n));
  BigFloat r = rn_norm / BigFloat(Rational(lead * lead), w);
  return BigFloat(r.value(), bits);
}

}  // namespace qracah
