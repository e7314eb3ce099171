#include "qracah/drhp.hpp"

#include "qracah/linsolve.hpp"

namespace qracah {

namespace {
Mat2<Scalar> eval_poly(const Mat2<Poly>& p, const Scalar& z) {
  return {p.a11(z), p.a12(z), p.a21(z), p.a22(z)};
}
}  // namespace

Mat2<Scalar> DRHPSolution::operator()(const Scalar& z) const {
  Mat2<Scalar> out = eval_poly(poly, z);
  for (size_t i = 0; i < poles.size(); ++i) {
    Scalar d = z - poles[i];
    if (d.is_zero()) throw EvaluationAtPole("m_s evaluated at the node " + poles[i].str());
    out = out + (z.one_like() / d) * res[i];
  }
  return out;
}

Mat2<Scalar> DRHPSolution::derivative(const Scalar& z) const {
  Mat2<Poly> dp = poly.map([](const Poly& p) { return p.derivative(); });
  Mat2<Scalar> out = eval_poly(dp, z);
  for (size_t i = 0; i < poles.size(); ++i) {
    Scalar d = z - poles[i];
    if (d.is_zero()) throw EvaluationAtPole("m_s' evaluated at the node " + poles[i].str());
    out = out - (z.one_like() / (d * d)) * res[i];
  }
  return out;
}

Poly DRHPSolution::pole_poly() const { return Poly::from_roots(poles, poly.a11.zero().one_like()); }

Mat2<Poly> DRHPSolution::numerator() const {
  Poly pi = pole_poly();
  Mat2<Poly> out = poly.map([&](const Poly& p) { return pi * p; });
  for (size_t i = 0; i < poles.size(); ++i) {
    Poly cof = pi.divexact(Poly::linear(poles[i]));
    out = out + res[i].map([&](const Scalar& c) { return c * cof; });
  }
  return out;
}

DRHPSolution build_mN(const NodeGrid& grid, const std::vector<Scalar>& rho) {
  int N = grid.params.N;
  const Scalar zero = grid.field.zero(), one = grid.field.one();
  DRHPSolution m;
  m.s = N;
  m.poles.assign(grid.nodes.begin(), grid.nodes.begin() + N);
  Poly pi = Poly::from_roots(m.poles, one);
  Poly pid = pi.derivative();
  Poly low(zero);
  for (int x = 0; x < N; ++x) {
    low += rho[static_cast<size_t>(x)] * pi.divexact(Poly::linear(m.poles[static_cast<size_t>(x)]));
    // 1/Pi = sum_x (1/Pi'(pi_x)) / (z - pi_x)
    m.res.push_back({zero, zero, zero, one / pid(m.poles[static_cast<size_t>(x)])});
  }
  m.poly = {pi, Poly(zero), low, Poly(zero)};
  return m;
}

DRHPSolution build_ms_direct(const NodeGrid& grid, int s) {
  int N = grid.params.N;
  if (s < N || s > grid.size()) throw IndexOutOfRange("build_ms_direct needs N <= s <= M+1");
  std::vector<Scalar> nodes(grid.nodes.begin(), grid.nodes.begin() + s);
  std::vector<Scalar> w(grid.weights.begin(), grid.weights.begin() + s);
  OPSystem ops = build_ops(nodes, w, N);
  const Poly& PN = ops.P[static_cast<size_t>(N)];
  Poly PM = ops.P[static_cast<size_t>(N - 1)] / ops.c[static_cast<size_t>(N - 1)];
  const Scalar zero = grid.field.zero();
  DRHPSolution m;
  m.s = s;
  m.poles = nodes;
  m.poly = {PN, Poly(zero), PM, Poly(zero)};
  for (int x = 0; x < s; ++x) {
    const Scalar& px = nodes[static_cast<size_t>(x)];
    const Scalar& wx = w[static_cast<size_t>(x)];
    m.res.push_back({zero, PN(px) * wx, zero, PM(px) * wx});
  }
  return m;
}

namespace {
struct JumpData {
  Scalar a, b, c, d, w;
};

JumpData jump_data(const DRHPSolution& m, const NodeGrid& grid) {
  if (m.s >= grid.size()) throw IndexOutOfRange("no node pi_s left to add");
  const Scalar& ps = grid.nodes[static_cast<size_t>(m.s)];
  const Scalar& w = grid.weights[static_cast<size_t>(m.s)];
  Mat2<Scalar> v = m(ps), dv = m.derivative(ps);
  return {v.a11, v.a21, v.a12 - w * dv.a11, v.a22 - w * dv.a21, w};
}
}  // namespace

NilpotentJump solve_T(const DRHPSolution& m, const NodeGrid& grid) {
  JumpData j = jump_data(m, grid);
  const Scalar zero = j.a.zero_like();
  // unknowns (t11, t12, t21); t22 = -t11
  std::vector<std::vector<Scalar>> rows = {
      {j.a, j.b, zero},   // kernel, first row
      {-j.b, zero, j.a},  // kernel, second row
      {j.c, j.d, zero},   // residue identity, first row
      {-j.d, zero, j.c},  // residue identity, second row
  };
  std::vector<Scalar> rhs = {zero, zero, j.w * j.a, j.w * j.b};
  std::vector<Scalar> t;
  try {
    t = solve_unique(rows, rhs);
  } catch (const NoSolution& e) {
    throw DegenerateJump(std::string("jump matrix not determined: ") + e.what());
  }
  NilpotentJump T{t[0], t[1], t[2]};
  if (T.t11.is_zero()) throw DegenerateJump("t11 = 0 at s = " + std::to_string(m.s));
  if (!negligible(T.t11 * T.t11 + T.t12 * T.t21, T.t11 * T.t11)) throw InvariantViolation("solved jump matrix is not nilpotent");
  return T;
}

NilpotentJump solve_T_closed_form(const DRHPSolution& m, const NodeGrid& grid) {
  JumpData j = jump_data(m, grid);
  Scalar det = j.b * j.c - j.a * j.d;
  if (det.is_zero()) throw DegenerateJump("closed-form jump has a zero denominator");
  Scalar f = j.w / det;
  return {f * j.a * j.b, -(f * j.a * j.a), f * j.b * j.b};
}

DRHPSolution advance_m(const DRHPSolution& m, const NilpotentJump& T, const NodeGrid& grid) {
  if (m.s >= grid.size()) throw IndexOutOfRange("no node pi_s left to add");
  const Scalar& ps = grid.nodes[static_cast<size_t>(m.s)];
  Mat2<Scalar> Tm = T.matrix();
  const Scalar one = ps.one_like();
  DRHPSolution out;
  out.s = m.s + 1;
  out.poles = m.poles;
  out.poles.push_back(ps);
  // T P(z)/(z - ps) = T (P(z) - P(ps))/(z - ps) + T P(ps)/(z - ps)
  Mat2<Poly> quot = m.poly.map([&](const Poly& p) {
    Poly shifted = p - Poly::constant(p(ps));
    return shifted.divexact(Poly::linear(ps));
  });
  Mat2<Poly> Tpoly = {Tm.a11 * quot.a11 + Tm.a12 * quot.a21, Tm.a11 * quot.a12 + Tm.a12 * quot.a22,
                      Tm.a21 * quot.a11 + Tm.a22 * quot.a21, Tm.a21 * quot.a12 + Tm.a22 * quot.a22};
  out.poly = m.poly + Tpoly;
  Mat2<Scalar> new_res = Tm * eval_poly(m.poly, ps);
  Mat2<Scalar> I = Mat2<Scalar>::diag(one, one, ps.zero_like());
  for (size_t i = 0; i < m.poles.size(); ++i) {
    Scalar inv = one / (m.poles[i] - ps);
    out.res.push_back((I + inv * Tm) * m.res[i]);
    new_res = new_res - inv * (Tm * m.res[i]);
  }
  out.res.push_back(new_res);
  // Residue at pi_s must be [[0, w a], [0, w b]] with [a; b] the regular first column.
  const Scalar& w = grid.weights[static_cast<size_t>(m.s)];
  Mat2<Scalar> at = m(ps);
  Mat2<Scalar> next = (I * at) + Tm * m.derivative(ps);
  if (!new_res.a11.is_zero() || !new_res.a21.is_zero() || !(new_res.a12 == w * next.a11) ||
      !(new_res.a22 == w * next.a21)) {
    if (ps.backend() != Backend::bigfloat)
      throw InvariantViolation("jump condition fails at the new node pi_" + std::to_string(m.s));
  }
  return out;
}

Scalar gap_ratio_drhp(const DRHPSolution& m, const NilpotentJump& T, const NodeGrid& grid) {
  if (T.t12.is_zero()) throw DegenerateJump("t12 = 0");
  const Scalar& ps = grid.nodes[static_cast<size_t>(m.s)];
  Scalar m11 = m(ps).a11;
  return grid.weights[static_cast<size_t>(m.s)] * m11 * m11 / T.t12;
}

bool det_is_one(const DRHPSolution& m) {
  Mat2<Poly> n = m.numerator();
  Poly pi = m.pole_poly();
  return n.det() == pi * pi;
}

namespace {
// Coefficient test for E(z) z^e = expected + O(1/z), with E = p + sum r_x/(z - pi_x).
bool entry_asymptotics(const Poly& p, const std::vector<Scalar>& poles, const std::vector<Scalar>& r, int e,
                       const Scalar& expected) {
  const Scalar zero = expected.zero_like();
  // z^{i+e} from the polynomial part
  for (int i = 0; i <= p.degree(); ++i) {
    int power = i + e;
    if (power > 0 && !p.coeff(i).is_zero()) return false;
  }
  // z^{e-j-1} from the moments mu_j = sum r_x pi_x^j
  Scalar c0 = (-e >= 0) ? p.coeff(-e) : zero;
  for (int j = 0; j <= e - 1; ++j) {
    Scalar mu = zero;
    for (size_t x = 0; x < poles.size(); ++x) mu += r[x] * poles[x].pow(j);
    if (j < e - 1 && !mu.is_zero()) return false;
    if (j == e - 1) c0 += mu;
  }
  return c0 == expected;
}
}  // namespace

bool asymptotics_hold(const DRHPSolution& m, int N, int k) {
  const Scalar zero = m.poly.a11.zero(), one = zero.one_like();
  auto col = [&](int i, int j) {
    std::vector<Scalar> r;
    for (const auto& R : m.res) r.push_back(i == 1 ? (j == 1 ? R.a11 : R.a12) : (j == 1 ? R.a21 : R.a22));
    return r;
  };
  return entry_asymptotics(m.poly.a11, m.poles, col(1, 1), -N, one) &&
         entry_asymptotics(m.poly.a12, m.poles, col(1, 2), k, zero) &&
         entry_asymptotics(m.poly.a21, m.poles, col(2, 1), -N, zero) &&
         entry_asymptotics(m.poly.a22, m.poles, col(2, 2), k, one);
}

bool jump_conditions_hold(const DRHPSolution& m, const NodeGrid& grid) {
  for (size_t x = 0; x < m.poles.size(); ++x) {
    const Scalar& px = m.poles[x];
    const Mat2<Scalar>& R = m.res[x];
    if (!R.a11.is_zero() || !R.a21.is_zero()) return false;
    // first column at px from the other terms
    Scalar a = m.poly.a11(px), b = m.poly.a21(px);
    for (size_t y = 0; y < m.poles.size(); ++y) {
      if (y == x) continue;
      Scalar inv = px.one_like() / (px - m.poles[y]);
      a += inv * m.res[y].a11;
      b += inv * m.res[y].a21;
    }
    const Scalar& w = grid.weights[x];
    if (!(R.a12 == w * a) || !(R.a22 == w * b)) return false;
  }
  return true;
}

GapTable gap_table_drhp(const NodeGrid& grid) {
  const auto& p = grid.params;
  auto rho = rho_values(grid);
  auto seeds = seed_values(grid, rho);
  GapTable t{{}, "drhp"};
  Scalar D = seeds.first;
  t.D.emplace(p.N, D);
  DRHPSolution m = build_mN(grid, rho);
  for (int s = p.N; s <= p.M; ++s) {
    NilpotentJump T = solve_T(m, grid);
    D *= gap_ratio_drhp(m, T, grid);
    t.D.emplace(s + 1, D);
    if (s < p.M) m = advance_m(m, T, grid);
  }
  return t;
}

}  // namespace qracah
