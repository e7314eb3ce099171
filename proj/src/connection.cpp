#include "qracah/connection.hpp"

#include "qracah/linsolve.hpp"

namespace qracah {

namespace {
Mat2<Scalar> eval(const Mat2<Poly>& b, const Scalar& z) { return {b.a11(z), b.a12(z), b.a21(z), b.a22(z)}; }

// z^D f(a z + b/z), a polynomial when deg f <= D.
Poly compose_sigma(const Poly& f, int D, const Scalar& a, const Scalar& b) {
  if (f.degree() > D) throw InvariantViolation("compose_sigma: degree exceeds the clearing power");
  const Scalar zero = f.zero();
  Poly inner(std::vector<Scalar>{b, zero, a});  // a z^2 + b
  Poly power = Poly::constant(zero.one_like());
  Poly out(zero);
  for (int i = 0; i <= f.degree(); ++i) {
    if (!f.coeff(i).is_zero()) out += f.coeff(i) * power.shift(D - i);
    power *= inner;
  }
  return out;
}

// z^6 f(u^2/z) for deg f <= 6
Poly reverse6(const Poly& f, const Scalar& u2) {
  if (f.degree() > 6) throw InvariantViolation("reverse6: degree above 6");
  std::vector<Scalar> c(7, f.zero());
  Scalar up = f.zero().one_like();
  for (int i = 0; i <= 6; ++i) {
    c[static_cast<size_t>(6 - i)] = f.coeff(i) * up;
    up *= u2;
  }
  return Poly(std::move(c));
}

Mat2<Poly> times_z(const Mat2<Scalar>& T) {
  auto lift = [](const Scalar& c) { return Poly::monomial(c, 1); };
  return T.map(lift);
}

Mat2<Poly> scalar_identity(const Poly& p) { return {p, Poly(p.zero()), Poly(p.zero()), p}; }

ConnectionMatrix make_connection(const EnsembleParams& p, const Field& field, int s, Mat2<Poly> B) {
  ConnectionMatrix a;
  a.s = s;
  a.params = p;
  a.field = field;
  a.B = std::move(B);
  auto pq = pole_polys(p, field, s);
  a.P = pq.first;
  a.Q = pq.second;
  a.zs = pole_parameters(p, field, s);
  a.u2 = field(p.u2());
  return a;
}

// Quotient of b by z (z^2 - u^2); InvariantViolation when it does not divide.
Poly odd_factor_quotient(const Poly& b, const Scalar& u2) {
  const Scalar zero = u2.zero_like(), one = u2.one_like();
  Poly f(std::vector<Scalar>{zero, -u2, zero, one});
  Poly q(zero), r(zero);
  Poly::divmod(b, f, q, r);
  if (!r.is_zero()) throw InvariantViolation("off-diagonal entry is not divisible by z(z^2 - u^2)");
  return q;
}

Scalar pick_first_nonzero(const Vec2<Scalar>& v) { return v.x.is_zero() ? v.y : v.x; }
}  // namespace

Mat2<Scalar> ConnectionMatrix::operator()(const Scalar& z) const {
  Scalar d = P(z);
  if (d.is_zero()) throw EvaluationAtPole("A_s evaluated at a root of P_s: " + z.str());
  return (z.one_like() / d) * eval(B, z);
}

Mat2<Scalar> ConnectionMatrix::inverse_at(const Scalar& z) const {
  Scalar d = Q(z);
  if (d.is_zero()) throw EvaluationAtPole("A_s^{-1} evaluated at a root of Q_s: " + z.str());
  return (z.one_like() / d) * eval(B, z).adj();
}

std::array<Scalar, 7> ConnectionMatrix::n() const {
  const Poly& b = B.a11;
  return {b.coeff(6), b.coeff(5), b.coeff(4), b.coeff(3), b.coeff(2) / u2, b.coeff(1) / (u2 * u2),
          b.coeff(0) / (u2 * u2 * u2)};
}

std::array<Scalar, 2> ConnectionMatrix::m() const {
  Poly q = odd_factor_quotient(B.a12, u2);
  return {q.coeff(2), q.coeff(1)};
}

std::array<Scalar, 2> ConnectionMatrix::k() const {
  Poly q = odd_factor_quotient(B.a21, u2);
  return {q.coeff(2), q.coeff(1)};
}

std::array<Scalar, 6> pole_parameters(const EnsembleParams& p, const Field& field, int s) {
  Scalar q = field(p.q);
  Scalar z1 = q.pow(-s + 1);
  return {z1, z1, q, field(p.alpha) * q, field(p.delta) * q, field(p.beta * p.delta) * q};
}

std::pair<Poly, Poly> pole_polys(const EnsembleParams& p, const Field& field, int s) {
  auto z = pole_parameters(p, field, s);
  Scalar u2 = field(p.u2());
  Scalar one = field.one();
  Poly P = Poly::from_roots({z[0], u2 / z[1], z[2], u2 / z[3], z[4], u2 / z[5]}, one);
  Scalar lead = z[0] * z[2] * z[4] / (z[1] * z[3] * z[5]);
  Poly Q = lead * Poly::from_roots({u2 / z[0], z[1], u2 / z[2], z[3], u2 / z[4], z[5]}, one);
  return {P, Q};
}

ConnectionMatrix build_AN(const NodeGrid& grid, const std::vector<Scalar>& rho) {
  const auto& p = grid.params;
  const Field& F = grid.field;
  int N = p.N;
  auto z = pole_parameters(p, F, N);
  Scalar u2 = F(p.u2()), q = F(p.q), one = F.one(), zero = F.zero();
  Scalar qN = q.pow(N);
  Poly b11 = (z[2] * z[4] / (qN * z[3] * z[5])) *
             Poly::from_roots({u2 / z[0], u2 / z[1], z[2], z[3], u2 / z[4], z[5]}, one);
  Poly b22 = qN * Poly::from_roots({z[0], z[1], u2 / z[2], u2 / z[3], z[4], u2 / z[5]}, one);
  Scalar ab = F(p.alpha * p.beta);
  Scalar lo = one / (qN * ab), hi = qN / q;
  Scalar up_sum = u2 / z[0] + u2 / z[1] + z[2] + z[3] + u2 / z[4] + z[5];
  Scalar dn_sum = z[0] + z[1] + u2 / z[2] + u2 / z[3] + z[4] + u2 / z[5];
  Scalar k0 = zero, k1 = zero;
  for (int x = 0; x < N; ++x) {
    const Scalar& r = rho[static_cast<size_t>(x)];
    const Scalar& px = grid.nodes[static_cast<size_t>(x)];
    k0 += q * r * (lo - hi);
    k1 += q * r * (lo * (q * px - up_sum) - hi * (px - dn_sum));
  }
  // z (z^2 - u^2)(k0 z^2 + k1 z + k0 u^2)
  Poly odd(std::vector<Scalar>{zero, -u2, zero, one});
  Poly b21 = odd * Poly(std::vector<Scalar>{k0 * u2, k1, k0});
  return make_connection(p, F, N, {b11, Poly(zero), b21, b22});
}

ConnectionMatrix build_As_from_m(const DRHPSolution& m, const NodeGrid& grid) {
  const auto& p = grid.params;
  const Field& F = grid.field;
  int s = m.s, N = p.N, D = s + N;
  Scalar q = F(p.q), u2 = F(p.u2()), one = F.one();
  Mat2<Poly> num = m.numerator();
  Poly pi = m.pole_poly();
  // sigma(z/q) = z/q + u^2/z; sigma(z) = z + (u^2/q)/z
  auto at_shifted = [&](const Poly& f, int deg) { return compose_sigma(f, deg, one / q, u2); };
  auto at_plain = [&](const Poly& f, int deg) { return compose_sigma(f, deg, one, u2 / q); };
  Mat2<Poly> N1 = num.map([&](const Poly& f) { return at_shifted(f, D); });
  Mat2<Poly> N2 = num.map([&](const Poly& f) { return at_plain(f, D); });
  Poly pi1 = at_shifted(pi, s), pi2 = at_plain(pi, s);
  auto phis = phi_polys(p, F);
  Mat2<Poly> mid = N1 * Mat2<Poly>::diag(phis.first, phis.second, Poly(F.zero())) * N2.adj();
  Poly den = Poly::monomial(one, 2 * N) * pi1 * pi2 * phis.second;
  auto pq = pole_polys(p, F, s);
  Mat2<Poly> B = mid.map([&](const Poly& e) {
    try {
      return (pq.first * e).divexact(den);
    } catch (const CancellationFailure&) {
      throw CancellationFailure("A_" + std::to_string(s) + " from m_s keeps a pole outside the P_s roots");
    }
  });
  return make_connection(p, F, s, B);
}

bool det_identity_holds(const ConnectionMatrix& a) { return a.B.det() == a.P * a.Q; }

bool involution_holds(const ConnectionMatrix& a) {
  for (const Poly* e : {&a.B.a11, &a.B.a12, &a.B.a21, &a.B.a22})
    if (e->degree() > 6) return false;
  Mat2<Poly> rev = a.B.map([&](const Poly& f) { return reverse6(f, a.u2); });
  return rev * a.B == scalar_identity(reverse6(a.P, a.u2) * a.P);
}

bool identity_at(const ConnectionMatrix& a, const Scalar& u) {
  if (!(u * u == a.u2)) throw InvalidParams("identity_at: u^2 differs from the matrix u^2");
  Scalar pu = a.P(u);
  return eval(a.B, u) == Mat2<Scalar>::diag(pu, pu, u.zero_like());
}

bool shape_holds(const ConnectionMatrix& a) {
  for (const Poly* e : {&a.B.a11, &a.B.a12, &a.B.a21, &a.B.a22})
    if (e->degree() > 6) return false;
  const Scalar& u2 = a.u2;
  Scalar u6 = u2 * u2 * u2;
  if (!(reverse6(a.B.a11, u2) == u6 * a.B.a22)) return false;
  for (const Poly* e : {&a.B.a12, &a.B.a21}) {
    Poly q(u2.zero_like());
    try {
      q = odd_factor_quotient(*e, u2);
    } catch (const InvariantViolation&) {
      return false;
    }
    if (q.degree() > 2 || !(q.coeff(0) == u2 * q.coeff(2))) return false;
  }
  return true;
}

NilpotentJump jump_from_triple(const TransitionTriple& t) {
  Scalar d = dot(t.v1, t.v2);
  if (d.is_zero()) throw DegenerateJump("v1^T v2 = 0");
  Mat2<Scalar> T = (d.one_like() / d) * outer(t.v, t.v1);
  return {T.a11, T.a12, T.a21};
}

TransitionTriple extract_triple(const ConnectionMatrix& a, const std::optional<Scalar>& first) {
  const Scalar& z1 = a.zs[0];
  const Scalar zero = z1.zero_like(), one = z1.one_like();
  Scalar dp = a.P.derivative()(z1), dq = a.Q.derivative()(z1);
  if (dp.is_zero() || dq.is_zero()) throw RankFailure("pole at z1 is not simple");
  Mat2<Scalar> R = (one / dp) * eval(a.B, z1);
  Mat2<Poly> adjB = a.B.adj();
  Mat2<Scalar> Ri = (one / dq) * eval(adjB, z1);
  // Exact on Q and Q(u); relative to the larger product on bigfloat.
  auto small = [](const Scalar& x, const Scalar& p1, const Scalar& p2) { return negligible(x, p1.is_zero() ? p2 : p1); };
  auto rank_one = [&](const Mat2<Scalar>& r) {
    bool nonzero = !(r.a11.is_zero() && r.a12.is_zero() && r.a21.is_zero() && r.a22.is_zero());
    return nonzero && small(r.det(), r.a11 * r.a22, r.a12 * r.a21);
  };
  if (!rank_one(R)) throw RankFailure("residue of A_s at z1 is not rank 1");
  if (!rank_one(Ri)) throw RankFailure("residue of A_s^{-1} at z1 is not rank 1");

  TransitionTriple t;
  t.v = R.col1().is_zero() ? R.col2() : R.col1();
  Scalar target = first ? *first : one;
  t.v = (target / pick_first_nonzero(t.v)) * t.v;
  Vec2<Scalar> row1{Ri.a11, Ri.a12}, row2{Ri.a21, Ri.a22};
  t.v1 = row1.is_zero() ? row2 : row1;
  Vec2<Scalar> killed = Ri * t.v;
  if (!small(killed.x, Ri.a11 * t.v.x, Ri.a12 * t.v.y) || !small(killed.y, Ri.a21 * t.v.x, Ri.a22 * t.v.y))
    throw RankFailure("residue of A_s^{-1} does not annihilate v");

  Mat2<Scalar> C0 = adjB.map([&](const Poly& e) { return laurent_expand(RatFunc(e, a.Q), z1, 0)[1]; });
  Scalar q = a.field(a.params.q);
  int s = a.s;
  Scalar c = (q.pow(-s) - a.u2 * q.pow(s - 1)) / z1;
  Vec2<Scalar> rhs = C0 * t.v;
  std::vector<std::vector<Scalar>> rows = {{c * Ri.a11, c * Ri.a12}, {c * Ri.a21, c * Ri.a22}, {t.v.x, t.v.y}};
  auto sol = solve_unique(rows, {rhs.x, rhs.y, zero});
  t.v2 = {sol[0], sol[1]};
  return t;
}

ConnectionMatrix isomonodromy_step(const ConnectionMatrix& a, const NilpotentJump& T, const NodeGrid& grid) {
  const auto& p = grid.params;
  const Field& F = grid.field;
  int s = a.s;
  if (s >= grid.size()) throw IndexOutOfRange("isomonodromy_step past the last node");
  Scalar q = F(p.q), u2 = a.u2, one = F.one();
  const Scalar& ps = grid.nodes[static_cast<size_t>(s)];
  // z (sigma(z/q) - pi_s) and z (sigma(z) - pi_s)
  Poly L1(std::vector<Scalar>{u2, -ps, one / q});
  Poly L2(std::vector<Scalar>{u2 / q, -ps, one});
  Mat2<Poly> zT = times_z(T.matrix());
  Mat2<Poly> num = (scalar_identity(L1) + zT) * a.B * (scalar_identity(L2) - zT);
  auto pq = pole_polys(p, F, s + 1);
  Poly den = L1 * L2 * a.P;
  Mat2<Poly> B = num.map([&](const Poly& e) {
    try {
      return (pq.first * e).divexact(den);
    } catch (const CancellationFailure&) {
      throw CancellationFailure("A_" + std::to_string(s + 1) + " keeps a pole outside the P_{s+1} roots");
    }
  });
  return make_connection(p, F, s + 1, B);
}

TransitionTriple advance_triple(const ConnectionMatrix& a, const NilpotentJump& T, const TransitionTriple& t,
                                const NodeGrid& grid) {
  const auto& p = grid.params;
  const Field& F = grid.field;
  int s = a.s;
  Scalar q = F(p.q), u2 = a.u2, one = F.one();
  Scalar zs = q.pow(-s), zn = q.pow(-s - 1);
  const Scalar& ps = grid.nodes[static_cast<size_t>(s)];
  Scalar pn = sigma(zn, p);
  Mat2<Scalar> Tm = T.matrix();
  Mat2<Scalar> I = Mat2<Scalar>::diag(one, one, F.zero());
  Scalar gap = pn - ps;
  if (gap.is_zero()) throw EvaluationAtPole("pi_{s+1} = pi_s");
  Mat2<Scalar> Rq = I + (one / gap) * Tm;
  Mat2<Scalar> Rqi = I - (one / gap) * Tm;
  Mat2<Scalar> As = a(zs);
  Mat2<Scalar> Asi = a.inverse_at(zs);

  TransitionTriple out;
  out.v = Rq * (As * t.v);
  out.v1 = (Asi * Rqi).transpose() * t.v1;

  // G(z) = A^{-1}(z) R^{-1}(z/q) = adj B (L1 I - z T) / (Q L1)
  Poly L1(std::vector<Scalar>{u2, -ps, one / q});
  Mat2<Poly> Gnum = a.B.adj() * (scalar_identity(L1) - times_z(Tm));
  Poly Gden = a.Q * L1;
  Mat2<Scalar> G1 = Gnum.map([&](const Poly& e) { return RatFunc(e, Gden).derivative()(zs); });
  Scalar lead = one / (zn - u2 * q.pow(s));
  Vec2<Scalar> inner = zs * (G1 * out.v) + (zs - u2 * q.pow(s - 1)) * t.v2;
  out.v2 = lead * (Rq * (As * inner));
  return out;
}

Scalar gap_double_ratio(const TransitionTriple& at_s, const TransitionTriple& at_next, int s, const NodeGrid& grid) {
  const auto& p = grid.params;
  Scalar d0 = det2(at_s.v, at_s.v2);
  if (d0.is_zero()) throw ZeroDeterminant("det[v, v2] = 0 at s = " + std::to_string(s));
  if (s + 1 >= grid.size()) throw IndexOutOfRange("gap_double_ratio needs s + 1 <= M");
  Scalar zs = grid.field(p.q).pow(-s);
  auto phi = phi_factors(zs, p);
  Scalar r = phi.second / phi.first;
  return grid.weights[static_cast<size_t>(s + 1)] / grid.weights[static_cast<size_t>(s)] * r * r *
         det2(at_next.v, at_next.v2) / d0;
}

GapTable gap_table_connection(const NodeGrid& grid) {
  const auto& p = grid.params;
  auto rho = rho_values(grid);
  auto seeds = seed_values(grid, rho);
  GapTable out{{}, "connection"};
  out.D.emplace(p.N, seeds.first);
  out.D.emplace(p.N + 1, seeds.second);
  ConnectionMatrix a = build_AN(grid, rho);
  TransitionTriple t = extract_triple(a);
  for (int s = p.N; s + 1 <= p.M; ++s) {
    NilpotentJump T = jump_from_triple(t);
    TransitionTriple next = advance_triple(a, T, t, grid);
    Scalar ratio = gap_double_ratio(t, next, s, grid);
    const Scalar& d0 = out.D.at(s);
    const Scalar& d1 = out.D.at(s + 1);
    out.D.emplace(s + 2, ratio * d1 * d1 / d0);
    a = isomonodromy_step(a, T, grid);
    t = next;
  }
  return out;
}

std::vector<ConnectionMatrix> connection_sequence(const NodeGrid& grid) {
  const auto& p = grid.params;
  std::vector<ConnectionMatrix> out;
  ConnectionMatrix a = build_AN(grid, rho_values(grid));
  out.push_back(a);
  for (int s = p.N; s < p.M; ++s) {
    NilpotentJump T = jump_from_triple(extract_triple(a));
    a = isomonodromy_step(a, T, grid);
    out.push_back(a);
  }
  return out;
}

}  // namespace qracah
