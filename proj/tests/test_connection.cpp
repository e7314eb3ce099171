#include <doctest.h>

#include "gen.hpp"
#include "qracah/connection.hpp"
#include "qracah/errors.hpp"
#include "qracah/painleve.hpp"

using namespace qracah;
using testgen::Gen;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

EnsembleParams random_valid(Gen& g) {
  EnsembleParams p;
  for (;;) {
    p.q = R(1, g.range(2, 5));
    p.N = static_cast<int>(g.range(1, 3));
    p.M = p.N + static_cast<int>(g.range(1, 3));
    Rational gam = p.gamma();
    p.alpha = gam * g.range(1, 4);
    p.beta = gam * g.range(1, 4);
    p.delta = R(1, g.range(2, 50)) / p.beta;
    if (validate(p).empty() && p.gamma() * p.delta * p.q < 1) return p;
  }
}

Poly odd_form(const std::array<Scalar, 2>& c, const Scalar& u2) {
  // z (z^2 - u^2)(c0 z^2 + c1 z + c0 u^2)
  Scalar zero = u2.zero_like(), one = u2.one_like();
  Poly outer(std::vector<Scalar>{zero, -u2, zero, one});
  Poly inner(std::vector<Scalar>{c[0] * u2, c[1], c[0]});
  return outer * inner;
}

}  // namespace

TEST_CASE("structural identities and both routes to A_{s+1}") {
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    Field F = u_field(p);
    NodeGrid g = make_grid(p, F);
    Scalar u = F.u(p.u2());
    auto rho = rho_values(g);
    DRHPSolution m = build_mN(g, rho);
    ConnectionMatrix a = build_AN(g, rho);
    for (int s = p.N; s <= p.M; ++s) {
      CAPTURE(s);
      CHECK(a.s == s);
      CHECK(a.zs[0] == F(p.q).pow(1 - s));
      CHECK(a.zs[1] == a.zs[0]);
      CHECK(det_identity_holds(a));
      CHECK(involution_holds(a));
      CHECK(identity_at(a, u));
      CHECK(shape_holds(a));
      CHECK(a.B.a12 == odd_form(a.m(), a.u2));
      CHECK(a.B.a21 == odd_form(a.k(), a.u2));
      // A(-u) is finite; its determinant is Q/P there.
      Mat2<Scalar> am = a(-u);
      CHECK(am.det() == a.Q(-u) / a.P(-u));
      CHECK(build_As_from_m(m, g).B == a.B);
      if (s == p.M) {
        NilpotentJump T = solve_T(m, g);
        ConnectionMatrix last = isomonodromy_step(a, T, g);
        CHECK(last.s == p.M + 1);
        CHECK_THROWS_AS(isomonodromy_step(last, T, g), IndexOutOfRange);
        break;
      }
      NilpotentJump Td = solve_T(m, g);
      TransitionTriple t = extract_triple(a, m(g.nodes[static_cast<std::size_t>(s)]).a11);
      CHECK(jump_from_triple(t).matrix() == Td.matrix());
      a = isomonodromy_step(a, Td, g);
      m = advance_m(m, Td, g);
    }
  }
}

TEST_CASE("connection recursion reproduces the frozen tables") {
  // Frozen from an independent Python enumeration.
  const char* p0[] = {"7664387897/11459376269", "1506277/1511653", "1"};
  const char* p1[] = {"84704455/306460017", "144235390783/159448181103", "2465177/2467737", "1"};
  GapTable t0 = gap_table_connection(make_grid(preset("P0")));
  for (int s = 2; s <= 4; ++s) CHECK(t0.D.at(s).rational() == parse_rational(p0[s - 2]));
  EnsembleParams q1 = preset("P1");
  for (const Field& F : {Field::rational(), Field::quadratic(q1.u2())}) {
    GapTable t1 = gap_table_connection(make_grid(q1, F));
    for (int s = 2; s <= 5; ++s) CHECK(t1.D.at(s).rational() == parse_rational(p1[s - 2]));
  }
}

TEST_CASE("triple invariants") {
  Gen g(808);
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    NodeGrid grid = make_grid(p);
    ConnectionMatrix a = build_AN(grid, rho_values(grid));
    Scalar three = grid.field(3);
    for (int s = p.N; s < p.M; ++s) {
      TransitionTriple t = extract_triple(a);
      CHECK_FALSE(t.v.is_zero());
      CHECK_FALSE(dot(t.v1, t.v2).is_zero());
      CHECK(dot(t.v, t.v2).is_zero());
      for (int k = 0; k < 5; ++k) {
        Scalar lambda = grid.field(g.rational());
        CHECK(det2(t.v, t.v2 + lambda * t.v) == det2(t.v, t.v2));
      }
      NilpotentJump T = jump_from_triple(t);
      TransitionTriple t3 = extract_triple(a, three);
      CHECK(t3.v == three * t.v);
      CHECK(jump_from_triple(t3).matrix() == T.matrix());
      Scalar r1 = gap_double_ratio(t, advance_triple(a, T, t, grid), s, grid);
      Scalar r3 = gap_double_ratio(t3, advance_triple(a, T, t3, grid), s, grid);
      CHECK(r1 == r3);
      // The advanced triple is the extracted triple at s+1 up to scale.
      TransitionTriple next = advance_triple(a, T, t, grid);
      a = isomonodromy_step(a, T, grid);
      TransitionTriple fresh = extract_triple(a);
      CHECK(det2(next.v, fresh.v).is_zero());
    }
  }
}

TEST_CASE("a corrupted k1 surfaces as a cancellation failure") {
  EnsembleParams p = preset("P0");
  NodeGrid g = make_grid(p);
  auto rho = rho_values(g);
  DRHPSolution m = build_mN(g, rho);
  ConnectionMatrix a = build_AN(g, rho);
  Scalar zero = g.field.zero(), one = g.field.one();
  a.B.a21 += Poly(std::vector<Scalar>{zero, zero, -a.u2, zero, one});
  CHECK(a.k()[1] == build_AN(g, rho).k()[1] + one);
  CHECK_THROWS_AS(isomonodromy_step(a, solve_T(m, g), g), CancellationFailure);
}

TEST_CASE("random parameters: connection table equals enumeration") {
  Gen g(809);
  int ran = 0;
  for (int trial = 0; trial < 20; ++trial) {
    EnsembleParams p = random_valid(g);
    NodeGrid grid = make_grid(p);
    GapTable e = gap_table_enumerate(grid), c = gap_table_connection(grid);
    for (const auto& [s, v] : e.D) CHECK(c.D.at(s) == v);
    ++ran;
  }
  CHECK(ran == 20);
}
