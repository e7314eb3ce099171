#include <doctest.h>

#include "gen.hpp"
#include "qracah/drhp.hpp"
#include "qracah/errors.hpp"

using namespace qracah;
using testgen::Gen;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

bool same_at(const DRHPSolution& a, const DRHPSolution& b, Gen& g, const NodeGrid& grid) {
  for (int k = 0; k < 6; ++k) {
    Scalar z = grid.field(g.rational(200, 7));
    bool at_pole = false;
    for (const auto& n : grid.nodes) at_pole = at_pole || n == z;
    if (at_pole) continue;
    Mat2<Scalar> x = a(z), y = b(z);
    if (!(x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22)) return false;
  }
  return true;
}

EnsembleParams random_valid(Gen& g) {
  EnsembleParams p;
  for (;;) {
    p.q = R(1, g.range(2, 5));
    p.N = static_cast<int>(g.range(1, 3));
    p.M = p.N + static_cast<int>(g.range(0, 3));
    Rational gam = p.gamma();
    p.alpha = gam * g.range(1, 4);
    p.beta = gam * g.range(1, 4);
    p.delta = R(1, g.range(2, 50)) / p.beta;
    if (validate(p).empty() && p.gamma() * p.delta * p.q < 1) return p;
  }
}

}  // namespace

TEST_CASE("explicit m_N equals the orthogonal-polynomial construction, and so does every step") {
  Gen g(707);
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    NodeGrid grid = make_grid(p);
    DRHPSolution m = build_mN(grid, rho_values(grid));
    for (int s = p.N; s <= p.M; ++s) {
      CHECK(m.s == s);
      CHECK(same_at(m, build_ms_direct(grid, s), g, grid));
      CHECK(det_is_one(m));
      CHECK(jump_conditions_hold(m, grid));
      CHECK(asymptotics_hold(m, p.N, p.N));
      if (p.M != p.N) CHECK_FALSE(asymptotics_hold(m, p.N, p.M));
      if (s == p.M) break;
      m = advance_m(m, solve_T(m, grid), grid);
    }
  }
}

TEST_CASE("jump matrices: solved and closed form agree, traceless and nilpotent") {
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    NodeGrid grid = make_grid(p);
    DRHPSolution m = build_mN(grid, rho_values(grid));
    for (int s = p.N; s <= p.M; ++s) {
      NilpotentJump T = solve_T(m, grid);
      CHECK(T.matrix() == solve_T_closed_form(m, grid).matrix());
      CHECK(T.matrix().trace().is_zero());
      CHECK(T.matrix().det().is_zero());
      if (s < p.M) m = advance_m(m, T, grid);
    }
  }
}

TEST_CASE("ratios reproduce the enumeration table") {
  // Frozen from an independent Python enumeration (see the oracle suite).
  const char* p0[] = {"7664387897/11459376269", "1506277/1511653", "1"};
  NodeGrid grid = make_grid(preset("P0"));
  auto rho = rho_values(grid);
  DRHPSolution m = build_mN(grid, rho);
  Scalar D = seed_values(grid, rho).first;
  CHECK(D.rational() == parse_rational(p0[0]));
  for (int s = 2; s <= 3; ++s) {
    NilpotentJump T = solve_T(m, grid);
    D = D * gap_ratio_drhp(m, T, grid);
    CHECK(D.rational() == parse_rational(p0[s - 1]));
    if (s < 3) m = advance_m(m, T, grid);
  }
  GapTable t = gap_table_drhp(grid);
  CHECK(t.D.at(2).rational() == parse_rational(p0[0]));
  CHECK(t.D.at(4).rational() == 1);
}

TEST_CASE("a wrong jump breaks the residue condition") {
  NodeGrid grid = make_grid(preset("P0"));
  DRHPSolution m = build_mN(grid, rho_values(grid));
  NilpotentJump T = solve_T(m, grid);
  NilpotentJump bad{T.t11 * Scalar(R(2)), T.t12 * Scalar(R(4)), T.t21};
  CHECK_THROWS_AS(advance_m(m, bad, grid), InvariantViolation);
}

TEST_CASE("random parameters: DRHP table equals enumeration") {
  Gen g(708);
  for (int trial = 0; trial < 20; ++trial) {
    EnsembleParams p = random_valid(g);
    NodeGrid grid = make_grid(p);
    GapTable e = gap_table_enumerate(grid), d = gap_table_drhp(grid);
    for (const auto& [s, v] : e.D) CHECK(d.D.at(s) == v);
  }
}

TEST_CASE("no node left to add") {
  EnsembleParams p = preset("P0");
  NodeGrid grid = make_grid(p);
  DRHPSolution m = build_ms_direct(grid, p.M + 1);
  CHECK_THROWS_AS(solve_T(m, grid), IndexOutOfRange);
}
