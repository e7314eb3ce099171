#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "qracah/ensemble.hpp"
#include "qracah/errors.hpp"

using namespace qracah;
using testgen::Gen;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

// Frozen from a Python fractions evaluation of the literal weight formula.
const char* const kP0Weights[] = {"1", "68/169", "2370816/387692773", "4456448/1295281554593"};
const char* const kP1Weights[] = {"1", "20250/16129", "806736/4661281", "5184000/1461174497", "2031616/273239630939"};

EnsembleParams random_valid(Gen& g) {
  EnsembleParams p;
  for (;;) {
    p.q = R(1, g.range(2, 5));
    p.N = static_cast<int>(g.range(1, 3));
    p.M = p.N - 1 + static_cast<int>(g.range(0, 3));
    Rational gam = p.gamma();
    p.alpha = gam * g.range(1, 4);
    p.beta = gam * g.range(1, 4);
    p.delta = R(1, g.range(2, 50)) / p.beta;
    if (validate(p).empty() && p.gamma() * p.delta * p.q < 1) return p;
  }
}

}  // namespace

TEST_CASE("qpochhammer") {
  CHECK(qpochhammer(R(5, 7), R(1, 3), 0) == R(1));
  CHECK(qpochhammer(R(1, 2), R(1, 2), 2) == R(3, 8));
  CHECK(qpochhammer(R(256) * R(1, 4), R(1, 4), 1) == R(-63));
}

TEST_CASE("presets") {
  EnsembleParams p0 = preset("P0");
  CHECK(p0.u2() == R(1, 64));
  CHECK(p0.gamma() == R(256));
  CHECK(preset("P1").u2() == R(1, 8));
  CHECK_THROWS_AS(preset("P9"), InvalidParams);
}

TEST_CASE("weights against the literal formula") {
  EnsembleParams p0 = preset("P0"), p1 = preset("P1");
  for (int x = 0; x <= p0.M; ++x) CHECK(weight(x, p0) == parse_rational(kP0Weights[x]));
  for (int x = 0; x <= p1.M; ++x) CHECK(weight(x, p1) == parse_rational(kP1Weights[x]));
  CHECK_THROWS_AS(weight(p0.M + 1, p0), IndexOutOfRange);
}

TEST_CASE("weight ratio closed form, fixed and random parameters") {
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    for (int x = 0; x < p.M; ++x) CHECK(weight(x + 1, p) / weight(x, p) == weight_ratio_closed_form(x, p));
  }
  Gen g(404);
  for (int trial = 0; trial < 60; ++trial) {
    EnsembleParams p = random_valid(g);
    CHECK(weight(0, p) == R(1));
    for (int x = 0; x < p.M; ++x) CHECK(weight(x + 1, p) / weight(x, p) == weight_ratio_closed_form(x, p));
  }
}

TEST_CASE("delta = 0 reduces to the q-Hahn weight") {
  Gen g(405);
  for (int trial = 0; trial < 40; ++trial) {
    EnsembleParams p = random_valid(g);
    p.delta = 0;
    for (int x = 0; x <= p.M; ++x) CHECK(weight(x, p) == weight_qhahn(x, p));
  }
}

TEST_CASE("sigma, nodes and Phi factors") {
  EnsembleParams p = preset("P0");
  CHECK(sigma(Scalar(R(1)), p) == Scalar(R(17, 16)));
  CHECK_THROWS_AS(sigma(Scalar(R(0)), p), ZeroArgument);
  CHECK(phi_factors(Scalar(p.alpha * p.q), p).first.is_zero());
  CHECK(phi_factors(Scalar(p.q), p).second.is_zero());
  Gen g(406);
  for (int trial = 0; trial < 40; ++trial) {
    EnsembleParams r = random_valid(g);
    for (int x = 1; x <= r.M; ++x) CHECK(node(x, r) > node(x - 1, r));
  }
}

TEST_CASE("validate") {
  CHECK(validate(preset("P0")).empty());
  CHECK(validate(preset("P1")).empty());
  EnsembleParams p = preset("P0");
  p.delta = 1;
  auto bad = validate(p);
  CHECK(bad.size() == 1);
  CHECK(has(bad, "beta*delta<1"));
  CHECK_THROWS_AS(require_valid(p), InvalidParams);
  p = preset("P0");
  p.N = 5;
  CHECK(has(validate(p), "M>=N-1"));
  p = preset("P0");
  p.q = 2;
  CHECK(has(validate(p), "0<q<1"));
}

TEST_CASE("tiling dictionary, (2,3,3) slice t=3") {
  Rational q = R(1, 4), k2 = R(1, 4096);
  SliceEnsemble se = tiling_to_ensemble(2, 3, 3, 3, k2, q);
  CHECK(se.case_index == 2);
  CHECK(se.printed_case == 2);
  CHECK(se.params.alpha == rpow(q, -5));
  CHECK(se.params.beta == rpow(q, -5));
  CHECK(se.params.gamma() == rpow(q, -5));
  CHECK(se.params.delta == k2 / q);
  CHECK(se.params.M == 4);
  // kappa^2 = q^T sits on the boundary beta*delta = 1.
  CHECK(se.params.beta * se.params.delta == 1);
  CHECK(has(validate(se.params), "beta*delta<1"));
}

// Slices whose printed case is 1, 2 or 4 satisfy every assumption. The
// fallback slices b <= t < c (no printed case, or printed case 3) get case 4
// with alpha < gamma; their marginals still match (see the tiling suite).
TEST_CASE("tiling dictionary output is valid strictly inside kappa^2 < q^T") {
  Gen g(407);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c) {
        Rational q = R(1, g.range(2, 4));
        int T = b + c;
        Rational k2 = rpow(q, T) * R(g.range(0, 9), 10);
        for (int t = 0; t <= T; ++t) {
          SliceEnsemble se = tiling_to_ensemble(a, b, c, t, k2, q);
          auto bad = validate(se.params);
          bool printed_ok = se.printed_case == 1 || se.printed_case == 2 || se.printed_case == 4;
          if (printed_ok)
            CHECK_MESSAGE(bad.empty(), "a=" << a << " b=" << b << " c=" << c << " t=" << t);
          else
            CHECK_MESSAGE((bad == std::vector<std::string>{"alpha>=gamma"} && b <= t && t < c),
                          "a=" << a << " b=" << b << " c=" << c << " t=" << t);
        }
      }
}

TEST_CASE("tiling dictionary rejects kappa outside the range and uncovered slices") {
  Rational q = R(1, 4);
  CHECK_THROWS_AS(tiling_to_ensemble(2, 3, 3, 3, rpow(q, 5), q), InvalidKappa);
  CHECK_THROWS_AS(tiling_to_ensemble(2, 3, 3, 3, R(-1), q), InvalidKappa);
  CHECK(printed_case(2, 2, 3, 2) == 0);
  CHECK_THROWS_AS(tiling_to_ensemble(2, 2, 3, 2, R(0), q, CaseRule::printed), NoCaseApplies);
  CHECK(tiling_to_ensemble(2, 2, 3, 2, R(0), q).case_index == 4);
}
