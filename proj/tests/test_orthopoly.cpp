#include <doctest.h>

#include "gen.hpp"
#include "qracah/errors.hpp"
#include "qracah/orthopoly.hpp"

using namespace qracah;
using testgen::Gen;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

// Plain Gaussian elimination on a Hankel block, kept separate from the
// library so it can serve as a Gram-Schmidt oracle.
Rational hankel_det(const std::vector<Rational>& m, int n) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i + j)];
  Rational det = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::size_t piv = k;
    while (piv < a.size() && sgn(a[piv][k]) == 0) ++piv;
    if (piv == a.size()) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < a.size(); ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

std::vector<Rational> moments(const NodeGrid& g, int count) {
  std::vector<Rational> m(static_cast<std::size_t>(count), Rational(0));
  for (int x = 0; x < g.size(); ++x) {
    Rational p = 1;
    for (int k = 0; k < count; ++k) {
      m[static_cast<std::size_t>(k)] += g.weights[static_cast<std::size_t>(x)].rational() * p;
      p *= g.nodes[static_cast<std::size_t>(x)].rational();
    }
  }
  return m;
}

}  // namespace

TEST_CASE("first polynomials") {
  NodeGrid g = make_grid(preset("P0"));
  OPSystem ops = build_ops(g);
  CHECK(ops.P[0] == Poly::constant(Scalar(R(1))));
  Scalar shift = ops.moments[1] / ops.moments[0];
  CHECK(ops.P[1] == Poly::linear(shift));
}

TEST_CASE("norms equal Hankel determinant ratios") {
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    NodeGrid g = make_grid(p);
    OPSystem ops = build_ops(g);
    auto m = moments(g, 2 * p.M + 2);
    for (int n = 0; n <= p.M; ++n)
      CHECK(ops.c[static_cast<std::size_t>(n)].rational() == hankel_det(m, n + 1) / hankel_det(m, n));
  }
}

TEST_CASE("exact orthogonality") {
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    NodeGrid g = make_grid(p);
    OPSystem ops = build_ops(g);
    for (int a = 0; a <= p.M; ++a)
      for (int b = 0; b <= p.M; ++b) {
        Scalar ip = inner_product(ops.P[static_cast<std::size_t>(a)], ops.P[static_cast<std::size_t>(b)], g.nodes, g.weights);
        if (a == b)
          CHECK(ip == ops.c[static_cast<std::size_t>(a)]);
        else
          CHECK(ip.is_zero());
      }
  }
}

TEST_CASE("kernel trace, idempotence and two-point form") {
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    NodeGrid g = make_grid(p);
    OPSystem ops = build_ops(g);
    int n = g.size();
    Scalar trace = Scalar(R(0));
    for (int x = 0; x < n; ++x) trace += cd_kernel(ops, g, p.N, x, x);
    CHECK(trace == Scalar(R(p.N)));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Scalar sq = Scalar(R(0));
        for (int z = 0; z < n; ++z) sq += cd_kernel(ops, g, p.N, x, z) * cd_kernel(ops, g, p.N, z, y);
        CHECK(sq == cd_kernel(ops, g, p.N, x, y));
        if (x != y) CHECK(cd_kernel_two_point(ops, g, p.N, x, y) == cd_kernel(ops, g, p.N, x, y));
      }
  }
}

TEST_CASE("closed-form norms at 128 bits") {
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    OPSystem ops = build_ops(make_grid(p));
    for (int n = 0; n <= p.M; ++n) {
      BigFloat exact(ops.c[static_cast<std::size_t>(n)].rational(), 128);
      double rel = ((cn_closed_form(p, n, 128) - exact) / exact).abs().to_double();
      CHECK(rel <= 1e-20);
    }
  }
}

TEST_CASE("infinite q-Pochhammer") {
  // (0; q)_inf = 1
  CHECK(qpochhammer_inf(R(0), R(1, 2), 128).to_double() == doctest::Approx(1.0));
  // (q; q)_inf at q = 1/2, known to many digits: 0.288788095086602421...
  CHECK(qpochhammer_inf(R(1, 2), R(1, 2), 128).to_double() == doctest::Approx(0.2887880950866024).epsilon(1e-15));
  CHECK_THROWS_AS(qpochhammer_inf(R(1, 2), R(1), 128), NonConvergent);
}

TEST_CASE("orthogonality on random discrete weights") {
  Gen g(505);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(g.range(2, 6));
    std::vector<Scalar> nodes, weights;
    Rational x = g.rational(5, 3);
    for (int i = 0; i < n; ++i) {
      nodes.push_back(Scalar(x));
      x += g.positive(5, 3);
      weights.push_back(Scalar(g.positive(9, 9)));
    }
    OPSystem ops = build_ops(nodes, weights, n - 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < a; ++b)
        CHECK(inner_product(ops.P[static_cast<std::size_t>(a)], ops.P[static_cast<std::size_t>(b)], nodes, weights)
                  .is_zero());
  }
}

TEST_CASE("repeated nodes give a degenerate weight") {
  std::vector<Scalar> nodes = {Scalar(R(1)), Scalar(R(1)), Scalar(R(2))};
  std::vector<Scalar> weights = {Scalar(R(1)), Scalar(R(1)), Scalar(R(1))};
  CHECK_THROWS_AS(build_ops(nodes, weights, 3), DegenerateWeight);
}
