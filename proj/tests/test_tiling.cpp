#include <doctest.h>

#include <algorithm>
#include <set>

#include "gen.hpp"
#include "qracah/errors.hpp"
#include "qracah/tiling.hpp"

using namespace qracah;
using testgen::Gen;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

BoxedPlanePartition from_rows(int c, const std::vector<std::vector<int>>& rows) {
  BoxedPlanePartition p{static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), c, {}};
  for (const auto& r : rows) p.h.insert(p.h.end(), r.begin(), r.end());
  return p;
}

}  // namespace

TEST_CASE("tiling counts match MacMahon") {
  struct Case {
    int a, b, c;
    long count;
  };
  for (const Case& k : {Case{1, 1, 1, 2}, Case{2, 2, 2, 20}, Case{2, 3, 3, 175}, Case{3, 3, 3, 980}, Case{2, 2, 3, 50},
                        Case{1, 1, 4, 5}}) {
    CAPTURE(k.a);
    CAPTURE(k.b);
    CAPTURE(k.c);
    auto all = enumerate_tilings(k.a, k.b, k.c);
    CHECK(static_cast<long>(all.size()) == k.count);
    CHECK(macmahon_count(k.a, k.b, k.c) == k.count);
    std::set<std::vector<int>> seen;
    for (const auto& p : all) {
      CHECK(p.valid());
      seen.insert(p.h);
    }
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("particle positions of a fixed configuration") {
  BoxedPlanePartition p = from_rows(3, {{3, 3, 3, 3}, {2, 2, 1, 0}, {2, 1, 0, 0}});
  REQUIRE(p.valid());
  CHECK(p.volume() == 12 + 5 + 3);
  CHECK(particles(p, 3).x == std::vector<int>{0, 2, 4});
  CHECK(particles(p, 7).x == std::vector<int>{3, 4, 5});
  CHECK(particles(p, 0).x == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(particles(p, 8), IndexOutOfRange);
  CHECK_THROWS_AS(path_positions(p, 3), IndexOutOfRange);
}

TEST_CASE("paths start at k, end at c + k and stay in the hexagon") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (const auto& p : enumerate_tilings(a, b, c)) {
          for (int k = 0; k < a; ++k) {
            auto pos = path_positions(p, k);
            REQUIRE(pos.size() == static_cast<std::size_t>(b + c + 1));
            CHECK(pos.front() == k);
            CHECK(pos.back() == c + k);
            for (std::size_t t = 1; t < pos.size(); ++t) CHECK(pos[t] - pos[t - 1] >= 0);
          }
          for (int t = 0; t <= b + c; ++t) {
            auto x = particles(p, t).x;
            auto [lo, hi] = column_range(a, b, c, t);
            CHECK(x.front() >= lo);
            CHECK(x.back() <= hi);
            for (std::size_t k = 1; k < x.size(); ++k) CHECK(x[k] > x[k - 1]);
          }
        }
}

TEST_CASE("single lozenge factor") {
  Rational q = R(1, 2), k2 = R(1, 100);
  // c = 3, t = 2, x = 1: 2j - c - 1 = -2
  TilingWeight w = lozenge_factor(3, 2, 1, k2, q);
  CHECK(w.rational == k2 * 4 - 1);
  CHECK(w.q_half_exponent == 2);
  CHECK(w.kappa_exponent == -1);
}

TEST_CASE("horizontal lozenge count does not depend on the tiling") {
  Rational q = R(1, 3), k2 = R(1, 5000);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 2; ++c) {
        auto all = enumerate_tilings(a, b, c);
        long kexp = tiling_weight(all.front(), k2, q).kappa_exponent;
        for (const auto& p : all) CHECK(tiling_weight(p, k2, q).kappa_exponent == kexp);
        long holes = 0;
        for (int t = 0; t <= b + c; ++t) holes += (std::min(t, c) + a - 1) - std::max(0, t - b) + 1 - a;
        CHECK(kexp == -holes);
      }
}

TEST_CASE("kappa = 0 weights are q to the minus volume") {
  Rational q = R(1, 3);
  auto all = enumerate_tilings(2, 2, 3);
  auto prob = tiling_probabilities(all, R(0), q);
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(prob[i] / prob[0] == rpow(q, -(all[i].volume() - all[0].volume())));
}

TEST_CASE("probabilities are a distribution") {
  Gen g(1101);
  for (int trial = 0; trial < 12; ++trial) {
    int a = static_cast<int>(g.range(1, 3)), b = static_cast<int>(g.range(1, 3)), c = static_cast<int>(g.range(1, 3));
    Rational q = R(1, g.range(2, 5));
    Rational k2 = rpow(q, b + c) / Rational(g.range(1, 9));
    auto prob = tiling_probabilities(enumerate_tilings(a, b, c), k2, q);
    Rational total = 0;
    for (const auto& x : prob) {
      CHECK(sgn(x) > 0);
      total += x;
    }
    CHECK(total == 1);
    for (const auto& m : all_slice_marginals(a, b, c, k2, q)) {
      Rational s = 0;
      for (const auto& kv : m) s += kv.second;
      CHECK(s == 1);
    }
  }
}

TEST_CASE("every slice marginal equals the q-Racah ensemble") {
  struct Shape {
    int a, b, c;
  };
  for (const Shape& s : {Shape{2, 3, 3}, Shape{2, 2, 3}, Shape{1, 1, 4}, Shape{2, 2, 2}, Shape{3, 2, 2}, Shape{1, 3, 2}}) {
    for (const Rational& q : std::vector<Rational>{R(1, 2), R(1, 3)}) {
      int T = s.b + s.c;
      for (const Rational& k2 : std::vector<Rational>{R(0), Rational(rpow(q, T) / 4), rpow(q, T + 2)}) {
        CAPTURE(s.a);
        CAPTURE(s.b);
        CAPTURE(s.c);
        for (const auto& cmp : compare_slices(s.a, s.b, s.c, k2, q)) {
          CAPTURE(cmp.t);
          CHECK(cmp.match);
          CHECK(cmp.nonnegative);
        }
      }
    }
  }
}

TEST_CASE("the printed case list leaves slices uncovered or wrong") {
  Rational q = R(1, 2), k2 = R(1, 1000);
  auto at = [](const std::vector<SliceComparison>& v, int t) { return v[static_cast<std::size_t>(t)]; };
  auto p223 = compare_slices(2, 2, 3, k2, q, CaseRule::printed);
  CHECK_FALSE(at(p223, 2).match);
  auto p114 = compare_slices(1, 1, 4, k2, q, CaseRule::printed);
  for (int t = 1; t <= 3; ++t) CHECK_FALSE(at(p114, t).match);
}

TEST_CASE("tiling guards") {
  CHECK_THROWS_AS(enumerate_tilings(3, 3, 3, 100), TooLarge);
  CHECK_THROWS_AS(enumerate_tilings(0, 3, 3), InvalidParams);
  BoxedPlanePartition p = enumerate_tilings(1, 1, 1).front();
  Rational q = R(1, 2);
  CHECK_THROWS_AS(tiling_weight(p, rpow(q, 1), q), InvalidKappa);
  CHECK_THROWS_AS(tiling_weight(p, R(-1, 5), q), InvalidKappa);
  CHECK_THROWS_AS(tiling_weight(p, R(0), R(2)), InvalidParams);
}
