#include <doctest.h>

#include "gen.hpp"
#include "qracah/errors.hpp"
#include "qracah/lattice.hpp"
#include "qracah/painleve.hpp"

using namespace qracah;
using testgen::Gen;

namespace {

using MP = MultiplicativeParam;

MP gq(std::size_t i) { return MP::generator(kQRacahGenCount, i); }
MP g6(std::size_t i) { return MP::generator(kE6GenCount, i); }
MP nu6(int i) { return g6(kNu1 + static_cast<std::size_t>(i - 1)); }

PicardClass random_class(Gen& g) {
  std::vector<long> v(10);
  for (auto& x : v) x = g.range(-4, 4);
  return PicardClass::from_vec(v);
}

}  // namespace

TEST_CASE("pairing on small classes") {
  PicardClass hf = PicardClass::h_f(), hg = PicardClass::h_g();
  CHECK(pair(hf, hg) == 1);
  CHECK(pair(hf, hf) == 0);
  CHECK(pair(PicardClass::exceptional(3), PicardClass::exceptional(3)) == -1);
  CHECK(pair(hf - hg, hf - hg) == -2);
  CHECK(pair(hf - hg, hg - PicardClass::exceptional(1) - PicardClass::exceptional(5)) == 1);
  CHECK(pair(anticanonical(), anticanonical()) == 0);
}

TEST_CASE("root data: Cartan pattern, orthogonality, delta, anticanonical sum") {
  for (const RootSystemData& d : {e7_data(), e6_data()}) {
    CAPTURE(d.name);
    CHECK(cartan_pattern_holds(d));
    CHECK(surface_roots_orthogonal(d));
    CHECK(delta_decomposition_holds(d));
    CHECK(surface_roots_sum_to_anticanonical(d));
  }
  CHECK(e7_data().symmetry_roots.size() == 8);
  CHECK(e6_data().symmetry_roots.size() == 7);
}

TEST_CASE("reflections are pairing-preserving involutions") {
  Gen g(1001);
  for (const RootSystemData& d : {e7_data(), e6_data()}) {
    for (int trial = 0; trial < 40; ++trial) {
      int i = static_cast<int>(g.range(0, static_cast<long>(d.symmetry_roots.size()) - 1));
      PicardClass a = random_class(g), b = random_class(g);
      CHECK(reflect(i, reflect(i, a, d), d) == a);
      CHECK(pair(reflect(i, a, d), reflect(i, b, d)) == pair(a, b));
      CHECK(reflect(i, d.symmetry_roots[static_cast<std::size_t>(i)], d) == -d.symmetry_roots[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("E7 words act as the expected translations") {
  RootSystemData d = e7_data();
  auto phi = word_matrix(words::kPhiE7, d);
  CHECK(translation_vector(phi, d) == std::vector<long>{2, 0, 0, 0, -1, 0, 0, 0});
  CHECK(translation_vector(word_matrix(words::kPhiE7Alt, d), d) == phi_e7_translation());
  CHECK(phi == word_matrix(words::kPhiE7Alt, d));
  auto psi = word_matrix(words::kPsiE7, d);
  CHECK(translation_vector(psi, d) == std::vector<long>{0, 0, 0, 0, 0, 0, -1, 2});
  CHECK(psi_e7_translation() == std::vector<long>{0, 0, 0, 0, 0, 0, -1, 2});
  auto c = word_matrix(words::kConjugatorE7, d);
  CHECK(c * phi * isometry_inverse(c) == psi);
  CHECK(isometry_inverse(phi) * phi == IntMatrix::identity(10));
  // A single reflection is not a translation.
  CHECK_FALSE(translation_vector(reflection_matrix(0, d), d).has_value());
}

TEST_CASE("E6 word and rotation") {
  RootSystemData d = e6_data();
  REQUIRE(d.rotation.has_value());
  IntMatrix r = *d.rotation;
  IntMatrix gram = intersection_form();
  CHECK(r.transpose() * gram * r == gram);
  CHECK(r * r * r == IntMatrix::identity(10));
  CHECK(r != IntMatrix::identity(10));
  auto phi = word_matrix(words::kPhiE6, d);
  CHECK(translation_vector(phi, d) == std::vector<long>{0, 0, -1, 0, 0, 0, 1});
  CHECK(phi_e6_translation() == std::vector<long>{0, 0, -1, 0, 0, 0, 1});
}

TEST_CASE("unknown word tokens") {
  CHECK_THROWS_AS(word_matrix("w8", e7_data()), UnknownToken);
  CHECK_THROWS_AS(word_matrix("w1 r", e7_data()), UnknownToken);
  CHECK_THROWS_AS(word_matrix("x", e6_data()), UnknownToken);
  CHECK_THROWS_AS(word_matrix("w7", e6_data()), UnknownToken);
  CHECK(word_matrix("", e7_data()) == IntMatrix::identity(10));
}

TEST_CASE("basis changes are consistent") {
  CHECK(basis_change_consistent(preliminary_basis_change()));
  CHECK(basis_change_consistent(adjusted_basis_change()));
}

TEST_CASE("E7 root variables in terms of the nu and kappa parameters") {
  // Generic generators nu_1..nu_8, kappa_1, kappa_2.
  auto gen = [](std::size_t i) { return MP::generator(10, i); };
  MonomialParams p;
  for (std::size_t i = 0; i < 8; ++i) p.nu[i] = gen(i);
  p.kappa1 = gen(8);
  p.kappa2 = gen(9);
  auto a = e7_root_variables(p);
  const auto& n = p.nu;
  CHECK(a[0] == p.kappa1 / p.kappa2);
  CHECK(a[1] == n[2] / n[3]);
  CHECK(a[2] == n[1] / n[2]);
  CHECK(a[3] == n[0] / n[1]);
  CHECK(a[4] == p.kappa2 / (n[0] * n[4]));
  CHECK(a[5] == n[4] / n[5]);
  CHECK(a[6] == n[5] / n[6]);
  CHECK(a[7] == n[6] / n[7]);
  // The step product is q = kappa1^2 kappa2^2 / prod nu.
  MP prod = MP::one(10);
  for (const auto& x : n) prod = prod * x;
  CHECK(e7_step_product(a) == p.kappa1.pow(2) * p.kappa2.pow(2) / prod);
}

TEST_CASE("preliminary matching root variables") {
  MP q = gq(kQ), u = gq(kU), d = gq(kD);
  MP z1 = gq(kZ1), z2 = gq(kZ2), z3 = gq(kZ3), z4 = gq(kZ4), z5 = gq(kZ5), z6 = gq(kZ6);
  MP d2 = z1 * z3 * z5 / (z2 * z4 * z6 * q * d);
  MP rho1 = -d, rho2 = -d2;
  auto a = root_variables(Matching::preliminary);
  CHECK(a[0] == z4 / z2);
  CHECK(a[1] == z5 / z3);
  CHECK(a[2] == z3 / z1);
  CHECK(a[3] == z1 * z6 / u.pow(2));
  CHECK(a[4] == -(u.pow(2) / (rho1 * z4 * z6)));
  CHECK(a[5] == rho1 / rho2);
  CHECK(a[6] == -(rho2 * z2 * z4 / u.pow(2)));
  CHECK(a[7] == u.pow(2) / (z2 * z4));
  for (Matching m : {Matching::preliminary, Matching::adjusted}) CHECK(e7_step_product(root_variables(m)) == q);
}

TEST_CASE("parameter step shifts the root variables by a translation") {
  auto neg = [](std::vector<long> v) {
    for (auto& x : v) x = -x;
    return v;
  };
  CHECK(root_variable_shift(Matching::preliminary) == neg(psi_e7_translation()));
  CHECK(root_variable_shift(Matching::adjusted) == neg(phi_e7_translation()));
  CHECK(e6_root_variable_shift() == std::vector<long>{0, 0, 1, 0, 0, 0, -1});
}

TEST_CASE("E6 root variables and blowup coordinates") {
  MP k1 = g6(kKappa1), k2 = g6(kKappa2);
  auto a = e6_root_variables();
  CHECK(a[0] == nu6(7) / nu6(8));
  CHECK(a[1] == nu6(6) / nu6(5));
  CHECK(a[2] == k2 / (nu6(1) * nu6(6)));
  CHECK(a[3] == nu6(1) / nu6(2));
  CHECK(a[4] == nu6(2) / nu6(3));
  CHECK(a[5] == nu6(3) / nu6(4));
  CHECK(a[6] == k1 / (nu6(1) * nu6(7)));
  auto b = e6_blowup_coordinates();
  std::vector<MP> images(b.begin(), b.end());
  auto ab = e6_root_variables_in_b();
  for (std::size_t i = 0; i < 7; ++i) CHECK(substitute(ab[i], images) == a[i]);
  auto bi = [](int i) { return MP::generator(8, static_cast<std::size_t>(i - 1)); };
  CHECK(ab[0] == bi(8) / bi(7));
  CHECK(ab[6] == bi(7) / bi(1));
  MP prod = MP::one(kE6GenCount);
  for (int i = 1; i <= 8; ++i) prod = prod * nu6(i);
  CHECK(e6_step_product(a) == k1.pow(2) * k2.pow(2) / prod);
}

TEST_CASE("adjusted matching agrees with the connection-matrix parameters") {
  for (const char* name : {"P0", "P1"}) {
    EnsembleParams p = preset(name);
    Field F = u_field(p);
    Scalar u = F.u(p.u2());
    for (const auto& a : connection_sequence(make_grid(p, F))) {
      AsymptoticD ad = asymptotic_d(a);
      std::vector<Scalar> vals = {F(p.q), a.zs[0], a.zs[1], a.zs[2], a.zs[3], a.zs[4], a.zs[5], u, ad.d1};
      PainleveParams pp = painleve_params(a, u);
      MonomialParams m = matching_params(Matching::adjusted);
      for (std::size_t i = 0; i < 8; ++i) CHECK(m.nu[i].evaluate(vals) == pp.nu[i]);
      CHECK(m.kappa1.evaluate(vals) == pp.kappa1);
      CHECK(m.kappa2.evaluate(vals) == pp.kappa2);
    }
  }
}

TEST_CASE("identity suite passes") {
  auto checks = lattice_identity_suite();
  CHECK(checks.size() >= 20);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  CHECK(MP::generator(3, 1).to_string({"a", "b", "c"}).find('b') != std::string::npos);
}
