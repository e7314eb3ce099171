#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qracah/scalar.hpp"

namespace qracah {

// Square integer matrix acting on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);
  // Matrix whose j-th column is cols[j].
  static IntMatrix from_columns(const std::vector<std::vector<long>>& cols);

  std::size_t size() const { return n_; }
  long& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<long> operator*(const std::vector<long>& v) const;
  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  IntMatrix transpose() const;

 private:
  std::size_t n_ = 0;
  std::vector<long> a_;
};

// Divisor class over (H_f, H_g, F_1..F_8).
struct PicardClass {
  std::array<long, 10> c{};

  static PicardClass h_f();
  static PicardClass h_g();
  static PicardClass exceptional(int i);  // F_i, 1 <= i <= 8
  // hf H_f + hg H_g + sum_i f[i-1] F_i
  static PicardClass make(long hf, long hg, const std::array<long, 8>& f = {});

  PicardClass operator+(const PicardClass& o) const;
  PicardClass operator-(const PicardClass& o) const;
  PicardClass operator-() const;
  bool operator==(const PicardClass& o) const { return c == o.c; }
  bool operator!=(const PicardClass& o) const { return c != o.c; }

  std::vector<long> vec() const { return {c.begin(), c.end()}; }
  static PicardClass from_vec(const std::vector<long>& v);
  std::string to_string() const;
};
PicardClass operator*(long k, const PicardClass& c);

// H_f.H_g = 1, H_f^2 = H_g^2 = 0, F_i.F_j = -delta_ij
long pair(const PicardClass& a, const PicardClass& b);
// Gram matrix of the pairing on the basis
IntMatrix intersection_form();
// -K = 2 H_f + 2 H_g - sum F_i
PicardClass anticanonical();

struct RootSystemData {
  std::string name;
  std::vector<PicardClass> surface_roots;   // delta_i
  std::vector<PicardClass> symmetry_roots;  // alpha_i
  std::vector<long> delta_multiplicities;   // delta = sum m_i alpha_i
  std::vector<std::pair<int, int>> diagram_edges;
  // Diagram automorphism r as a lattice map, when the word language has one.
  std::optional<IntMatrix> rotation;
};

// A_1^(1) surface, E_7^(1) symmetry
RootSystemData e7_data();
// A_2^(1) surface, E_6^(1) symmetry, with the rotation r
RootSystemData e6_data();

// w_i(C) = C + (alpha_i . C) alpha_i
PicardClass reflect(int i, const PicardClass& c, const RootSystemData& data);
IntMatrix reflection_matrix(int i, const RootSystemData& data);

// Tokens "w0".."w7" (bounded by the root count) and "r" when data has a
// rotation, separated by whitespace. The product is read left to right, so
// the rightmost letter acts first. UnknownToken otherwise.
IntMatrix word_matrix(const std::string& word, const RootSystemData& data);
PicardClass apply_word(const std::string& word, const PicardClass& c, const RootSystemData& data);

// k with m(alpha_i) = alpha_i + k_i delta for every i, if m acts that way.
std::optional<std::vector<long>> translation_vector(const IntMatrix& m, const RootSystemData& data);

// Integer inverse of a lattice isometry, m^{-1} = G^{-1} m^T G.
IntMatrix isometry_inverse(const IntMatrix& m);

IntMatrix gram_matrix(const std::vector<PicardClass>& roots);
// -2 on the diagonal, 1 on diagram edges, 0 elsewhere
bool cartan_pattern_holds(const RootSystemData& data);
bool surface_roots_orthogonal(const RootSystemData& data);
bool delta_decomposition_holds(const RootSystemData& data);
// sum of the delta_i equals -K
bool surface_roots_sum_to_anticanonical(const RootSystemData& data);

namespace words {
// Standard translation on the E_7 symmetry roots, and an equivalent spelling.
inline constexpr const char* kPhiE7 =
    "w0 w4 w5 w3 w4 w6 w5 w2 w3 w4 w1 w2 w3 w0 w4 w7 w6 w5 w4 w3 w0 w4 w6 w5 w2 w3 w4 w7 w6 w5 w1 w2 w3 w4";
inline constexpr const char* kPhiE7Alt =
    "w0 w4 w5 w3 w4 w6 w7 w5 w2 w3 w4 w1 w2 w3 w0 w4 w6 w5 w4 w3 w0 w4 w6 w5 w2 w3 w4 w1 w2 w3 w7 w6 w5 w4";
// Translation realised by the q-Racah parameter step in the first matching.
inline constexpr const char* kPsiE7 =
    "w7 w6 w5 w4 w3 w0 w4 w5 w2 w3 w4 w1 w2 w3 w0 w4 w6 w5 w4 w3 w0 w4 w6 w5 w2 w3 w4 w1 w2 w3 w0 w4 w5 w6";
// psi = c phi c^{-1}
inline constexpr const char* kConjugatorE7 = "w6 w5 w4 w0 w7 w6 w5 w4";
inline constexpr const char* kPhiE6 = "r w2 w3 w1 w2 w6 w3 w4 w0 w6 w3 w5 w4 w2 w3 w1 w2";
}  // namespace words

// Expected translation vectors of the words above.
std::vector<long> phi_e7_translation();
std::vector<long> psi_e7_translation();
std::vector<long> phi_e6_translation();

// Matching of the (f, g) blowup of P^1 x P^1 at nine points with the (x, y)
// one, both in Z^11 over (H, H', X_1..X_9). fg_from_xy has columns H_f, H_g,
// F_1..F_9 written over (H_x, H_y, E_1..E_9); xy_from_fg the other way.
struct BasisChange {
  IntMatrix fg_from_xy, xy_from_fg;
};
BasisChange preliminary_basis_change();
BasisChange adjusted_basis_change();
IntMatrix intersection_form_11();
// Both directions compose to the identity and preserve the pairing.
bool basis_change_consistent(const BasisChange& b);

// Signed Laurent monomial over a fixed list of generators.
struct MultiplicativeParam {
  int sign = 1;
  std::vector<long> exponents;

  static MultiplicativeParam one(std::size_t ngen);
  static MultiplicativeParam generator(std::size_t ngen, std::size_t i);

  MultiplicativeParam operator*(const MultiplicativeParam& o) const;
  MultiplicativeParam operator/(const MultiplicativeParam& o) const;
  MultiplicativeParam pow(long k) const;
  MultiplicativeParam operator-() const;
  bool operator==(const MultiplicativeParam& o) const { return sign == o.sign && exponents == o.exponents; }
  bool operator!=(const MultiplicativeParam& o) const { return !(*this == o); }

  Scalar evaluate(const std::vector<Scalar>& values) const;
  std::string to_string(const std::vector<std::string>& names) const;
};

// Replace generator i by images[i].
MultiplicativeParam substitute(const MultiplicativeParam& m, const std::vector<MultiplicativeParam>& images);

// Generators of the q-Racah side: q, z1..z6, u, d (d = d_1; d_2 is
// z1 z3 z5 / (z2 z4 z6 q d)).
enum QRacahGen : std::size_t { kQ = 0, kZ1, kZ2, kZ3, kZ4, kZ5, kZ6, kU, kD, kQRacahGenCount };
const std::vector<std::string>& qracah_generator_names();

// nu_1..nu_8, kappa_1, kappa_2 as monomials.
struct MonomialParams {
  std::array<MultiplicativeParam, 8> nu;
  MultiplicativeParam kappa1, kappa2;
};

enum class Matching { preliminary, adjusted };
const char* matching_name(Matching m);
MonomialParams matching_params(Matching m);

// a_0..a_7 from the (f, g) parameters
std::array<MultiplicativeParam, 8> e7_root_variables(const MonomialParams& p);
std::array<MultiplicativeParam, 8> root_variables(Matching m);
// a0^2 a1 a2^2 a3^3 a4^4 a5^3 a6^2 a7
MultiplicativeParam e7_step_product(const std::array<MultiplicativeParam, 8>& a);

// z2 -> q z2, z4 -> q z4, d -> d / q
MultiplicativeParam evolve_qracah(const MultiplicativeParam& m);
// q-exponent of a_i(evolved) / a_i; nullopt if some ratio is not a power of q.
std::optional<std::vector<long>> root_variable_shift(Matching m);

// E_6 side. Generators q, nu_1..nu_8, kappa_1, kappa_2 (q independent).
enum E6Gen : std::size_t { kE6Q = 0, kNu1, kKappa1 = 9, kKappa2 = 10, kE6GenCount = 11 };
std::array<MultiplicativeParam, 7> e6_root_variables();
// a0 a1 a2^2 a3^3 a4^2 a5 a6^2
MultiplicativeParam e6_step_product(const std::array<MultiplicativeParam, 7>& a);
// b_1..b_8 over the same generators: nu_i, kappa_2/nu_i, kappa_1/nu_i
std::array<MultiplicativeParam, 8> e6_blowup_coordinates();
// a_i over generators b_1..b_8
std::array<MultiplicativeParam, 7> e6_root_variables_in_b();
// kappa_1 -> kappa_1 / q, kappa_2 -> q kappa_2; q-exponents of the a_i ratios
std::optional<std::vector<long>> e6_root_variable_shift();

struct LatticeCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
// Every identity above, in a fixed order.
std::vector<LatticeCheck> lattice_identity_suite();

}  // namespace qracah
