#include "qracah/lattice.hpp"

#include <sstream>

#include "qracah/errors.hpp"

namespace qracah {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<long>>& cols) {
  IntMatrix m(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols.size()) throw InvariantViolation("from_columns: column length mismatch");
    for (std::size_t i = 0; i < cols.size(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw InvariantViolation("IntMatrix size mismatch");
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      long v = (*this)(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r(i, j) += v * o(k, j);
    }
  return r;
}

std::vector<long> IntMatrix::operator*(const std::vector<long>& v) const {
  if (v.size() != n_) throw InvariantViolation("IntMatrix size mismatch");
  std::vector<long> r(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

PicardClass PicardClass::h_f() { return make(1, 0); }
PicardClass PicardClass::h_g() { return make(0, 1); }

PicardClass PicardClass::exceptional(int i) {
  if (i < 1 || i > 8) throw IndexOutOfRange("exceptional class index must be in 1..8");
  PicardClass c;
  c.c[static_cast<std::size_t>(i + 1)] = 1;
  return c;
}

PicardClass PicardClass::make(long hf, long hg, const std::array<long, 8>& f) {
  PicardClass c;
  c.c[0] = hf;
  c.c[1] = hg;
  for (std::size_t i = 0; i < 8; ++i) c.c[i + 2] = f[i];
  return c;
}

PicardClass PicardClass::operator+(const PicardClass& o) const {
  PicardClass r;
  for (std::size_t i = 0; i < 10; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

PicardClass PicardClass::operator-(const PicardClass& o) const { return *this + (-o); }

PicardClass PicardClass::operator-() const {
  PicardClass r;
  for (std::size_t i = 0; i < 10; ++i) r.c[i] = -c[i];
  return r;
}

PicardClass PicardClass::from_vec(const std::vector<long>& v) {
  if (v.size() != 10) throw InvariantViolation("PicardClass needs 10 coordinates");
  PicardClass r;
  for (std::size_t i = 0; i < 10; ++i) r.c[i] = v[i];
  return r;
}

std::string PicardClass::to_string() const {
  static const char* names[10] = {"Hf", "Hg", "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 10; ++i) {
    long v = c[i];
    if (v == 0) continue;
    if (v < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    long a = v < 0 ? -v : v;
    if (a != 1) os << a;
    os << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

PicardClass operator*(long k, const PicardClass& c) {
  PicardClass r;
  for (std::size_t i = 0; i < 10; ++i) r.c[i] = k * c.c[i];
  return r;
}

long pair(const PicardClass& a, const PicardClass& b) {
  long s = a.c[0] * b.c[1] + a.c[1] * b.c[0];
  for (std::size_t i = 2; i < 10; ++i) s -= a.c[i] * b.c[i];
  return s;
}

namespace {

// Form with a hyperbolic plane on the first two coordinates and -1 after.
IntMatrix hyperbolic_form(std::size_t n) {
  IntMatrix g(n);
  g(0, 1) = g(1, 0) = 1;
  for (std::size_t i = 2; i < n; ++i) g(i, i) = -1;
  return g;
}

PicardClass F(int i) { return PicardClass::exceptional(i); }
PicardClass Hf() { return PicardClass::h_f(); }
PicardClass Hg() { return PicardClass::h_g(); }

PicardClass from_columns_image(const IntMatrix& m, const PicardClass& c) { return PicardClass::from_vec(m * c.vec()); }

}  // namespace

IntMatrix intersection_form() { return hyperbolic_form(10); }
IntMatrix intersection_form_11() { return hyperbolic_form(11); }

PicardClass anticanonical() { return PicardClass::make(2, 2, {-1, -1, -1, -1, -1, -1, -1, -1}); }

RootSystemData e7_data() {
  RootSystemData d;
  d.name = "E7";
  d.surface_roots = {Hf() + Hg() - F(1) - F(2) - F(3) - F(4), Hf() + Hg() - F(5) - F(6) - F(7) - F(8)};
  d.symmetry_roots = {Hf() - Hg(), F(3) - F(4),       F(2) - F(3), F(1) - F(2),
                      Hg() - F(1) - F(5), F(5) - F(6), F(6) - F(7), F(7) - F(8)};
  d.delta_multiplicities = {2, 1, 2, 3, 4, 3, 2, 1};
  d.diagram_edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 4}};
  return d;
}

RootSystemData e6_data() {
  RootSystemData d;
  d.name = "E6";
  d.surface_roots = {Hf() + Hg() - F(1) - F(2) - F(3) - F(4), Hf() - F(5) - F(6), Hg() - F(7) - F(8)};
  d.symmetry_roots = {F(7) - F(8), F(6) - F(5),       Hg() - F(1) - F(6), F(1) - F(2),
                      F(2) - F(3), F(3) - F(4),       Hf() - F(1) - F(7)};
  d.delta_multiplicities = {1, 1, 2, 3, 2, 1, 2};
  d.diagram_edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {0, 6}};
  // Images of the basis under r. This is the unique isometry cycling
  // delta_0 -> delta_1 -> delta_2, alpha_0 -> alpha_5 -> alpha_1 and
  // alpha_2 -> alpha_6 -> alpha_4; the suite checks all of that.
  std::vector<PicardClass> images = {Hg(), Hf() + Hg() - F(1) - F(2), Hg() - F(2), Hg() - F(1), F(6),
                                     F(5), F(8),                      F(7),        F(3),        F(4)};
  std::vector<std::vector<long>> cols;
  for (const auto& c : images) cols.push_back(c.vec());
  d.rotation = IntMatrix::from_columns(cols);
  return d;
}

IntMatrix reflection_matrix(int i, const RootSystemData& data) {
  if (i < 0 || static_cast<std::size_t>(i) >= data.symmetry_roots.size())
    throw IndexOutOfRange("no symmetry root w" + std::to_string(i));
  const PicardClass& a = data.symmetry_roots[static_cast<std::size_t>(i)];
  IntMatrix m = IntMatrix::identity(10);
  for (std::size_t j = 0; j < 10; ++j) {
    PicardClass e;
    e.c[j] = 1;
    long p = pair(a, e);
    for (std::size_t k = 0; k < 10; ++k) m(k, j) += p * a.c[k];
  }
  return m;
}

PicardClass reflect(int i, const PicardClass& c, const RootSystemData& data) {
  if (i < 0 || static_cast<std::size_t>(i) >= data.symmetry_roots.size())
    throw IndexOutOfRange("no symmetry root w" + std::to_string(i));
  const PicardClass& a = data.symmetry_roots[static_cast<std::size_t>(i)];
  return c + pair(a, c) * a;
}

IntMatrix word_matrix(const std::string& word, const RootSystemData& data) {
  IntMatrix m = IntMatrix::identity(10);
  std::istringstream is(word);
  std::string tok;
  while (is >> tok) {
    if (tok == "r") {
      if (!data.rotation) throw UnknownToken("token r: " + data.name + " has no diagram rotation");
      m = m * *data.rotation;
      continue;
    }
    bool ok = tok.size() >= 2 && tok[0] == 'w';
    std::size_t idx = 0;
    for (std::size_t k = 1; ok && k < tok.size(); ++k) {
      if (tok[k] < '0' || tok[k] > '9') ok = false;
      else idx = idx * 10 + static_cast<std::size_t>(tok[k] - '0');
    }
    if (!ok || idx >= data.symmetry_roots.size()) throw UnknownToken("unknown word token '" + tok + "'");
    m = m * reflection_matrix(static_cast<int>(idx), data);
  }
  return m;
}

PicardClass apply_word(const std::string& word, const PicardClass& c, const RootSystemData& data) {
  return from_columns_image(word_matrix(word, data), c);
}

std::optional<std::vector<long>> translation_vector(const IntMatrix& m, const RootSystemData& data) {
  PicardClass delta = anticanonical();
  std::vector<long> k;
  for (const auto& a : data.symmetry_roots) {
    PicardClass diff = from_columns_image(m, a) - a;
    // diff = k delta; read k off the H_f coordinate (delta has 2 there)
    if (diff.c[0] % 2 != 0) return std::nullopt;
    long kk = diff.c[0] / 2;
    if (diff != kk * delta) return std::nullopt;
    k.push_back(kk);
  }
  return k;
}

IntMatrix isometry_inverse(const IntMatrix& m) {
  // Both forms used here satisfy G^2 = I.
  IntMatrix g = hyperbolic_form(m.size());
  IntMatrix inv = g * m.transpose() * g;
  if (inv * m != IntMatrix::identity(m.size())) throw InvariantViolation("matrix is not an isometry of the form");
  return inv;
}

IntMatrix gram_matrix(const std::vector<PicardClass>& roots) {
  IntMatrix g(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) g(i, j) = pair(roots[i], roots[j]);
  return g;
}

bool cartan_pattern_holds(const RootSystemData& data) {
  std::size_t n = data.symmetry_roots.size();
  IntMatrix expect(n);
  for (std::size_t i = 0; i < n; ++i) expect(i, i) = -2;
  for (auto [a, b] : data.diagram_edges) {
    expect(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = 1;
    expect(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = 1;
  }
  return gram_matrix(data.symmetry_roots) == expect;
}

bool surface_roots_orthogonal(const RootSystemData& data) {
  for (const auto& d : data.surface_roots)
    for (const auto& a : data.symmetry_roots)
      if (pair(d, a) != 0) return false;
  return true;
}

bool delta_decomposition_holds(const RootSystemData& data) {
  PicardClass sum;
  for (std::size_t i = 0; i < data.symmetry_roots.size(); ++i)
    sum = sum + data.delta_multiplicities.at(i) * data.symmetry_roots[i];
  return sum == anticanonical();
}

bool surface_roots_sum_to_anticanonical(const RootSystemData& data) {
  PicardClass sum;
  for (const auto& d : data.surface_roots) sum = sum + d;
  return sum == anticanonical();
}

std::vector<long> phi_e7_translation() { return {2, 0, 0, 0, -1, 0, 0, 0}; }
std::vector<long> psi_e7_translation() { return {0, 0, 0, 0, 0, 0, -1, 2}; }
std::vector<long> phi_e6_translation() { return {0, 0, -1, 0, 0, 0, 1}; }

namespace {

// Vector over (H, H', X_1..X_9).
std::vector<long> v11(long h1, long h2, std::initializer_list<std::pair<int, long>> xs = {}) {
  std::vector<long> v(11, 0);
  v[0] = h1;
  v[1] = h2;
  for (auto [i, c] : xs) v[static_cast<std::size_t>(i + 1)] = c;
  return v;
}
std::vector<long> x11(int i) { return v11(0, 0, {{i, 1}}); }

}  // namespace

BasisChange preliminary_basis_change() {
  BasisChange b;
  // F_1 = E_6 and F_2 = E_1: this is the only labelling compatible with the
  // reverse table (E_1 = F_2, E_6 = F_1) and with nu_2 = 1/z_1.
  b.fg_from_xy = IntMatrix::from_columns({
      v11(1, 1, {{2, -1}, {9, -1}}),           // H_f
      v11(1, 1, {{4, -1}, {9, -1}}),           // H_g
      x11(6),                                  // F_1
      x11(1),                                  // F_2
      x11(3),                                  // F_3
      x11(5),                                  // F_4
      x11(7),                                  // F_5
      x11(8),                                  // F_6
      v11(1, 1, {{2, -1}, {4, -1}, {9, -1}}),  // F_7
      v11(0, 1, {{9, -1}}),                    // F_8
      v11(1, 0, {{9, -1}}),                    // F_9
  });
  b.xy_from_fg = IntMatrix::from_columns({
      v11(1, 1, {{7, -1}, {8, -1}}),           // H_x
      v11(1, 1, {{7, -1}, {9, -1}}),           // H_y
      x11(2),                                  // E_1
      v11(0, 1, {{7, -1}}),                    // E_2
      x11(3),                                  // E_3
      v11(1, 0, {{7, -1}}),                    // E_4
      x11(4),                                  // E_5
      x11(1),                                  // E_6
      x11(5),                                  // E_7
      x11(6),                                  // E_8
      v11(1, 1, {{7, -1}, {8, -1}, {9, -1}}),  // E_9
  });
  return b;
}

BasisChange adjusted_basis_change() {
  BasisChange b;
  b.fg_from_xy = IntMatrix::from_columns({
      v11(2, 1, {{2, -1}, {4, -1}, {6, -1}, {9, -1}}),  // H_f
      v11(1, 1, {{6, -1}, {9, -1}}),                    // H_g
      v11(1, 0, {{6, -1}}),                             // F_1
      x11(1),                                           // F_2
      x11(3),                                           // F_3
      x11(5),                                           // F_4
      v11(1, 1, {{2, -1}, {6, -1}, {9, -1}}),           // F_5
      v11(1, 1, {{4, -1}, {6, -1}, {9, -1}}),           // F_6
      x11(7),                                           // F_7
      x11(8),                                           // F_8
      v11(1, 0, {{9, -1}}),                             // F_9
  });
  b.xy_from_fg = IntMatrix::from_columns({
      v11(1, 1, {{5, -1}, {6, -1}}),                    // H_x
      v11(1, 2, {{1, -1}, {5, -1}, {6, -1}, {9, -1}}),  // H_y
      x11(2),                                           // E_1
      v11(0, 1, {{5, -1}}),                             // E_2
      x11(3),                                           // E_3
      v11(0, 1, {{6, -1}}),                             // E_4
      x11(4),                                           // E_5
      v11(1, 1, {{1, -1}, {5, -1}, {6, -1}}),           // E_6
      x11(7),                                           // E_7
      x11(8),                                           // E_8
      v11(1, 1, {{5, -1}, {6, -1}, {9, -1}}),           // E_9
  });
  return b;
}

bool basis_change_consistent(const BasisChange& b) {
  IntMatrix id = IntMatrix::identity(11), g = intersection_form_11();
  return b.fg_from_xy * b.xy_from_fg == id && b.xy_from_fg * b.fg_from_xy == id &&
         b.fg_from_xy.transpose() * g * b.fg_from_xy == g && b.xy_from_fg.transpose() * g * b.xy_from_fg == g;
}

MultiplicativeParam MultiplicativeParam::one(std::size_t ngen) {
  MultiplicativeParam m;
  m.exponents.assign(ngen, 0);
  return m;
}

MultiplicativeParam MultiplicativeParam::generator(std::size_t ngen, std::size_t i) {
  MultiplicativeParam m = one(ngen);
  m.exponents.at(i) = 1;
  return m;
}

MultiplicativeParam MultiplicativeParam::operator*(const MultiplicativeParam& o) const {
  if (exponents.size() != o.exponents.size()) throw InvariantViolation("monomials over different generators");
  MultiplicativeParam r = *this;
  r.sign *= o.sign;
  for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += o.exponents[i];
  return r;
}

MultiplicativeParam MultiplicativeParam::operator/(const MultiplicativeParam& o) const { return *this * o.pow(-1); }

MultiplicativeParam MultiplicativeParam::pow(long k) const {
  MultiplicativeParam r = *this;
  if (k % 2 == 0) r.sign = 1;
  for (auto& e : r.exponents) e *= k;
  return r;
}

MultiplicativeParam MultiplicativeParam::operator-() const {
  MultiplicativeParam r = *this;
  r.sign = -r.sign;
  return r;
}

Scalar MultiplicativeParam::evaluate(const std::vector<Scalar>& values) const {
  if (values.size() != exponents.size()) throw InvariantViolation("evaluate: wrong number of generator values");
  if (values.empty()) return Scalar(make_rational(sign));
  Scalar r = values[0].one_like();
  for (std::size_t i = 0; i < values.size(); ++i)
    if (exponents[i] != 0) r *= values[i].pow(exponents[i]);
  return sign < 0 ? -r : r;
}

std::string MultiplicativeParam::to_string(const std::vector<std::string>& names) const {
  std::ostringstream num, den;
  auto put = [](std::ostringstream& os, const std::string& n, long e) {
    if (os.tellp() > 0) os << ' ';
    os << n;
    if (e != 1) os << '^' << e;
  };
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) put(num, names.at(i), exponents[i]);
    if (exponents[i] < 0) put(den, names.at(i), -exponents[i]);
  }
  std::string s = num.str().empty() ? "1" : num.str();
  if (!den.str().empty()) s += " / (" + den.str() + ")";
  return sign < 0 ? "-" + s : s;
}

MultiplicativeParam substitute(const MultiplicativeParam& m, const std::vector<MultiplicativeParam>& images) {
  if (images.size() != m.exponents.size()) throw InvariantViolation("substitute: one image per generator");
  MultiplicativeParam r = MultiplicativeParam::one(images.empty() ? 0 : images[0].exponents.size());
  r.sign = m.sign;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (m.exponents[i] != 0) r = r * images[i].pow(m.exponents[i]);
  return r;
}

const std::vector<std::string>& qracah_generator_names() {
  static const std::vector<std::string> names = {"q", "z1", "z2", "z3", "z4", "z5", "z6", "u", "d"};
  return names;
}

const char* matching_name(Matching m) { return m == Matching::preliminary ? "preliminary" : "adjusted"; }

namespace {

MultiplicativeParam G(std::size_t i) { return MultiplicativeParam::generator(kQRacahGenCount, i); }
MultiplicativeParam one9() { return MultiplicativeParam::one(kQRacahGenCount); }

}  // namespace

MonomialParams matching_params(Matching m) {
  auto q = G(kQ), u = G(kU), d = G(kD);
  auto z1 = G(kZ1), z2 = G(kZ2), z3 = G(kZ3), z4 = G(kZ4), z5 = G(kZ5), z6 = G(kZ6);
  // rho_i = -d_i, so -rho_1 = d and -rho_2 = d_2.
  MultiplicativeParam d2 = z1 * z3 * z5 / (z2 * z4 * z6 * q * d);
  MonomialParams p;
  if (m == Matching::preliminary) {
    p.nu = {z6 / u.pow(2), one9() / z1, one9() / z3, one9() / z5, d * z2 * z4, d2 * z2 * z4, u.pow(2), z2 * z4};
    p.kappa1 = z4;
    p.kappa2 = z2;
  } else {
    p.nu = {one9() / z6, one9() / z1, one9() / z3, one9() / z5, u * z4 / z2, u, d * z4 * z6 / u, d2 * z4 * z6 / u};
    p.kappa1 = u / z2;
    p.kappa2 = z4 / u;
  }
  return p;
}

std::array<MultiplicativeParam, 8> e7_root_variables(const MonomialParams& p) {
  const auto& n = p.nu;
  return {p.kappa1 / p.kappa2, n[2] / n[3], n[1] / n[2], n[0] / n[1],
          p.kappa2 / (n[0] * n[4]), n[4] / n[5], n[5] / n[6], n[6] / n[7]};
}

std::array<MultiplicativeParam, 8> root_variables(Matching m) { return e7_root_variables(matching_params(m)); }

MultiplicativeParam e7_step_product(const std::array<MultiplicativeParam, 8>& a) {
  return a[0].pow(2) * a[1] * a[2].pow(2) * a[3].pow(3) * a[4].pow(4) * a[5].pow(3) * a[6].pow(2) * a[7];
}

MultiplicativeParam evolve_qracah(const MultiplicativeParam& m) {
  std::vector<MultiplicativeParam> images;
  for (std::size_t i = 0; i < kQRacahGenCount; ++i) images.push_back(G(i));
  images[kZ2] = G(kQ) * G(kZ2);
  images[kZ4] = G(kQ) * G(kZ4);
  images[kD] = G(kD) / G(kQ);
  return substitute(m, images);
}

namespace {

std::optional<long> pure_q_power(const MultiplicativeParam& r, std::size_t q_index) {
  if (r.sign != 1) return std::nullopt;
  for (std::size_t i = 0; i < r.exponents.size(); ++i)
    if (i != q_index && r.exponents[i] != 0) return std::nullopt;
  return r.exponents[q_index];
}

template <std::size_t K, typename Evolve>
std::optional<std::vector<long>> shifts(const std::array<MultiplicativeParam, K>& a, Evolve evolve,
                                        std::size_t q_index) {
  std::vector<long> out;
  for (const auto& ai : a) {
    auto k = pure_q_power(evolve(ai) / ai, q_index);
    if (!k) return std::nullopt;
    out.push_back(*k);
  }
  return out;
}

MultiplicativeParam H(std::size_t i) { return MultiplicativeParam::generator(kE6GenCount, i); }
MultiplicativeParam nu6(int i) { return H(kNu1 + static_cast<std::size_t>(i - 1)); }

}  // namespace

std::optional<std::vector<long>> root_variable_shift(Matching m) {
  return shifts(root_variables(m), evolve_qracah, kQ);
}

std::array<MultiplicativeParam, 7> e6_root_variables() {
  auto k1 = H(kKappa1), k2 = H(kKappa2);
  return {nu6(7) / nu6(8),         nu6(6) / nu6(5),  k2 / (nu6(1) * nu6(6)), nu6(1) / nu6(2),
          nu6(2) / nu6(3),         nu6(3) / nu6(4),  k1 / (nu6(1) * nu6(7))};
}

MultiplicativeParam e6_step_product(const std::array<MultiplicativeParam, 7>& a) {
  return a[0] * a[1] * a[2].pow(2) * a[3].pow(3) * a[4].pow(2) * a[5] * a[6].pow(2);
}

std::array<MultiplicativeParam, 8> e6_blowup_coordinates() {
  auto k1 = H(kKappa1), k2 = H(kKappa2);
  return {nu6(1), nu6(2), nu6(3), nu6(4), k2 / nu6(5), k2 / nu6(6), k1 / nu6(7), k1 / nu6(8)};
}

std::array<MultiplicativeParam, 7> e6_root_variables_in_b() {
  auto b = [](int i) { return MultiplicativeParam::generator(8, static_cast<std::size_t>(i - 1)); };
  return {b(8) / b(7), b(5) / b(6), b(6) / b(1), b(1) / b(2), b(2) / b(3), b(3) / b(4), b(7) / b(1)};
}

std::optional<std::vector<long>> e6_root_variable_shift() {
  auto evolve = [](const MultiplicativeParam& m) {
    std::vector<MultiplicativeParam> images;
    for (std::size_t i = 0; i < kE6GenCount; ++i) images.push_back(H(i));
    images[kKappa1] = H(kKappa1) / H(kE6Q);
    images[kKappa2] = H(kE6Q) * H(kKappa2);
    return substitute(m, images);
  };
  return shifts(e6_root_variables(), evolve, kE6Q);
}

namespace {

std::string vec_str(const std::vector<long>& v) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '>';
  return os.str();
}

std::vector<long> negated(std::vector<long> v) {
  for (auto& x : v) x = -x;
  return v;
}

void add(std::vector<LatticeCheck>& out, std::string name, bool pass, std::string detail = {}) {
  out.push_back({std::move(name), pass, std::move(detail)});
}

void translation_check(std::vector<LatticeCheck>& out, const std::string& name, const IntMatrix& m,
                       const RootSystemData& data, const std::vector<long>& expect) {
  auto k = translation_vector(m, data);
  add(out, name, k && *k == expect, k ? "translation " + vec_str(*k) : "not a translation");
}

void root_system_checks(std::vector<LatticeCheck>& out, const RootSystemData& d) {
  add(out, d.name + " Cartan pattern", cartan_pattern_holds(d));
  add(out, d.name + " surface roots orthogonal to symmetry roots", surface_roots_orthogonal(d));
  add(out, d.name + " delta decomposition " + vec_str(d.delta_multiplicities), delta_decomposition_holds(d));
  add(out, d.name + " surface roots sum to -K", surface_roots_sum_to_anticanonical(d));
  bool invol = true, preserve = true;
  IntMatrix g = intersection_form(), id = IntMatrix::identity(10);
  for (std::size_t i = 0; i < d.symmetry_roots.size(); ++i) {
    IntMatrix w = reflection_matrix(static_cast<int>(i), d);
    invol = invol && w * w == id;
    preserve = preserve && w.transpose() * g * w == g;
  }
  add(out, d.name + " reflections are involutive isometries", invol && preserve);
}

}  // namespace

std::vector<LatticeCheck> lattice_identity_suite() {
  std::vector<LatticeCheck> out;
  RootSystemData e7 = e7_data(), e6 = e6_data();
  PicardClass delta = anticanonical();
  add(out, "pairing: delta.delta = 0, -K.F_i = 1", pair(delta, delta) == 0 && pair(delta, PicardClass::exceptional(1)) == 1);

  root_system_checks(out, e7);
  add(out, "E7 braid w3 w4 w3 = w4 w3 w4", word_matrix("w3 w4 w3", e7) == word_matrix("w4 w3 w4", e7));
  IntMatrix phi = word_matrix(words::kPhiE7, e7), psi = word_matrix(words::kPsiE7, e7);
  IntMatrix c = word_matrix(words::kConjugatorE7, e7);
  translation_check(out, "E7 phi word translation", phi, e7, phi_e7_translation());
  add(out, "E7 phi word, second spelling", word_matrix(words::kPhiE7Alt, e7) == phi);
  translation_check(out, "E7 psi word translation", psi, e7, psi_e7_translation());
  add(out, "E7 conjugation c phi c^-1 = psi", c * phi * isometry_inverse(c) == psi);
  add(out, "E7 phi fixes the surface roots",
      PicardClass::from_vec(phi * e7.surface_roots[0].vec()) == e7.surface_roots[0] &&
          PicardClass::from_vec(phi * e7.surface_roots[1].vec()) == e7.surface_roots[1]);

  add(out, "preliminary basis change is consistent", basis_change_consistent(preliminary_basis_change()));
  add(out, "adjusted basis change is consistent", basis_change_consistent(adjusted_basis_change()));

  MultiplicativeParam q = MultiplicativeParam::generator(kQRacahGenCount, kQ);
  for (Matching m : {Matching::preliminary, Matching::adjusted}) {
    std::string tag = std::string(matching_name(m)) + " matching";
    MultiplicativeParam prod = e7_step_product(root_variables(m));
    add(out, tag + ": root variable product = q", prod == q, prod.to_string(qracah_generator_names()));
    auto sh = root_variable_shift(m);
    std::vector<long> expect = negated(m == Matching::preliminary ? psi_e7_translation() : phi_e7_translation());
    add(out, tag + ": parameter step shifts root variables by " + vec_str(expect), sh && *sh == expect,
        sh ? vec_str(*sh) : "not a pure q-power");
  }

  root_system_checks(out, e6);
  const IntMatrix& r = *e6.rotation;
  IntMatrix g = intersection_form();
  add(out, "E6 rotation is an isometry of order 3",
      r.transpose() * g * r == g && r * r * r == IntMatrix::identity(10));
  auto maps = [&](const PicardClass& from, const PicardClass& to) { return PicardClass::from_vec(r * from.vec()) == to; };
  const auto &al = e6.symmetry_roots, &de = e6.surface_roots;
  add(out, "E6 rotation cycles (d0 d1 d2)(a0 a5 a1)(a2 a6 a4)",
      maps(de[0], de[1]) && maps(de[1], de[2]) && maps(de[2], de[0]) && maps(al[0], al[5]) && maps(al[5], al[1]) &&
          maps(al[1], al[0]) && maps(al[2], al[6]) && maps(al[6], al[4]) && maps(al[4], al[2]) && maps(al[3], al[3]));
  translation_check(out, "E6 phi word translation", word_matrix(words::kPhiE6, e6), e6, phi_e6_translation());

  auto a6 = e6_root_variables();
  MultiplicativeParam expect_q = H(kKappa1).pow(2) * H(kKappa2).pow(2);
  for (int i = 1; i <= 8; ++i) expect_q = expect_q / nu6(i);
  add(out, "E6 root variable product = kappa1^2 kappa2^2 / prod nu", e6_step_product(a6) == expect_q);
  auto b = e6_blowup_coordinates();
  std::vector<MultiplicativeParam> bimg(b.begin(), b.end());
  auto ab = e6_root_variables_in_b();
  bool same = true;
  for (std::size_t i = 0; i < 7; ++i) same = same && substitute(ab[i], bimg) == a6[i];
  add(out, "E6 root variables agree in nu/kappa and b coordinates", same);
  auto bq = [](int i) { return MultiplicativeParam::generator(8, static_cast<std::size_t>(i - 1)); };
  add(out, "E6 product = b5 b6 b7 b8 / (b1 b2 b3 b4)",
      e6_step_product(ab) == bq(5) * bq(6) * bq(7) * bq(8) / (bq(1) * bq(2) * bq(3) * bq(4)));
  auto sh6 = e6_root_variable_shift();
  add(out, "E6 parameter step shifts root variables by " + vec_str(negated(phi_e6_translation())),
      sh6 && *sh6 == negated(phi_e6_translation()), sh6 ? vec_str(*sh6) : "not a pure q-power");
  return out;
}

}  // namespace qracah
