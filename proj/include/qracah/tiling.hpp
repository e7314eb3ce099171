#pragma once

#include <map>
#include <vector>

#include "qracah/ensemble.hpp"

namespace qracah {

// a x b array with entries in [0, c], weakly decreasing along rows and
// columns. Row k is the k-th path from the bottom.
struct BoxedPlanePartition {
  int a = 0, b = 0, c = 0;
  std::vector<int> h;  // row-major

  int at(int row, int col) const { return h[static_cast<std::size_t>(row * b + col)]; }
  bool valid() const;
  int volume() const;
};

// N = a particle positions on the vertical line through (t, 0).
struct ParticleSlice {
  int t = 0;
  std::vector<int> x;
};

// MacMahon's box formula prod_{i,j,k} (i+j+k-1)/(i+j+k-2).
Rational macmahon_count(int a, int b, int c);

// Every boxed plane partition in lexicographic order. TooLarge when the
// product formula exceeds `limit`.
std::vector<BoxedPlanePartition> enumerate_tilings(int a, int b, int c, long limit = 100000);

// Row k becomes a path from (0, k) with b flat and c up steps; flat step j
// comes after c - h[k][j] up steps. positions[t] for t = 0..b+c.
std::vector<int> path_positions(const BoxedPlanePartition& p, int row);
ParticleSlice particles(const BoxedPlanePartition& p, int t);

// Range of x on column t inside the sheared hexagon.
std::pair<int, int> column_range(int a, int b, int c, int t);

// Product of horizontal-lozenge factors kappa q^{j-(c+1)/2} - q^{(c+1)/2-j}/kappa
// with 2j = 2x - t + 2 for each empty site (t, x), kept as
//   rational * q^{q_half_exponent / 2} * kappa^{kappa_exponent}.
// Each factor is (kappa^2 q^{2j-c-1} - 1) q^{(c+1)/2-j} / kappa.
struct TilingWeight {
  Rational rational;
  long q_half_exponent = 0;
  long kappa_exponent = 0;
};
TilingWeight tiling_weight(const BoxedPlanePartition& p, const Rational& kappa2, const Rational& q);
// Single factor at site (t, x), same representation.
TilingWeight lozenge_factor(int c, int t, int x, const Rational& kappa2, const Rational& q);

// Normalized probabilities of the given tilings. Throws InvariantViolation if
// the kappa exponents or the parity of the q half-exponents differ.
std::vector<Rational> tiling_probabilities(const std::vector<BoxedPlanePartition>& tilings, const Rational& kappa2,
                                           const Rational& q);

using SliceDistribution = std::map<std::vector<int>, Rational>;

// Exact marginal of slice t from full enumeration; zero entries dropped.
SliceDistribution slice_marginal(int a, int b, int c, const Rational& kappa2, const Rational& q, int t,
                                 long limit = 100000);
// All slices 0..b+c from one enumeration.
std::vector<SliceDistribution> all_slice_marginals(int a, int b, int c, const Rational& kappa2, const Rational& q,
                                                   long limit = 100000);

// q-Racah N-point distribution of the slice ensemble, positions shifted into
// tiling coordinates; zero entries dropped.
SliceDistribution ensemble_slice_distribution(const SliceEnsemble& se);

struct SliceComparison {
  int t = 0;
  int case_index = 0;
  int printed_case = 0;
  bool match = false;
  bool nonnegative = true;
};
// Enumerated marginals against the ensemble under tiling_to_ensemble(rule).
std::vector<SliceComparison> compare_slices(int a, int b, int c, const Rational& kappa2, const Rational& q,
                                            CaseRule rule = CaseRule::verified, long limit = 100000);

}  // namespace qracah
