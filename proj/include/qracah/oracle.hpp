#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qracah/ensemble.hpp"
#include "qracah/orthopoly.hpp"

namespace qracah {

// D_s for s = N..M+1, keyed by s.
struct GapTable {
  std::map<int, Scalar> D;
  std::string method;
};

// Largest C(M+1, N) gap_enumerate will walk.
inline constexpr long kEnumerationGuard = 1000000;

// Probability that every particle lies in {0..s-1}, by summing the ensemble
// density over configurations.
Scalar gap_enumerate(const NodeGrid& grid, int s);
GapTable gap_table_enumerate(const NodeGrid& grid);

// det(I - K~) on the block of nodes s..M.
Scalar gap_fredholm(const OPSystem& ops, const NodeGrid& grid, int s);
GapTable gap_table_fredholm(const NodeGrid& grid);

// Determinant of a dense matrix by exact Gaussian elimination with pivoting on
// nonzero entries (float backends pick the largest pivot).
Scalar determinant(std::vector<std::vector<Scalar>> a, const Scalar& zero);

// rho_x = 1 / (w(x) prod_{m<N, m!=x} (pi_x - pi_m)^2) for x = 0..N (x = N uses
// the same product over m <= N-1).
std::vector<Scalar> rho_values(const NodeGrid& grid);

// (D_N, D_{N+1}) from the product formulas.
std::pair<Scalar, Scalar> seed_values(const NodeGrid& grid, const std::vector<Scalar>& rho);

// R_s(pi_s, pi_s), with 1 + R = D_{s+1}/D_s.
Scalar resolvent_diag(const OPSystem& ops, const NodeGrid& grid, int s);

}  // namespace qracah
