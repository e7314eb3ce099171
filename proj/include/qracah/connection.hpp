#pragma once

#include <array>
#include <optional>

#include "qracah/drhp.hpp"
#include "qracah/ratfunc.hpp"

namespace qracah {

// A_s(z) = B(z) / P(z) with B a polynomial matrix of degree <= 6.
struct ConnectionMatrix {
  int s = 0;
  EnsembleParams params;
  Field field = Field::rational();
  Mat2<Poly> B;
  Poly P, Q;
  // z1..z6; z1 = z2 = q^{-s+1}
  std::array<Scalar, 6> zs;
  Scalar u2;

  Mat2<Scalar> operator()(const Scalar& z) const;
  // A^{-1}(z) = adj B(z) / Q(z)
  Mat2<Scalar> inverse_at(const Scalar& z) const;

  // b11 = n0 z^6 + n1 z^5 + n2 z^4 + n3 z^3 + n4 u^2 z^2 + n5 u^4 z + n6 u^6
  std::array<Scalar, 7> n() const;
  // b12 = z (z^2 - u^2)(m0 z^2 + m1 z + m0 u^2), likewise b21 with k
  std::array<Scalar, 2> m() const;
  std::array<Scalar, 2> k() const;
};

// Pole data z1..z6 at step s, in the field of the grid.
std::array<Scalar, 6> pole_parameters(const EnsembleParams& p, const Field& field, int s);
// (P_s, Q_s)
std::pair<Poly, Poly> pole_polys(const EnsembleParams& p, const Field& field, int s);

// Closed-form A_N from the rho values.
ConnectionMatrix build_AN(const NodeGrid& grid, const std::vector<Scalar>& rho);
// A_s = m(sigma(z/q)) diag(Phi+/Phi-, 1) m(sigma(z))^{-1}, reduced to B/P by
// exact division (CancellationFailure if a spurious pole survives).
ConnectionMatrix build_As_from_m(const DRHPSolution& m, const NodeGrid& grid);

// det B == P Q
bool det_identity_holds(const ConnectionMatrix& a);
// A(u^2/z) A(z) == I, as z^6 B(u^2/z) B(z) == z^6 P(u^2/z) P(z) I
bool involution_holds(const ConnectionMatrix& a);
// B(u) == P(u) I; u must lie in the field of the matrix.
bool identity_at(const ConnectionMatrix& a, const Scalar& u);
// Degree bound, palindromic diagonal and the odd off-diagonal form.
bool shape_holds(const ConnectionMatrix& a);

struct TransitionTriple {
  Vec2<Scalar> v, v1, v2;
};

// T = v v1^T / (v1^T v2)
NilpotentJump jump_from_triple(const TransitionTriple& t);

// Triple at the pole z1 = q^{-s+1}. v is scaled so its first nonzero
// component equals `first` (1 when not given). v2 is taken orthogonal to v.
TransitionTriple extract_triple(const ConnectionMatrix& a, const std::optional<Scalar>& first = std::nullopt);

// A_{s+1} = (I + T/(sigma(z/q) - pi_s)) A_s (I - T/(sigma(z) - pi_s))
ConnectionMatrix isomonodromy_step(const ConnectionMatrix& a, const NilpotentJump& T, const NodeGrid& grid);

TransitionTriple advance_triple(const ConnectionMatrix& a, const NilpotentJump& T, const TransitionTriple& t,
                                const NodeGrid& grid);

// D_{s+2} D_s / D_{s+1}^2 from the triples at s and s+1.
Scalar gap_double_ratio(const TransitionTriple& at_s, const TransitionTriple& at_next, int s, const NodeGrid& grid);

// Seeds from the oracle plus the double-ratio recursion, D_N..D_{M+1}.
GapTable gap_table_connection(const NodeGrid& grid);

// A_N, A_{N+1}, ..., A_M along the isomonodromic recursion.
std::vector<ConnectionMatrix> connection_sequence(const NodeGrid& grid);

}  // namespace qracah
