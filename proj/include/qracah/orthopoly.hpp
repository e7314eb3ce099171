#pragma once

#include <vector>

#include "qracah/ensemble.hpp"
#include "qracah/poly.hpp"

namespace qracah {

// Monic orthogonal polynomials for a discrete weight on finitely many nodes.
struct OPSystem {
  std::vector<Poly> P;          // P[n] monic of degree n
  std::vector<Scalar> c;        // c[n] = (P_n, P_n)
  std::vector<Scalar> moments;  // m_k = sum_x w(x) node_x^k
};

// P_0..P_nmax by the three-term recurrence with inner products taken from the
// moments. c[nmax] may vanish (nmax = number of nodes); an earlier zero norm
// throws DegenerateWeight.
OPSystem build_ops(const std::vector<Scalar>& nodes, const std::vector<Scalar>& weights, int nmax);
OPSystem build_ops(const NodeGrid& grid);

// (f, g) = sum_x w(x) f(node_x) g(node_x)
Scalar inner_product(const Poly& f, const Poly& g, const std::vector<Scalar>& nodes,
                     const std::vector<Scalar>& weights);

// Conjugated Christoffel-Darboux kernel w(x) sum_{i<N} P_i(pi_x) P_i(pi_y) / c_i.
// It differs from the symmetric kernel by a diagonal similarity, so every
// principal minor (hence every gap probability) is the same.
Scalar cd_kernel(const OPSystem& ops, const NodeGrid& grid, int N, int x, int y);
// Two-point form w(x) (P_N(a)P_{N-1}(b) - P_{N-1}(a)P_N(b)) / (c_{N-1} (a - b)), x != y.
Scalar cd_kernel_two_point(const OPSystem& ops, const NodeGrid& grid, int N, int x, int y);

// Closed-form norm of the monic q-Racah polynomial P_n, with the infinite
// products truncated once the tail is below 2^-bits.
BigFloat cn_closed_form(const EnsembleParams& p, int n, unsigned bits);
// (a; q)_infinity at the given precision; NonConvergent unless |q| < 1.
BigFloat qpochhammer_inf(const Rational& a, const Rational& q, unsigned bits);

}  // namespace qracah
