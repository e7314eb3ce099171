#pragma once

#include <vector>

#include "qracah/ensemble.hpp"
#include "qracah/mat2.hpp"
#include "qracah/oracle.hpp"
#include "qracah/poly.hpp"

namespace qracah {

// m(z) = poly(z) + sum_x res[x] / (z - poles[x]); the poles are pi_0..pi_{s-1}.
struct DRHPSolution {
  int s = 0;
  Mat2<Poly> poly;
  std::vector<Scalar> poles;
  std::vector<Mat2<Scalar>> res;

  Mat2<Scalar> operator()(const Scalar& z) const;
  Mat2<Scalar> derivative(const Scalar& z) const;
  // prod_x (z - pi_x)
  Poly pole_poly() const;
  // pole_poly() * m(z), a polynomial matrix.
  Mat2<Poly> numerator() const;
};

struct NilpotentJump {
  Scalar t11, t12, t21;

  Mat2<Scalar> matrix() const { return {t11, t12, t21, -t11}; }
};

// The explicit lower-triangular solution on nodes pi_0..pi_{N-1}:
// [[Pi, 0], [Pi sum rho_x/(z - pi_x), 1/Pi]].
DRHPSolution build_mN(const NodeGrid& grid, const std::vector<Scalar>& rho);

// m_s from the monic OPs of the weight restricted to pi_0..pi_{s-1}:
// [[P_N, H_N], [P_{N-1}/c_{N-1}, H_{N-1}/c_{N-1}]], H_n(z) = sum P_n(pi_x) w(x)/(z - pi_x).
DRHPSolution build_ms_direct(const NodeGrid& grid, int s);

// T_s from the kernel condition and the second column of the residue
// identity at pi_s, solved as an overdetermined exact system. Nilpotency is
// checked afterwards.
NilpotentJump solve_T(const DRHPSolution& m, const NodeGrid& grid);
// omega/(bc - ad) [[ab, -a^2], [b^2, -ab]] with [a;b] = first column at pi_s and
// [c;d] = second column minus omega times the derivative of the first.
NilpotentJump solve_T_closed_form(const DRHPSolution& m, const NodeGrid& grid);

// m_{s+1} = (I + T/(z - pi_s)) m_s; InvariantViolation if the new residue
// breaks the jump condition.
DRHPSolution advance_m(const DRHPSolution& m, const NilpotentJump& T, const NodeGrid& grid);

// D_{s+1}/D_s = w(pi_s) m11(pi_s)^2 / t12
Scalar gap_ratio_drhp(const DRHPSolution& m, const NilpotentJump& T, const NodeGrid& grid);

// det m == 1 as a polynomial identity (checked on the numerator).
bool det_is_one(const DRHPSolution& m);
// m(z) diag(z^{-N}, z^{k}) = I + O(1/z)
bool asymptotics_hold(const DRHPSolution& m, int N, int k);
// res_{pi_x} m = lim m(z) [[0, w(x)], [0, 0]] for every pole.
bool jump_conditions_hold(const DRHPSolution& m, const NodeGrid& grid);

GapTable gap_table_drhp(const NodeGrid& grid);

}  // namespace qracah
