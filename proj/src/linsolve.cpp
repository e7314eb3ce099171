#include "qracah/linsolve.hpp"

namespace qracah {

std::vector<Scalar> solve_unique(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs) {
  if (rows.empty() || rows.size() != rhs.size()) throw InvalidParams("solve_unique: shape mismatch");
  size_t m = rows.size(), n = rows.front().size();
  const Scalar zero = rhs.front().zero_like();
  size_t r = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < n && r < m; ++col) {
    size_t piv = r;
    while (piv < m && rows[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    for (size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col] / rows[r][col];
      for (size_t k = col; k < n; ++k) rows[i][k] -= f * rows[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (r < n) throw NoSolution("linear system has no unique solution (rank " + std::to_string(r) + " < " + std::to_string(n) + ")");
  for (size_t i = r; i < m; ++i) {
    if (rhs[i].is_zero()) continue;
    if (zero.backend() == Backend::bigfloat) {
      unsigned bits = zero.bigfloat().bits();
      BigFloat tol(Rational(1), bits);
      for (unsigned k = 0; k < bits / 2; ++k) tol = tol / BigFloat(Rational(2), bits);
      if (rhs[i].bigfloat().abs().value() <= tol.value()) continue;
    }
    throw NoSolution("overdetermined linear system is inconsistent");
  }
  std::vector<Scalar> x(n, zero);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / rows[i][pivot_col[i]];
  return x;
}

}  // namespace qracah
