#include "qracah/oracle.hpp"

#include <functional>

namespace qracah {

namespace {
long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 100 * kEnumerationGuard) return r;
  }
  return r;
}

// Sum over N-subsets of {0..s-1} of prod (pi_i - pi_j)^2 prod w.
Scalar configuration_sum(const NodeGrid& g, int s, int N) {
  Scalar total = g.field.zero();
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == N) {
      Scalar w = g.field.one();
      for (size_t i = 0; i < pick.size(); ++i) {
        w *= g.weights[static_cast<size_t>(pick[i])];
        for (size_t j = i + 1; j < pick.size(); ++j) {
          Scalar d = g.nodes[static_cast<size_t>(pick[i])] - g.nodes[static_cast<size_t>(pick[j])];
          w *= d * d;
        }
      }
      total += w;
      return;
    }
    for (int x = start; x < s; ++x) {
      pick.push_back(x);
      rec(x + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return total;
}

void check_s(const NodeGrid& g, int s) {
  const auto& p = g.params;
  if (s < p.N || s > p.M + 1) throw IndexOutOfRange("gap index s outside [N, M+1]");
}
}  // namespace

Scalar gap_enumerate(const NodeGrid& grid, int s) {
  check_s(grid, s);
  const auto& p = grid.params;
  if (binomial(p.M + 1, p.N) > kEnumerationGuard)
    throw TooLarge("C(M+1, N) exceeds the enumeration guard of " + std::to_string(kEnumerationGuard));
  return configuration_sum(grid, s, p.N) / configuration_sum(grid, p.M + 1, p.N);
}

GapTable gap_table_enumerate(const NodeGrid& grid) {
  GapTable t{{}, "enumerate"};
  for (int s = grid.params.N; s <= grid.params.M + 1; ++s) t.D.emplace(s, gap_enumerate(grid, s));
  return t;
}

Scalar determinant(std::vector<std::vector<Scalar>> a, const Scalar& zero) {
  size_t n = a.size();
  Scalar det = zero.one_like();
  bool floating = zero.backend() == Backend::bigfloat;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    for (size_t r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      if (piv == n) piv = r;
      if (!floating) break;
      if (a[r][col].bigfloat().abs().value() > a[piv][col].bigfloat().abs().value()) piv = r;
    }
    if (piv == n) return zero;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Scalar f = a[r][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

namespace {
std::vector<std::vector<Scalar>> one_minus_kernel(const OPSystem& ops, const NodeGrid& grid, int s) {
  int N = grid.params.N, M = grid.params.M;
  std::vector<std::vector<Scalar>> a;
  for (int x = s; x <= M; ++x) {
    std::vector<Scalar> row;
    for (int y = s; y <= M; ++y) {
      Scalar k = cd_kernel(ops, grid, N, x, y);
      row.push_back(x == y ? grid.field.one() - k : -k);
    }
    a.push_back(std::move(row));
  }
  return a;
}
}  // namespace

Scalar gap_fredholm(const OPSystem& ops, const NodeGrid& grid, int s) {
  check_s(grid, s);
  return determinant(one_minus_kernel(ops, grid, s), grid.field.zero());
}

GapTable gap_table_fredholm(const NodeGrid& grid) {
  OPSystem ops = build_ops(grid);
  GapTable t{{}, "fredholm"};
  for (int s = grid.params.N; s <= grid.params.M + 1; ++s) t.D.emplace(s, gap_fredholm(ops, grid, s));
  return t;
}

std::vector<Scalar> rho_values(const NodeGrid& grid) {
  int N = grid.params.N;
  if (N > grid.params.M) throw IndexOutOfRange("rho_values needs N <= M");
  std::vector<Scalar> rho;
  for (int x = 0; x <= N; ++x) {
    Scalar prod = grid.weights[static_cast<size_t>(x)];
    for (int m = 0; m < N; ++m) {
      if (m == x) continue;
      Scalar d = grid.nodes[static_cast<size_t>(x)] - grid.nodes[static_cast<size_t>(m)];
      prod *= d * d;
    }
    rho.push_back(grid.field.one() / prod);
  }
  return rho;
}

std::pair<Scalar, Scalar> seed_values(const NodeGrid& grid, const std::vector<Scalar>& rho) {
  int N = grid.params.N;
  if (static_cast<int>(rho.size()) < N + 1) throw InvalidParams("seed_values needs rho_0..rho_N");
  OPSystem ops = build_ops(grid.nodes, grid.weights, N);
  const auto& pi = grid.nodes;
  const auto& w = grid.weights;
  // D_N = prod (pi_i - pi_j)^2 prod w / prod_{i<N} c_i
  Scalar DN = grid.field.one();
  for (int i = 0; i < N; ++i) {
    DN *= w[static_cast<size_t>(i)] / ops.c[static_cast<size_t>(i)];
    for (int j = i + 1; j < N; ++j) {
      Scalar d = pi[static_cast<size_t>(i)] - pi[static_cast<size_t>(j)];
      DN *= d * d;
    }
  }
  if (N > grid.params.M) return {DN, DN};
  Scalar h = rho[static_cast<size_t>(N)], prod = grid.field.one();
  for (int m = 0; m < N; ++m) {
    Scalar d = pi[static_cast<size_t>(N)] - pi[static_cast<size_t>(m)];
    h += rho[static_cast<size_t>(m)] / (d * d);
    prod *= d * d;
  }
  return {DN, w[static_cast<size_t>(N)] * h * DN * prod};
}

Scalar resolvent_diag(const OPSystem& ops, const NodeGrid& grid, int s) {
  if (s < grid.params.N || s > grid.params.M) throw IndexOutOfRange("resolvent index s outside [N, M]");
  auto a = one_minus_kernel(ops, grid, s);
  size_t n = a.size();
  // Solve (I - K) y = e_0 by elimination; R(s,s) = y_0 - 1.
  std::vector<Scalar> rhs(n, grid.field.zero());
  rhs[0] = grid.field.one();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularOperator("I - K_s is singular");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs[0] / a[0][0] - grid.field.one();
}

}  // namespace qracah
