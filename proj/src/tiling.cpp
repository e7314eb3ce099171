#include "qracah/tiling.hpp"

#include <algorithm>

#include "qracah/errors.hpp"

namespace qracah {

bool BoxedPlanePartition::valid() const {
  if (a < 1 || b < 1 || c < 0 || h.size() != static_cast<std::size_t>(a * b)) return false;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      int v = at(i, j);
      if (v < 0 || v > c) return false;
      if (j > 0 && v > at(i, j - 1)) return false;
      if (i > 0 && v > at(i - 1, j)) return false;
    }
  return true;
}

int BoxedPlanePartition::volume() const {
  int v = 0;
  for (int x : h) v += x;
  return v;
}

Rational macmahon_count(int a, int b, int c) {
  Rational r(1);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) r *= Rational(i + j + k - 1, i + j + k - 2);
  r.canonicalize();
  return r;
}

namespace {

void fill(BoxedPlanePartition& p, std::size_t pos, std::vector<BoxedPlanePartition>& out) {
  if (pos == p.h.size()) {
    out.push_back(p);
    return;
  }
  int i = static_cast<int>(pos) / p.b, j = static_cast<int>(pos) % p.b;
  int hi = p.c;
  if (j > 0) hi = std::min(hi, p.at(i, j - 1));
  if (i > 0) hi = std::min(hi, p.at(i - 1, j));
  for (int v = 0; v <= hi; ++v) {
    p.h[pos] = v;
    fill(p, pos + 1, out);
  }
}

}  // namespace

std::vector<BoxedPlanePartition> enumerate_tilings(int a, int b, int c, long limit) {
  if (a < 1 || b < 1 || c < 1) throw InvalidParams("hexagon sides must be >= 1");
  Rational count = macmahon_count(a, b, c);
  if (count > limit)
    throw TooLarge("hexagon (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") has " +
                   count.get_str() + " tilings, over the limit " + std::to_string(limit));
  BoxedPlanePartition p{a, b, c, std::vector<int>(static_cast<std::size_t>(a * b), 0)};
  std::vector<BoxedPlanePartition> out;
  out.reserve(count.get_num().get_ui());
  fill(p, 0, out);
  return out;
}

std::vector<int> path_positions(const BoxedPlanePartition& p, int row) {
  if (row < 0 || row >= p.a) throw IndexOutOfRange("row outside the plane partition");
  std::vector<int> pos{row};
  int ups = 0;
  for (int j = 0; j < p.b; ++j) {
    int before = p.c - p.at(row, j);
    for (; ups < before; ++ups) pos.push_back(pos.back() + 1);
    pos.push_back(pos.back());
  }
  for (; ups < p.c; ++ups) pos.push_back(pos.back() + 1);
  return pos;
}

ParticleSlice particles(const BoxedPlanePartition& p, int t) {
  if (t < 0 || t > p.b + p.c) throw IndexOutOfRange("slice t outside [0, b+c]");
  ParticleSlice s;
  s.t = t;
  for (int k = 0; k < p.a; ++k) s.x.push_back(path_positions(p, k)[static_cast<std::size_t>(t)]);
  return s;
}

std::pair<int, int> column_range(int a, int b, int c, int t) { return {std::max(0, t - b), std::min(t, c) + a - 1}; }

TilingWeight lozenge_factor(int c, int t, int x, const Rational& kappa2, const Rational& q) {
  long e = 2L * x - t + 2 - c - 1;  // 2j - c - 1
  TilingWeight w;
  w.rational = kappa2 * rpow(q, e) - 1;
  w.q_half_exponent = -e;  // q^{(c+1)/2 - j}
  w.kappa_exponent = -1;
  return w;
}

namespace {

void check_kappa(const Rational& kappa2, const Rational& q, int T) {
  if (!(sgn(q) > 0 && q < 1)) throw InvalidParams("tiling weights need 0 < q < 1");
  if (sgn(kappa2) < 0 || !(kappa2 < rpow(q, T - 1)))
    throw InvalidKappa("kappa^2 = " + to_string(kappa2) + " outside [0, q^(T-1))");
}

}  // namespace

TilingWeight tiling_weight(const BoxedPlanePartition& p, const Rational& kappa2, const Rational& q) {
  int T = p.b + p.c;
  check_kappa(kappa2, q, T);
  std::vector<std::vector<int>> paths;
  for (int k = 0; k < p.a; ++k) paths.push_back(path_positions(p, k));
  TilingWeight w;
  w.rational = 1;
  for (int t = 0; t <= T; ++t) {
    auto [lo, hi] = column_range(p.a, p.b, p.c, t);
    std::size_t next = 0;
    for (int x = lo; x <= hi; ++x) {
      if (next < paths.size() && paths[next][static_cast<std::size_t>(t)] == x) {
        ++next;
        continue;
      }
      TilingWeight f = lozenge_factor(p.c, t, x, kappa2, q);
      w.rational *= f.rational;
      w.q_half_exponent += f.q_half_exponent;
      w.kappa_exponent += f.kappa_exponent;
    }
    if (next != paths.size()) throw InvariantViolation("a path leaves the hexagon at t=" + std::to_string(t));
  }
  return w;
}

std::vector<Rational> tiling_probabilities(const std::vector<BoxedPlanePartition>& tilings, const Rational& kappa2,
                                           const Rational& q) {
  std::vector<TilingWeight> ws;
  for (const auto& p : tilings) ws.push_back(tiling_weight(p, kappa2, q));
  if (ws.empty()) return {};
  long emin = ws[0].q_half_exponent;
  for (const auto& w : ws) {
    // The horizontal lozenge count is the kappa exponent; it fixes the sign.
    if (w.kappa_exponent != ws[0].kappa_exponent)
      throw InvariantViolation("horizontal lozenge count differs between tilings");
    if ((w.q_half_exponent - ws[0].q_half_exponent) % 2 != 0)
      throw InvariantViolation("half-integer q powers differ between tilings");
    emin = std::min(emin, w.q_half_exponent);
  }
  std::vector<Rational> out;
  Rational Z = 0;
  for (const auto& w : ws) {
    out.push_back(w.rational * rpow(q, (w.q_half_exponent - emin) / 2));
    Z += out.back();
  }
  if (sgn(Z) == 0) throw DegenerateWeight("tiling partition function vanishes");
  for (auto& r : out) r /= Z;
  return out;
}

std::vector<SliceDistribution> all_slice_marginals(int a, int b, int c, const Rational& kappa2, const Rational& q,
                                                   long limit) {
  check_kappa(kappa2, q, b + c);
  auto tilings = enumerate_tilings(a, b, c, limit);
  auto probs = tiling_probabilities(tilings, kappa2, q);
  std::vector<SliceDistribution> out(static_cast<std::size_t>(b + c + 1));
  for (std::size_t n = 0; n < tilings.size(); ++n) {
    std::vector<std::vector<int>> paths;
    for (int k = 0; k < a; ++k) paths.push_back(path_positions(tilings[n], k));
    for (int t = 0; t <= b + c; ++t) {
      std::vector<int> x;
      for (const auto& pth : paths) x.push_back(pth[static_cast<std::size_t>(t)]);
      out[static_cast<std::size_t>(t)][x] += probs[n];
    }
  }
  for (auto& d : out) std::erase_if(d, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

SliceDistribution slice_marginal(int a, int b, int c, const Rational& kappa2, const Rational& q, int t, long limit) {
  if (t < 0 || t > b + c) throw IndexOutOfRange("slice t outside [0, b+c]");
  return all_slice_marginals(a, b, c, kappa2, q, limit)[static_cast<std::size_t>(t)];
}

SliceDistribution ensemble_slice_distribution(const SliceEnsemble& se) {
  const EnsembleParams& p = se.params;
  int N = p.N, M = p.M;
  if (M + 1 < N) throw InvalidParams("fewer nodes than particles");
  std::vector<Rational> w, nd;
  for (int x = 0; x <= M; ++x) {
    w.push_back(weight(x, p));
    nd.push_back(node(x, p));
  }
  SliceDistribution out;
  Rational Z = 0;
  std::vector<int> idx(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Rational v = 1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      v *= w[static_cast<std::size_t>(idx[i])];
      for (std::size_t j = 0; j < i; ++j) {
        Rational d = nd[static_cast<std::size_t>(idx[i])] - nd[static_cast<std::size_t>(idx[j])];
        v *= d * d;
      }
    }
    if (sgn(v) != 0) {
      std::vector<int> x;
      for (int i : idx) x.push_back(i + se.shift);
      out[x] = v;
      Z += v;
    }
    // next N-subset of {0..M}
    int k = N - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == M - (N - 1 - k)) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int i = k + 1; i < N; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  if (sgn(Z) == 0) throw DegenerateWeight("slice ensemble has zero total weight");
  for (auto& kv : out) kv.second /= Z;
  return out;
}

std::vector<SliceComparison> compare_slices(int a, int b, int c, const Rational& kappa2, const Rational& q,
                                            CaseRule rule, long limit) {
  auto marg = all_slice_marginals(a, b, c, kappa2, q, limit);
  std::vector<SliceComparison> out;
  for (int t = 0; t <= b + c; ++t) {
    SliceComparison cmp;
    cmp.t = t;
    cmp.printed_case = printed_case(a, b, c, t);
    const auto& m = marg[static_cast<std::size_t>(t)];
    for (const auto& kv : m) cmp.nonnegative = cmp.nonnegative && sgn(kv.second) >= 0;
    try {
      SliceEnsemble se = tiling_to_ensemble(a, b, c, t, kappa2, q, rule);
      cmp.case_index = se.case_index;
      cmp.match = ensemble_slice_distribution(se) == m;
    } catch (const Error&) {
      cmp.match = false;
    }
    out.push_back(cmp);
  }
  return out;
}

}  // namespace qracah
