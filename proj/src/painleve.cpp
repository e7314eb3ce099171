#include "qracah/painleve.hpp"

#include <cmath>
#include <functional>

namespace qracah {

namespace {
bool same_field(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) return false;
  if (a.backend() != Backend::quadext) return true;
  return a.quad().r() == b.quad().r();
}

// Horner with every (rational) coefficient lifted into the field of t.
Scalar eval_lifted(const Poly& f, const Scalar& t) {
  Scalar acc = t.zero_like();
  for (int i = f.degree(); i >= 0; --i) acc = acc * t + t.lift(f.coeff(i).rational());
  return acc;
}

Scalar lift_to(const Scalar& target_like, const Scalar& v) {
  if (same_field(target_like, v)) return v;
  return target_like.lift(v.rational());
}

Scalar prod_range(const PainleveParams& pp, int from, int to, const std::function<Scalar(const Scalar&)>& f) {
  Scalar acc = pp.q.one_like();
  for (int i = from; i <= to; ++i) acc *= f(pp.nu[static_cast<size_t>(i - 1)]);
  return acc;
}

// X with a (X c - target) = b (X c - 1)
Scalar solve_linear_fractional(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& target) {
  Scalar den = c * (a - b);
  if (den.is_zero()) throw IndeterminateStep("coefficient of the updated coordinate vanishes");
  return (a * target - b) / den;
}
}  // namespace

Field u_field(const EnsembleParams& p) {
  Rational root;
  if (rational_sqrt(p.u2(), root)) return Field::rational();
  return Field::quadratic(p.u2());
}

Scalar PainleveParams::step_q() const {
  Scalar prod = q.one_like();
  for (const auto& v : nu) prod *= v;
  return kappa1 * kappa1 * kappa2 * kappa2 / prod;
}

std::vector<int> PainlevePoint::base_points() const {
  std::vector<int> hits;
  for (int i = 1; i <= 8; ++i) {
    const Scalar& v = params.nu[static_cast<size_t>(i - 1)];
    if (v.is_zero()) continue;
    bool hit = i <= 4 ? (f == v && g == v.one_like() / v)
                      : (f == params.kappa1 / v && g == v / params.kappa2);
    if (hit) hits.push_back(i);
  }
  return hits;
}

const char* direction_name(StepDirection d) { return d == StepDirection::forward ? "forward" : "inverse"; }

SpectralPoint spectral_from_connection(const ConnectionMatrix& a, bool other_root) {
  auto k = a.k();
  if (k[0].is_zero()) throw DegenerateB21("k0 = 0: b21 has no quadratic factor");
  Rational x = -(k[1] / k[0]).rational();
  Rational u2 = a.params.u2();
  Rational disc = x * x - 4 * u2;
  Rational root, half(1, 2);
  int sign = other_root ? -1 : 1;
  SpectralPoint sp;
  if (rational_sqrt(disc, root)) {
    sp.field = a.field;
    sp.t = a.field(half * (x + sign * root));
  } else if (a.field.backend() == Backend::quadext && *a.field.context() == u2 && rational_sqrt(disc / u2, root)) {
    sp.field = a.field;
    sp.t = a.field(half * x) + a.field(half * sign * root) * a.field.u(u2);
  } else {
    sp.field = Field::quadratic(disc);
    sp.t = sp.field(half * x) + sp.field(half * sign) * sp.field.u(disc);
  }
  Scalar den = eval_lifted(a.P, sp.t);
  if (den.is_zero()) throw EvaluationAtPole("spectral t is a root of P_s");
  sp.p = eval_lifted(a.B.a11, sp.t) / den;
  return sp;
}

InvariantPoint invariant_from_spectral(const SpectralPoint& sp, const Scalar& u) {
  const Scalar& t = sp.t;
  const Scalar& p = sp.p;
  Scalar u2 = u * u;
  bool split = t.backend() == Backend::quadext && !same_field(t, u) && !t.is_rational();
  InvariantPoint out;
  if (!split) {
    Scalar tl = lift_to(u, t), pl = lift_to(u, p);
    if (tl == u || tl == -u) throw InvolutionFixedPoint("t = +-u is fixed by the involution");
    Scalar den = pl * u - tl;
    if (den.is_zero()) throw BasePointHit("p u = t");
    out.x = tl + u2 / tl;
    out.y = (pl * tl - u) / den;
    return out;
  }
  // t, p in Q(sqrt D) while u is outside it: compare sqrt(D)-components.
  Scalar xt = t + t.lift(u2.rational()) / t;
  out.x = u.lift(xt.rational());
  Scalar pt = p * t;
  auto comp = [&](const Scalar& v, bool second) { return u.lift(second ? v.quad().b() : v.quad().a()); };
  Scalar A = comp(pt, false), B = comp(pt, true), C = comp(t, false), E = comp(t, true);
  Scalar F = comp(p, false), G = comp(p, true);
  Scalar den1 = G * u - E, den2 = F * u - C;
  if (!den1.is_zero()) {
    out.y = B / den1;
    if (!(out.y * den2 == A - u)) throw InvariantViolation("y is not consistent across sqrt(D)-components");
  } else if (!den2.is_zero()) {
    if (!B.is_zero()) throw InvariantViolation("y is not consistent across sqrt(D)-components");
    out.y = (A - u) / den2;
  } else {
    throw BasePointHit("p u = t");
  }
  return out;
}

AsymptoticD asymptotic_d(const ConnectionMatrix& a) {
  // S(z/q + u^2/z) ~ diag(1, z/q) and S(z + u^2/(qz))^{-1} ~ diag(1, 1/z), so
  // the (1,2) limit is b12's z^7 coefficient and the (2,1) limit b21's z^5 one / q.
  if (a.B.a12.degree() > 6) throw NonDiagonalLimit("(1,2) limit is nonzero");
  if (a.B.a11.degree() > 6 || a.B.a22.degree() > 6) throw NonDiagonalLimit("a diagonal entry grows faster than P");
  Scalar q = a.field(a.params.q);
  AsymptoticD d;
  d.d1 = a.B.a11.coeff(6);
  d.d2 = a.B.a22.coeff(6) / q;
  if (a.B.a21.degree() == 6) throw NonDiagonalLimit("(2,1) limit is infinite");
  d.lower_left = a.B.a21.coeff(5) / q;
  const auto& z = a.zs;
  if (!(d.d1 * d.d2 == z[0] * z[2] * z[4] / (z[1] * z[3] * z[5] * q)))
    throw InvariantViolation("d1 d2 differs from z1 z3 z5 / (z2 z4 z6 q)");
  return d;
}

PainleveParams painleve_params(const ConnectionMatrix& a, const Scalar& u, bool swap_d) {
  AsymptoticD d = asymptotic_d(a);
  auto L = [&](const Scalar& v) { return lift_to(u, v); };
  Scalar z1 = L(a.zs[0]), z2 = L(a.zs[1]), z3 = L(a.zs[2]), z4 = L(a.zs[3]), z5 = L(a.zs[4]), z6 = L(a.zs[5]);
  Scalar rho1 = -L(d.d1), rho2 = -L(d.d2);
  if (swap_d) std::swap(rho1, rho2);
  Scalar one = u.one_like();
  PainleveParams pp;
  pp.nu = {one / z6, one / z1, one / z3, one / z5, u * z4 / z2, u, -rho1 * z4 * z6 / u, -rho2 * z4 * z6 / u};
  pp.kappa1 = u / z2;
  pp.kappa2 = z4 / u;
  pp.q = u.lift(a.params.q);
  return pp;
}

PainlevePoint to_painleve(const InvariantPoint& xy, const PainleveParams& params) {
  const Scalar& u = params.nu[5];
  Scalar one = u.one_like();
  Scalar z6 = one / params.nu[0], z2 = u / params.kappa1, z4 = params.kappa2 * u;
  const Scalar &x = xy.x, &y = xy.y;
  Scalar s1 = z2 + z4 + z6, s2 = z2 * z4 + z2 * z6 + z4 * z6, s3 = z2 * z4 * z6;
  Scalar u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u5 = u4 * u;
  Scalar xyu = x * y + u * (y - one);
  Scalar fn = s3 * xyu - u2 * (x * x - s1 * x + s2 * (y + one)) + u3 * (one - y) * (s1 - x) + u4 * (one + y);
  Scalar fd = s3 * x * xyu - u2 * (s2 * x * y + s3 * (y + one)) + u3 * s2 * (one - y) + u4 * (s1 * (one + y) - x) +
              u5 * (y - one);
  Scalar gn = x * y * z6 + u * z6 * (y - one) - u2 * (one + y);
  Scalar gd = z6 * (one + y) - x - u * (one - y);
  if (fd.is_zero() || gd.is_zero()) throw BasePointHit("(x, y) -> (f, g) is undefined at this point");
  return {fn / fd, gn / gd, params};
}

InvariantPoint from_painleve(const Scalar& f, const Scalar& g, const PainleveParams& params) {
  const Scalar &n1 = params.nu[0], &n6 = params.nu[5], &k1 = params.kappa1, &k2 = params.kappa2;
  Scalar one = f.one_like();
  Scalar fg = f * g;
  Scalar xd = k1 - k2 * fg;
  Scalar xn = (k1 - k2) * g + n6 * (one + k1 * k2) * (one - fg) + n6 * n6 * (k1 - k2) * f;
  Scalar yn = n1 * n6 * (one - fg) * (n6 * k1 - (one + k1 * k2) * g) + k2 * fg * ((n1 * n6 - one) * g - n6) +
              n1 * k2 * g * g + k1 * (one - n1 * g) * (g + n6);
  Scalar yd = (one - fg) * (n6 - k2 * (g - n6 * k1)) -
              n6 * ((g + n6) * (k1 * n1 + k2 * f * (one - g * n1)) - k1 * (one + n6 * f));
  if (xd.is_zero() || yd.is_zero()) throw BasePointHit("(f, g) -> (x, y) is undefined at this point");
  return {xn / xd, yn / yd};
}

PainlevePoint qp_e7_step(const PainlevePoint& pt, StepDirection dir) {
  const PainleveParams& pp = pt.params;
  const Scalar &f = pt.f, &g = pt.g, &q = pp.q, &k1 = pp.kappa1, &k2 = pp.kappa2;
  Scalar one = q.one_like();
  auto ratio = [&](auto num_term, auto den_term) {
    Scalar num = prod_range(pp, 5, 8, num_term);
    Scalar den = prod_range(pp, 1, 4, den_term);
    if (den.is_zero()) throw IndeterminateStep("right-hand side has a pole at this point");
    return num / den;
  };
  PainlevePoint out;
  out.params = pp;
  if (dir == StepDirection::forward) {
    // (f g - k1/k2)(F g - k1/(q k2)) = rhs1 (f g - 1)(F g - 1)
    Scalar rhs1 = ratio([&](const Scalar& v) { return g - v / k2; }, [&](const Scalar& v) { return g - one / v; });
    Scalar F = solve_linear_fractional(f * g - k1 / k2, rhs1 * (f * g - one), g, k1 / (q * k2));
    Scalar K1 = k1 / q, K2 = q * k2;
    // (F G - K1/K2)(F g - q K1/K2) = rhs2 (F G - 1)(F g - 1)
    Scalar rhs2 = ratio([&](const Scalar& v) { return F - K1 / v; }, [&](const Scalar& v) { return F - v; });
    Scalar G = solve_linear_fractional(F * g - q * K1 / K2, rhs2 * (F * g - one), F, K1 / K2);
    out.f = F;
    out.g = G;
    out.params.kappa1 = K1;
    out.params.kappa2 = K2;
  } else {
    Scalar rhs2 = ratio([&](const Scalar& v) { return f - k1 / v; }, [&](const Scalar& v) { return f - v; });
    Scalar G = solve_linear_fractional(f * g - k1 / k2, rhs2 * (f * g - one), f, q * k1 / k2);
    Scalar K1 = k1 * q, K2 = k2 / q;
    Scalar rhs1 = ratio([&](const Scalar& v) { return G - v / K2; }, [&](const Scalar& v) { return G - one / v; });
    Scalar F = solve_linear_fractional(f * G - K1 / (q * K2), rhs1 * (f * G - one), G, K1 / K2);
    out.f = F;
    out.g = G;
    out.params.kappa1 = K1;
    out.params.kappa2 = K2;
  }
  return out;
}

std::pair<Scalar, Scalar> qhahn_coords(const Scalar& t, const Scalar& p, const Scalar& w, const Scalar& z6) {
  if (t.is_zero()) throw ZeroArgument("t = 0");
  Scalar den = z6 * (p - w) + t * w;
  if (den.is_zero()) throw BasePointHit("q-Hahn g is undefined at this point");
  return {t.one_like() / t, t * p * z6 / den};
}

double LimitReport::min_order() const {
  double m = INFINITY;
  for (double o : order_f) m = std::min(m, o);
  for (double o : order_g) m = std::min(m, o);
  return m;
}

double LimitReport::finest_order() const {
  if (order_f.empty() || order_g.empty()) return NAN;
  return std::min(order_f.back(), order_g.back());
}

LimitReport qhahn_limit_check(const Rational& x, const Rational& y, const Rational& z2, const Rational& z4,
                              const Rational& z6, const Rational& w, int kmin, int kmax) {
  LimitReport rep;
  auto limit = qhahn_coords(Scalar(x), Scalar(-w * y), Scalar(w), Scalar(z6));
  auto absd = [](const Scalar& a, const Scalar& b) { return std::fabs((a - b).rational().get_d()); };
  for (int k = kmin; k <= kmax; ++k) {
    Rational u = rpow(Rational(1, 4), k);
    PainleveParams pp;
    Scalar one(Rational(1));
    for (auto& v : pp.nu) v = Scalar(Rational(0));
    pp.nu[0] = one / Scalar(z6);
    pp.nu[5] = Scalar(u);
    pp.kappa1 = Scalar(u / z2);
    pp.kappa2 = Scalar(z4 / u);
    pp.q = one;
    PainlevePoint pt = to_painleve({Scalar(x), Scalar(y)}, pp);
    rep.u.push_back(u);
    rep.err_f.push_back(absd(pt.f, limit.first));
    rep.err_g.push_back(absd(pt.g, limit.second));
  }
  auto orders = [](const std::vector<double>& e) {
    std::vector<double> o;
    for (size_t i = 0; i + 1 < e.size(); ++i) o.push_back(std::log(e[i] / e[i + 1]) / std::log(4.0));
    return o;
  };
  rep.order_f = orders(rep.err_f);
  rep.order_g = orders(rep.err_g);
  return rep;
}

namespace {
OrbitEntry orbit_entry(const ConnectionMatrix& a, const Scalar& u, bool swap_d) {
  SpectralPoint sp = spectral_from_connection(a);
  InvariantPoint xy = invariant_from_spectral(sp, u);
  InvariantPoint other = invariant_from_spectral(spectral_from_connection(a, true), u);
  if (!(other.x == xy.x) || !(other.y == xy.y))
    throw InvariantViolation("the two roots of b21 give different invariant points");
  PainleveParams pp = painleve_params(a, u, swap_d);
  PainlevePoint pt = to_painleve(xy, pp);
  InvariantPoint back = from_painleve(pt.f, pt.g, pp);
  if (!(back.x == xy.x) || !(back.y == xy.y)) throw InvariantViolation("(f, g) -> (x, y) round trip failed");
  return {a.s, xy, pt};
}

Scalar grid_u(const NodeGrid& grid) { return grid.field.u(grid.params.u2()); }
}  // namespace

std::vector<OrbitEntry> painleve_orbit(const NodeGrid& grid, bool swap_d) {
  Scalar u = grid_u(grid);
  std::vector<OrbitEntry> out;
  for (const auto& a : connection_sequence(grid)) out.push_back(orbit_entry(a, u, swap_d));
  return out;
}

Calibration calibrate_direction(const NodeGrid& grid) {
  Calibration cal{"none", false, ""};
  if (grid.params.M <= grid.params.N) {
    cal.detail = "no step to calibrate (M = N)";
    return cal;
  }
  std::string tried;
  for (bool swap : {false, true}) {
    auto orbit = painleve_orbit(grid, swap);
    const auto& next = orbit[1].point;
    for (StepDirection dir : {StepDirection::forward, StepDirection::inverse}) {
      std::string label = std::string(direction_name(dir)) + (swap ? "/swap" : "");
      try {
        PainlevePoint st = qp_e7_step(orbit[0].point, dir);
        if (st.f == next.f && st.g == next.g) {
          cal.direction = direction_name(dir);
          cal.swap_d = swap;
          cal.detail = label + " reproduces s=" + std::to_string(grid.params.N) + " -> " +
                       std::to_string(grid.params.N + 1);
          return cal;
        }
        tried += label + ": f " + st.f.str() + " vs " + next.f.str() + "; ";
      } catch (const Error& e) {
        tried += label + ": " + e.kind() + "; ";
      }
    }
  }
  cal.detail = "no direction matches the isomonodromic step: " + tried;
  return cal;
}

std::vector<StepCheck> painleve_consistency(const NodeGrid& grid, const Calibration& cal) {
  StepDirection dir = cal.direction == "inverse" ? StepDirection::inverse : StepDirection::forward;
  auto orbit = painleve_orbit(grid, cal.swap_d);
  std::vector<StepCheck> out;
  for (size_t i = 0; i + 1 < orbit.size(); ++i) {
    StepCheck c;
    c.s = orbit[i].s;
    c.f_next = orbit[i + 1].point.f;
    c.g_next = orbit[i + 1].point.g;
    try {
      PainlevePoint st = qp_e7_step(orbit[i].point, dir);
      c.f_step = st.f;
      c.g_step = st.g;
      c.match = st.f == c.f_next && st.g == c.g_next;
    } catch (const Error&) {
      c.match = false;
    }
    out.push_back(c);
  }
  return out;
}

GapTable gap_table_painleve(const NodeGrid& grid) {
  const auto& p = grid.params;
  Scalar u = grid_u(grid);
  auto rho = rho_values(grid);
  auto seeds = seed_values(grid, rho);
  GapTable out{{}, "painleve"};
  out.D.emplace(p.N, seeds.first);
  out.D.emplace(p.N + 1, seeds.second);
  ConnectionMatrix a = build_AN(grid, rho);
  TransitionTriple t = extract_triple(a);
  orbit_entry(a, u, false);
  for (int s = p.N; s + 1 <= p.M; ++s) {
    NilpotentJump T = jump_from_triple(t);
    TransitionTriple next = advance_triple(a, T, t, grid);
    Scalar ratio = gap_double_ratio(t, next, s, grid);
    const Scalar& d0 = out.D.at(s);
    const Scalar& d1 = out.D.at(s + 1);
    out.D.emplace(s + 2, ratio * d1 * d1 / d0);
    a = isomonodromy_step(a, T, grid);
    orbit_entry(a, u, false);
    t = next;
  }
  return out;
}

}  // namespace qracah
