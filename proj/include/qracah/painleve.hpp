#pragma once

#include <array>
#include <string>
#include <vector>

#include "qracah/connection.hpp"

namespace qracah {

// Rational field when u^2 is a rational square, Q(u) otherwise.
Field u_field(const EnsembleParams& p);

// t is a root of the quadratic factor of b21; p = b11(t)/P(t). Both live in
// `field`, which is Q(sqrt(D)) (D = x^2 - 4u^2) unless t happens to lie in the
// matrix field.
struct SpectralPoint {
  Scalar t, p;
  Field field = Field::rational();
};

struct InvariantPoint {
  Scalar x, y;
};

// Parameter block of the (f, g) chart.
struct PainleveParams {
  std::array<Scalar, 8> nu;  // nu_1..nu_8 at indices 0..7
  Scalar kappa1, kappa2, q;

  // kappa1^2 kappa2^2 / prod nu_i
  Scalar step_q() const;
};

struct PainlevePoint {
  Scalar f, g;
  PainleveParams params;

  // Indices i in 1..8 of the base points p_i that (f, g) coincides with.
  std::vector<int> base_points() const;
};

enum class StepDirection { forward, inverse };
const char* direction_name(StepDirection d);

// `other_root` picks (x - sqrt D)/2 instead of (x + sqrt D)/2.
SpectralPoint spectral_from_connection(const ConnectionMatrix& a, bool other_root = false);
// (x, y) in the field of u. When t and u live in different quadratic fields
// y is recovered from the sqrt(D)-components of p t - u = y (p u - t).
InvariantPoint invariant_from_spectral(const SpectralPoint& sp, const Scalar& u);

struct AsymptoticD {
  Scalar d1, d2;
  // (2,1) entry of the limit; the limit is lower triangular, not diagonal.
  Scalar lower_left;
};
// Limit of S(z/q + u^2/z) A(z) S(z + u^2/(q z))^{-1}, S(w) = diag(1, w), read
// off leading coefficients. NonDiagonalLimit if the (1,2) limit is nonzero;
// InvariantViolation if d1 d2 differs from z1 z3 z5 / (z2 z4 z6 q).
AsymptoticD asymptotic_d(const ConnectionMatrix& a);

// nu, kappa from the pole data, u and rho_i = -d_i (swapped when swap_d).
PainleveParams painleve_params(const ConnectionMatrix& a, const Scalar& u, bool swap_d = false);

// (x, y) -> (f, g); z2, z4, z6 and u are read back from the parameter block.
PainlevePoint to_painleve(const InvariantPoint& xy, const PainleveParams& params);
InvariantPoint from_painleve(const Scalar& f, const Scalar& g, const PainleveParams& params);

PainlevePoint qp_e7_step(const PainlevePoint& pt, StepDirection dir);

// q-Hahn chart: f = 1/t, g = t p z6 / (z6 (p - w) + t w)
std::pair<Scalar, Scalar> qhahn_coords(const Scalar& t, const Scalar& p, const Scalar& w, const Scalar& z6);

struct LimitReport {
  std::vector<Rational> u;
  std::vector<double> err_f, err_g;
  // log_4 of consecutive error ratios, one per adjacent pair
  std::vector<double> order_f, order_g;
  double min_order() const;
  // min of the f and g estimates from the two smallest u
  double finest_order() const;
};
// The (x, y) -> (f, g) map at u = 4^-k, k = kmin..kmax, against the q-Hahn
// chart at t = x, p = -w y.
LimitReport qhahn_limit_check(const Rational& x, const Rational& y, const Rational& z2, const Rational& z4,
                              const Rational& z6, const Rational& w, int kmin = 3, int kmax = 8);

struct OrbitEntry {
  int s = 0;
  InvariantPoint xy;
  PainlevePoint point;
};
// (f_s, g_s) for s = N..M extracted from the isomonodromic sequence; grid over u_field.
std::vector<OrbitEntry> painleve_orbit(const NodeGrid& grid, bool swap_d = false);

struct Calibration {
  // "forward", "inverse" or "none" when neither direction reproduces the step
  std::string direction;
  bool swap_d = false;
  std::string detail;
};
Calibration calibrate_direction(const NodeGrid& grid);

struct StepCheck {
  int s = 0;
  bool match = false;
  Scalar f_step, g_step, f_next, g_next;
};
// One entry per s = N..M-1; uses the calibrated direction, or forward without
// swap when calibration found none.
std::vector<StepCheck> painleve_consistency(const NodeGrid& grid, const Calibration& cal);

// Double-ratio recursion in the field of u with (x, y) <-> (f, g) round trips
// checked at every step (InvariantViolation otherwise).
GapTable gap_table_painleve(const NodeGrid& grid);

}  // namespace qracah
