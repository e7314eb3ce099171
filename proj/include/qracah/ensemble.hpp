#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qracah/poly.hpp"
#include "qracah/scalar.hpp"

namespace qracah {

// q-Racah ensemble parameters. gamma is not free: gamma = q^{-M-1}.
struct EnsembleParams {
  Rational q, alpha, beta, delta;
  int M = 0, N = 1;

  Rational gamma() const { return rpow(q, -(M + 1)); }
  // u^2 = gamma * delta * q^2
  Rational u2() const { return gamma() * delta * q * q; }
};

// Named parameter sets used throughout the tests: "P0" (rational u) and "P1"
// (u^2 = 1/8).
EnsembleParams preset(const std::string& name);

// Every violated inequality, as readable strings. Empty means valid.
std::vector<std::string> validate(const EnsembleParams& p);
// InvalidParams listing the violations.
void require_valid(const EnsembleParams& p);

// (y; q)_k
Scalar qpochhammer(const Scalar& y, const Scalar& q, int k);
Rational qpochhammer(const Rational& y, const Rational& q, int k);

// q-Racah weight at x in [0, M]; delta = 0 falls back to the q-Hahn form.
Rational weight(int x, const EnsembleParams& p);
// (alpha q, q^{-M}; q)_x / ((q, beta^{-1} q^{-M}; q)_x (alpha beta q)^x)
Rational weight_qhahn(int x, const EnsembleParams& p);
// Closed form of weight(x+1)/weight(x) through Phi^+- (exact).
Rational weight_ratio_closed_form(int x, const EnsembleParams& p);

// sigma(z) = z + u^2/(q z)
Scalar sigma(const Scalar& z, const EnsembleParams& p);
Rational node(int x, const EnsembleParams& p);

// Phi^+(z), Phi^-(z)
std::pair<Scalar, Scalar> phi_factors(const Scalar& z, const EnsembleParams& p);
// The same as polynomials over `field`.
std::pair<Poly, Poly> phi_polys(const EnsembleParams& p, const Field& field);

// Nodes pi_x = sigma(q^{-x}) and weights over one field.
struct NodeGrid {
  EnsembleParams params;
  Field field;
  std::vector<Scalar> nodes;
  std::vector<Scalar> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

NodeGrid make_grid(const EnsembleParams& p, const Field& field = Field::rational());

// --- tilings --------------------------------------------------------------

enum class CaseRule {
  // The four printed cases in order with the printed inequalities.
  printed,
  // Cases (1), (2) and (4) as listed; slices that would get case (3) or no
  // case use case (4). This is the rule the enumerated marginals support.
  verified,
};

struct SliceEnsemble {
  EnsembleParams params;
  int case_index = 0;     // case whose formulas were used
  int printed_case = 0;   // first printed case whose hypotheses hold, 0 if none
  int shift = 0;          // particle position = ensemble index + shift
};

// First printed case whose inequalities hold for slice t, or 0.
int printed_case(int a, int b, int c, int t);

SliceEnsemble tiling_to_ensemble(int a, int b, int c, int t, const Rational& kappa2, const Rational& q,
                                 CaseRule rule = CaseRule::verified);

}  // namespace qracah
