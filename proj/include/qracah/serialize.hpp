#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qracah/connection.hpp"
#include "qracah/lattice.hpp"
#include "qracah/painleve.hpp"
#include "qracah/tiling.hpp"

namespace qracah {

// Rationals as "p/q" strings; quadratic values as {a, b, radicand} meaning
// a + b sqrt(radicand); big floats as decimal strings.
nlohmann::json scalar_json(const Scalar& x);
nlohmann::json poly_json(const Poly& p);
nlohmann::json params_json(const EnsembleParams& p);
nlohmann::json connection_json(const ConnectionMatrix& a);
nlohmann::json orbit_json(const EnsembleParams& p, const Calibration& cal, const std::vector<OrbitEntry>& orbit,
                          const std::vector<StepCheck>& steps);

// Header "s,D_s,method", rows in table order then s order.
std::string gap_tables_csv(const std::vector<GapTable>& tables);

// "index,volume,probability,entries" with entries as a row-major list
std::string tilings_csv(const std::vector<BoxedPlanePartition>& tilings, const std::vector<Rational>& probs);
struct SliceRows {
  int t = 0;
  SliceDistribution enumerated, ensemble;
};
// "t,positions,tiling_probability,ensemble_probability", positions space separated
std::string slice_table_csv(const std::vector<SliceRows>& slices);

std::string lattice_report(const std::vector<LatticeCheck>& checks);

}  // namespace qracah
