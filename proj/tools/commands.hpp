#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qracah/ensemble.hpp"
#include "qracah/scalar.hpp"

namespace qracah::cli {

struct TilingBlock {
  int a = 0, b = 0, c = 0;
  Rational kappa2, q;
  std::optional<int> t;  // every slice when absent
};

// Exactly one block is set.
struct ParamBlock {
  std::optional<EnsembleParams> ensemble;
  std::optional<TilingBlock> tiling;
};

// Flat "key=value" lines (# starts a comment) or the same pairs separated by
// commas. Values are exact rationals or integers. ParseError on unknown or
// repeated keys, missing keys, or a mix of ensemble and tiling keys.
ParamBlock parse_param_text(const std::string& text);
// A preset name (P0, P1), a readable file, or inline pairs.
ParamBlock load_params(const std::string& spec);

struct Options {
  std::string params = "P0";
  std::string method = "all";
  std::string backend = "rational";
  unsigned bits = 128;
  std::uint64_t seed = 20240607;
  int points = 10;
  std::string out;
  // crosscheck only: perturb k1 of A_N before stepping
  bool corrupt_k1 = false;
};

struct RunConfig {
  ParamBlock params;
  Backend backend = Backend::rational;
  unsigned bits = 128;
  std::string method;
  std::uint64_t seed = 0;
  int points = 0;
  std::string out;
  bool corrupt_k1 = false;
};
RunConfig make_config(const Options& o);

// `data` receives the CSV/JSON product, `report` the PASS/FAIL lines. Without
// --out both are stdout. The crosscheck JSON dump is written only to a file.
struct Sink {
  std::ostream& data;
  std::ostream& report;
  bool to_file = false;
};

// Each command returns its exit code; library errors propagate.
int cmd_gap(const RunConfig& cfg, Sink& sink);
int cmd_crosscheck(const RunConfig& cfg, Sink& sink);
int cmd_lattice_verify(const RunConfig& cfg, Sink& sink);
int cmd_tiling(const RunConfig& cfg, Sink& sink);
int cmd_orbit(const RunConfig& cfg, Sink& sink);
int cmd_degeneration(const RunConfig& cfg, Sink& sink);

// Dispatch by name; library errors become "error: <Kind>: <message>" on err
// and exit code 2. Unknown command names give 64.
int run_command(const std::string& name, const Options& o, std::ostream& out, std::ostream& err);

}  // namespace qracah::cli
