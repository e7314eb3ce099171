#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"q-Racah gap probabilities, cross-checks and lattice identities"};
  app.require_subcommand(1);
  qracah::cli::Options o;

  auto add_common = [&](CLI::App* sub, bool with_params) {
    if (with_params)
      sub->add_option("--params", o.params, "preset (P0, P1), key=value file, or inline k=v,k=v")
          ->capture_default_str();
    sub->add_option("--out", o.out, "write the CSV/JSON product here");
  };

  auto* gap = app.add_subcommand("gap", "gap table D_s as CSV");
  add_common(gap, true);
  gap->add_option("--method", o.method, "enumerate|fredholm|drhp|connection|painleve|all")->capture_default_str();
  gap->add_option("--backend", o.backend, "rational|quadext|bigfloat (painleve always runs in the field of u)")
      ->capture_default_str();
  gap->add_option("--precision-bits", o.bits, "bigfloat precision")->capture_default_str();

  auto* cross = app.add_subcommand("crosscheck", "five-path agreement and structural identities");
  add_common(cross, true);
  cross->add_option("--backend", o.backend, "rational|quadext|bigfloat")->capture_default_str();
  cross->add_option("--precision-bits", o.bits, "bigfloat precision")->capture_default_str();
  cross->add_flag("--corrupt-k1", o.corrupt_k1, "perturb k1 of A_N to exercise the failure path");

  auto* lat = app.add_subcommand("lattice-verify", "Picard lattice and Weyl word identities");
  add_common(lat, false);

  auto* til = app.add_subcommand("tiling", "slice marginals of weighted hexagon tilings against the ensemble");
  add_common(til, true);

  auto* orb = app.add_subcommand("orbit", "(f, g) orbit with calibration manifest as JSON");
  add_common(orb, true);

  auto* deg = app.add_subcommand("degeneration", "q-Hahn limit of the weight and of the (x, y) -> (f, g) map");
  add_common(deg, true);
  deg->add_option("--seed", o.seed, "random test point seed")->capture_default_str();
  deg->add_option("--points", o.points, "number of random test points")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  return qracah::cli::run_command(app.get_subcommands().front()->get_name(), o, std::cout, std::cerr);
}
