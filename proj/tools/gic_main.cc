// Copyright 2026 The GIC Region Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: `gic region|saturation|layers|validate`.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gic/commands.h"
#include "gic/model.h"
#include "gic/scenario.h"

namespace {

struct Flags {
  std::string config;
  std::string out;
  bool plot = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string mu_grid;
  bool inject_fault = false;
};

gic::Scenario BuildScenario(const Flags& f, CLI::App& app) {
  gic::Scenario sc =
      f.config.empty() ? gic::Scenario{} : gic::LoadScenario(f.config);
  if (!f.out.empty()) sc.out_dir = f.out;
  if (f.plot) sc.plot = true;
  if (app.count("--seed") > 0) sc.seed = f.seed;
  if (!f.mu_grid.empty()) sc.mu_grid = gic::ParseMuList(f.mu_grid);
  if (f.inject_fault) sc.inject_fault = true;
  return sc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Achievable-rate regions of the two-user weak Gaussian "
               "interference channel"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--config", flags.config, "Scenario JSON file");
  app.add_option("--out", flags.out, "Output directory");
  app.add_flag("--plot", flags.plot, "Also write SVG plots");
  app.add_option("--seed", flags.seed, "Seed for the validation suite");
  app.add_option("--mu-grid", flags.mu_grid,
                 "Comma-separated, increasing user-2 weights");
  app.add_flag("--inject-fault", flags.inject_fault)
      ->group("");  // test hook, hidden from --help

  CLI::App* region = app.add_subcommand(
      "region", "Trace the rate-region boundary over the weight grid");
  CLI::App* saturation = app.add_subcommand(
      "saturation", "Saturation levels of the private powers per weight");
  CLI::App* layers = app.add_subcommand(
      "layers", "Layer-construction error against the layer width");
  CLI::App* validate = app.add_subcommand(
      "validate", "Run the property suite over seeded random instances");
  for (CLI::App* sub : {region, saturation, layers, validate}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gic::kExitConfigError;
  }

  try {
    const gic::Scenario sc = BuildScenario(flags, app);
    if (region->parsed()) return gic::RunRegion(sc, std::cout);
    if (saturation->parsed()) return gic::RunSaturation(sc, std::cout);
    if (layers->parsed()) return gic::RunLayers(sc, std::cout);
    return gic::RunValidate(sc, std::cout);
  } catch (const gic::GicError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gic::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gic::kExitConfigError;
  }
}
