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

#ifndef GIC_LAYERS_H_
#define GIC_LAYERS_H_

#include <optional>
#include <utility>
#include <vector>

#include "gic/model.h"

namespace gic {

enum class LayerKind { kDummyPrivate, kPrivate, kPublic };

struct Layer {
  int owner = 1;            // transmitting user, 1 or 2
  int message = kU1;        // kU1..kV2
  LayerKind kind = LayerKind::kPrivate;
  double power = 0.0;       // transmit power of this layer
  std::optional<double> rate_y1;
  std::optional<double> rate_y2;
  double assigned_rate = 0.0;
};

// Layers seen at one receiver, bottom (decoded last) to top.
struct LayerStack {
  Receiver receiver = Receiver::kY1;
  double delta = 0.0;
  std::vector<Layer> layers;
};

// How the public layers of the two users share the top band.
enum class PublicBand {
  // Alternating layers, spread in proportion to each message's power.
  kInterleaved,
  // All layers of one public message below all layers of the other.
  kStacked,
};

struct LayerOptions {
  PublicBand band = PublicBand::kInterleaved;
  // Weight on user 2. When set, the public message with the larger weight
  // goes lower in the band (ties keep U1 lower); otherwise U1 is lower.
  std::optional<double> mu;
};

// Splits each message into layers of power delta (the last layer of a
// message takes the remainder) and stacks them at both receivers:
// dummy private at the bottom, own private next, public band on top.
// Throws kBadDelta unless 0 < delta <= every nonzero message power.
std::pair<LayerStack, LayerStack> BuildStacks(const ChannelParams& cp,
                                              const PowerSplit& ps,
                                              double delta,
                                              const LayerOptions& opts = {});

// Sums assigned rates per message; dummy totals come from the dummy layers.
ExtendedRateVector AggregateRates(
    const std::pair<LayerStack, LayerStack>& stacks);

// delta -> 0 limit of AggregateRates for the same construction.
ExtendedRateVector ContinuumRates(const ChannelParams& cp, const PowerSplit& ps,
                                  const LayerOptions& opts = {});

struct ConvergenceRow {
  double delta = 0.0;
  double max_abs_error = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  // error[k] / error[k+1] for consecutive deltas; empty entries are skipped
  // when both errors are below 1e-10 (exact telescoping).
  std::vector<double> ratios;
  bool exact = false;      // every error < 1e-10
  bool first_order = false;  // exact, or every ratio >= 1.8
};

// deltas must be positive and strictly decreasing.
ConvergenceTable ConvergenceTest(const ChannelParams& cp, const PowerSplit& ps,
                                 const std::vector<double>& deltas,
                                 const LayerOptions& opts = {});

}  // namespace gic

#endif  // GIC_LAYERS_H_
