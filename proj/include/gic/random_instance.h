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

#ifndef GIC_RANDOM_INSTANCE_H_
#define GIC_RANDOM_INSTANCE_H_

#include <random>

#include "gic/model.h"

namespace gic {

struct Instance {
  ChannelParams params;
  PowerSplit split;
};

// Weak-interference instance with every message power strictly positive:
// a, b in [0.02, 0.95), budgets in [0.2, 8), sigma2 in [0.5, 2), private
// fraction of each budget in [0.05, 0.95).
Instance RandomInstance(std::mt19937_64& rng);

}  // namespace gic

#endif  // GIC_RANDOM_INSTANCE_H_
