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

#include "gic/random_instance.h"

namespace gic {

Instance RandomInstance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gain(0.02, 0.95);
  std::uniform_real_distribution<double> budget(0.2, 8.0);
  std::uniform_real_distribution<double> noise(0.5, 2.0);
  std::uniform_real_distribution<double> frac(0.05, 0.95);
  Instance inst;
  inst.params.a = gain(rng);
  inst.params.b = gain(rng);
  inst.params.p1 = budget(rng);
  inst.params.p2 = budget(rng);
  inst.params.sigma2 = noise(rng);
  const double f1 = frac(rng);
  const double f2 = frac(rng);
  inst.split = PowerSplit::FromPrivate(inst.params, f1 * inst.params.p1,
                                       f2 * inst.params.p2);
  return inst;
}

}  // namespace gic
