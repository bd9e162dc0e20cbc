# Copyright 2026 The GIC Region Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Rate regions of the two-user weak Gaussian interference channel."""

from gic._gic import (  # noqa: F401
    ChannelParams,
    GicError,
    Polymatroid,
    PowerSplit,
    Receiver,
    all_private_optimum,
    epi_bounds,
    gaussian_entropy,
    gaussian_equiv_power,
    hk_mac,
    hk_vertices,
    layer_rates,
    max_wsr,
    max_wsr_fixed_split,
    overline_mac,
    sum_rate_front,
    trace_boundary,
)

__all__ = [
    "ChannelParams",
    "GicError",
    "Polymatroid",
    "PowerSplit",
    "Receiver",
    "all_private_optimum",
    "epi_bounds",
    "gaussian_entropy",
    "gaussian_equiv_power",
    "hk_mac",
    "hk_vertices",
    "layer_rates",
    "max_wsr",
    "max_wsr_fixed_split",
    "overline_mac",
    "sum_rate_front",
    "trace_boundary",
]
