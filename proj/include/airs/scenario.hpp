// SPDX-License-Identifier: Apache-2.0
//
// airs: placement and passive beamforming for aerial reflecting surfaces
// Copyright (C) 2026 The airs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef AIRS_SCENARIO_HPP
#define AIRS_SCENARIO_HPP

#include "airs/channel.hpp"
#include "airs/geometry.hpp"

#include <optional>

namespace airs
{

/// Candidate grid for the 1-D placement search. Unset bounds default to
/// q_min = -5 H and q_max = area center x.
struct SearchRange
{
    std::optional<double> q_min;
    std::optional<double> q_max;
    double step = 1.0;
};

/// Everything needed to design and evaluate one deployment.
struct Scenario
{
    double altitude = 100.0;
    RadioParams radio;
    ArrayGeometry array{256, 1, 64};
    TargetArea area{1000.0, 1000.0, 600.0};
    SearchRange search;
    EvalGrid grid;
};

} // namespace airs

#endif
