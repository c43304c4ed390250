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

#ifndef AIRS_PLACEMENT_HPP
#define AIRS_PLACEMENT_HPP

#include "airs/beamform.hpp"
#include "airs/scenario.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace airs
{

/// Closed-form optimum for serving one ground point w1 from altitude H.
///
/// Candidates are q = xi * w1, ordered by increasing qx; the first one is the
/// preferred placement.
struct SinglePlacement
{
    double rho = 0.0;
    std::vector<double> xi;
    std::vector<Placement> candidates;
};

SinglePlacement optimal_placement_single(Point2 w1, double H);

/// xi*(rho): 1/2 for rho <= 2, otherwise the lower root 1/2 - sqrt(1/4 - 1/rho^2).
double deployment_coefficient(double rho);

/// Cascaded path-loss product (H^2 + |q - w1|^2)(H^2 + |q|^2).
double cascaded_loss(Point2 q, Point2 w1, double H);

/// Optimum SNR at w1 with conjugate phases and the closed-form placement.
double single_location_snr(Point2 w1, double H, int N, int M, const RadioParams &rp);

/// L^2 (H^2 + dmax^2)(H^2 + qx^2) for a linear array at (qx, 0).
double placement_objective_ula(double qx, const Scenario &sc);

/// Lx^2 Ly^2 (H^2 + dmax^2)(H^2 + |q|^2) for a planar array at (qx, upa_qy(sc)).
double placement_objective_upa(double qx, const Scenario &sc);

/// Reference-element offset -Ny dy / 2 that centers a planar array on the x-axis; 0 for a ULA.
double upa_qy(const Scenario &sc);

/// Candidate qx values q_min, q_min + step, ... up to q_max. Throws std::invalid_argument
/// unless step > 0 and q_min < q_max <= area center x.
std::vector<double> search_grid(const Scenario &sc);

/// Minimum SNR over the evaluation grid and where it occurs (first index on ties).
struct WorstCase
{
    double snr = 0.0;
    Point2 at;
    std::size_t index = 0;
};

WorstCase worst_snr_on_grid(const Placement &q, const PhaseProfile &phases, const Scenario &sc);
WorstCase worst_snr_on_grid(const Placement &q, std::span<const double> theta_x, std::span<const double> theta_y,
                            const Scenario &sc);
WorstCase worst_snr_on_grid(const Placement &q, const PhaseProfile &phases, std::span<const double> amplitudes,
                            const Scenario &sc);

struct PlacementResult
{
    Placement q_star{0.0, 0.0, 1.0};
    double objective = 0.0;
    WorstCase worst;
    double approx_worst_snr = 0.0;
    FrequencySpan span_x;
    FrequencySpan span_y;
    Plan3d design;
    std::vector<std::pair<double, double>> objective_trace;

    int Lx() const { return design.plan_x.L; }
    int Ly() const { return design.plan_y.L; }
    double worst_snr_linear() const { return worst.snr; }
};

/// Flatten design at a fixed placement with its exact and approximate worst SNR.
PlacementResult design_at(const Placement &q, const Scenario &sc);

/// Grid search of placement_objective_ula; the array must be linear (ny == 1).
PlacementResult search_placement_ula(const Scenario &sc);

/// Grid search of placement_objective_upa along qx with qy = upa_qy(sc).
PlacementResult search_placement_upa(const Scenario &sc);

} // namespace airs

#endif
