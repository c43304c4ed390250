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

#ifndef AIRS_BEAMFORM_HPP
#define AIRS_BEAMFORM_HPP

#include "airs/channel.hpp"
#include "airs/geometry.hpp"

#include <vector>

namespace airs
{

/// Partition of a linear array into L sub-arrays, each steered to its own spatial frequency.
///
/// Sub-array l (zero based) starts at element starts[l] and holds sizes[l] elements.
/// When N is not a multiple of L the first N mod L sub-arrays carry one extra element;
/// the steering grid always uses the nominal Ns = floor(N / L).
struct FlattenPlan
{
    int L = 1;
    int Ns = 1;
    int N = 1;
    std::vector<double> steer_freqs;
    std::vector<double> common_phases;
    std::vector<int> sizes;
    std::vector<int> starts;
    double delta_min = 0.0;
    double spacing = 0.1;

    /// Interval [steer_freqs.front() - w, steer_freqs.back() + w] with w = 1 / (2 Ns d).
    double coverage_lo() const;
    double coverage_hi() const;
};

/// max(1, ceil(sqrt(span * N * d_bar))).
int subarray_count(double span, int N, double d_bar);

/// Plan with L sub-arrays whose sub-beams tile upward from delta_min.
FlattenPlan make_flatten_plan(double delta_min, int L, int N, double d_bar);

/// Single beam (L = 1) steered exactly at delta with zero common phase.
FlattenPlan steering_plan(double delta, int N, double d_bar);

/// Plan covering [delta_min, delta_max] with the fewest sub-arrays. A zero span or a
/// single element gives the steering plan at delta_min.
FlattenPlan plan_flatten_1d(double delta_min, double delta_max, int N, double d_bar);

/// Element phases (radians, unwrapped) for the plan. N must match plan.N.
std::vector<double> phases_from_plan(const FlattenPlan &plan, int N);

/// s(delta) = sin(pi Ns d delta) / sin(pi d delta), with the limit taken where the
/// denominator vanishes.
double single_beam_pattern(int Ns, double d_bar, double delta);

/// Array gain of the plan's profile at offset delta, summed per sub-array in closed form.
double flattened_pattern_gain(const FlattenPlan &plan, double delta);

/// Phases that add all elements coherently at w.
PhaseProfile conjugate_phases(const Placement &q, Point2 w, const ArrayGeometry &geo, const RadioParams &rp);

struct Plan3d
{
    FlattenPlan plan_x;
    FlattenPlan plan_y;
    std::vector<double> theta_x;
    std::vector<double> theta_y;
    PhaseProfile phases;

    /// Boundary-gain estimate: product over axes with more than one element of
    /// (4 / pi^2) (N / L)^2. For a UPA this is (16 / pi^4) (Nx / Lx)^2 (Ny / Ly)^2.
    double approx_worst_gain = 0.0;
};

/// Separable design: an independent 1-D flatten plan along each axis, phases summed.
Plan3d plan_flatten_3d(const Placement &q, const TargetArea &area, const ArrayGeometry &geo, const RadioParams &rp);

} // namespace airs

#endif
