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

#ifndef AIRS_BENCH_HPP
#define AIRS_BENCH_HPP

#include "airs/placement.hpp"
#include "airs/scenario.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace airs
{

enum class Scheme
{
    optimal_placement,
    center_placement,
    midpoint_placement,
    flatten_3d,
    beamforming_1d,
    deactivation
};

/// Accepts optimal-placement, center-placement, midpoint-placement, 3d-flatten,
/// 1d-beamforming and deactivation-broadening. Throws std::invalid_argument otherwise.
Scheme parse_scheme(std::string_view name);
std::string scheme_name(Scheme s);

struct BenchmarkOutcome
{
    Placement q{0.0, 0.0, 1.0};
    PhaseProfile phases;
    std::vector<double> amplitudes;
    WorstCase worst;
};

/// Column-wise 1-D design: the x-axis flatten plan is repeated on every row.
BenchmarkOutcome benchmark_1d_on_upa(const Placement &q, const Scenario &sc);

/// Placement the 1-D scheme would pick for itself: the linear-array objective for Nx
/// elements, with the planar reference offset qy.
Placement benchmark_1d_placement(const Scenario &sc);

/// Flatten design with the array above the area center.
PlacementResult benchmark_center_placement(const Scenario &sc);

/// Aperture shrinking: per axis keep a centered block of min(N, floor(1 / (span d))) elements
/// steered at the span center and switch the rest off.
BenchmarkOutcome benchmark_deactivation(const Placement &q, const Scenario &sc);

/// Active element count along one axis for the deactivation benchmark.
int active_elements(double span, int N, double d_bar);

/// Smallest flattened_pattern_gain over [lo, hi] at `samples` evenly spaced points.
double worst_pattern_gain(const FlattenPlan &plan, double lo, double hi, int samples);

struct Row
{
    double x = 0.0;
    std::string label;
    double value = 0.0;
};

/// Rows with a label column (sweep,scheme,value_db) or without (delta,gain_db).
struct Table
{
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

struct ExperimentSpec
{
    std::string figure;
    std::vector<double> sweep;
    std::vector<Scheme> schemes;
    Scenario base;
};

/// Figure ids with presets: 4 5 6 7 8 9a 9b 9c 10 11 12.
const std::vector<std::string> &figure_ids();

/// Preset sweep, schemes and geometry for a figure, with radio parameters, altitude,
/// search step and evaluation grid taken from `base`. Throws std::invalid_argument for
/// an unknown id.
ExperimentSpec figure_preset(std::string_view id, const Scenario &base);

Table run_experiment(const ExperimentSpec &spec);

/// CSV with LF line endings and %.9g numbers.
void write_csv(const Table &t, std::ostream &os);

} // namespace airs

#endif
