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

#include "airs/placement.hpp"
#include "airs/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace airs
{

namespace
{

double sq(double v) { return v * v; }

WorstCase argmin(const std::vector<double> &values, const std::vector<Point2> &pts)
{
    WorstCase w;
    w.snr = values.front();
    w.at = pts.front();
    for (std::size_t i = 1; i < values.size(); ++i)
    {
        if (values[i] < w.snr)
        {
            w.snr = values[i];
            w.at = pts[i];
            w.index = i;
        }
    }
    return w;
}

template <class F> WorstCase worst_over_area(const Scenario &sc, F &&point_snr)
{
    const auto pts = sample_area(sc.area, sc.grid);
    std::vector<double> values(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { values[i] = point_snr(pts[i]); });
    return argmin(values, pts);
}

PlacementResult search(const Scenario &sc, double qy, double (*objective)(double, const Scenario &))
{
    const auto grid = search_grid(sc);
    std::vector<double> cost(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { cost[i] = objective(grid[i], sc); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < cost.size(); ++i)
        if (cost[i] < cost[best])
            best = i;

    auto result = design_at(Placement(grid[best], qy, sc.altitude), sc);
    result.objective = cost[best];
    result.objective_trace.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        result.objective_trace.emplace_back(grid[i], cost[i]);
    return result;
}

} // namespace

double deployment_coefficient(double rho)
{
    if (!(rho >= 0.0))
        throw std::invalid_argument("deployment_coefficient: rho must be >= 0");
    if (rho <= 2.0)
        return 0.5;
    return 0.5 - std::sqrt(0.25 - 1.0 / (rho * rho));
}

SinglePlacement optimal_placement_single(Point2 w1, double H)
{
    if (!(H > 0.0))
        throw std::invalid_argument("optimal_placement_single: H must be > 0");

    SinglePlacement out;
    out.rho = std::hypot(w1.x, w1.y) / H;
    const double lo = deployment_coefficient(out.rho);
    out.xi = {lo};
    if (out.rho > 2.0)
        out.xi.push_back(1.0 - lo);

    std::stable_sort(out.xi.begin(), out.xi.end(), [&](double a, double b) { return a * w1.x < b * w1.x; });
    for (double xi : out.xi)
        out.candidates.emplace_back(xi * w1.x, xi * w1.y, H);
    return out;
}

double cascaded_loss(Point2 q, Point2 w1, double H)
{
    return (sq(H) + sq(q.x - w1.x) + sq(q.y - w1.y)) * (sq(H) + sq(q.x) + sq(q.y));
}

double single_location_snr(Point2 w1, double H, int N, int M, const RadioParams &rp)
{
    const double r2 = sq(w1.x) + sq(w1.y);
    const double rho = std::sqrt(r2) / H;
    const double num = rp.tx_snr() * sq(rp.ref_gain) * M * sq(static_cast<double>(N));
    if (rho <= 2.0)
        return num / sq(sq(H) + 0.25 * r2);
    return num / (sq(H) * r2);
}

double upa_qy(const Scenario &sc)
{
    if (sc.array.is_ula())
        return 0.0;
    return -0.5 * sc.array.ny * sc.radio.dy_meters();
}

double placement_objective_ula(double qx, const Scenario &sc)
{
    const Placement q(qx, 0.0, sc.altitude);
    const auto s = freq_span(q, sc.area, Axis::x);
    const double L = subarray_count(s.span(), sc.array.nx, sc.radio.dx_bar);
    const double dmax = max_dist_to_area(q, sc.area);
    return sq(L) * (sq(sc.altitude) + sq(dmax)) * (sq(sc.altitude) + sq(qx));
}

double placement_objective_upa(double qx, const Scenario &sc)
{
    const double qy = upa_qy(sc);
    const Placement q(qx, qy, sc.altitude);
    const auto s_x = freq_span(q, sc.area, Axis::x);
    const auto s_y = freq_span(q, sc.area, Axis::y);
    const double Lx = subarray_count(s_x.span(), sc.array.nx, sc.radio.dx_bar);
    const double Ly = subarray_count(s_y.span(), sc.array.ny, sc.radio.dy_bar);
    const double dmax = max_dist_to_area(q, sc.area);
    return sq(Lx) * sq(Ly) * (sq(sc.altitude) + sq(dmax)) * (sq(sc.altitude) + sq(qx) + sq(qy));
}

std::vector<double> search_grid(const Scenario &sc)
{
    const double xc = sc.area.center_x();
    const double lo = sc.search.q_min.value_or(-5.0 * sc.altitude);
    const double hi = sc.search.q_max.value_or(xc);
    const double step = sc.search.step;

    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("search step must be > 0, got " + std::to_string(step));
    if (!(lo < hi))
        throw std::invalid_argument("search range is empty: q_min=" + std::to_string(lo) +
                                    " must be < q_max=" + std::to_string(hi));
    if (hi > xc)
        throw std::invalid_argument("search q_max=" + std::to_string(hi) + " exceeds the area center x_c=" +
                                    std::to_string(xc));

    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t k = 0; k < count; ++k)
        grid[k] = lo + static_cast<double>(k) * step;
    return grid;
}

WorstCase worst_snr_on_grid(const Placement &q, const PhaseProfile &phases, const Scenario &sc)
{
    return worst_over_area(sc, [&](Point2 w) { return snr(q, w, phases, sc.array, sc.radio); });
}

WorstCase worst_snr_on_grid(const Placement &q, std::span<const double> theta_x, std::span<const double> theta_y,
                            const Scenario &sc)
{
    return worst_over_area(sc,
                           [&](Point2 w) { return snr_separable(q, w, theta_x, theta_y, sc.array, sc.radio); });
}

WorstCase worst_snr_on_grid(const Placement &q, const PhaseProfile &phases, std::span<const double> amplitudes,
                            const Scenario &sc)
{
    if (phases.nx() != sc.array.nx || phases.ny() != sc.array.ny)
        throw std::invalid_argument("worst_snr_on_grid: profile shape does not match the array");
    return worst_over_area(sc, [&](Point2 w) {
        const auto off = frequency_offsets(q, w);
        const double g =
            weighted_array_factor_gain(phases, amplitudes, off.phi_bar, off.omega_bar, sc.radio.dx_bar, sc.radio.dy_bar);
        return snr_scale(q, w, sc.array, sc.radio) * g;
    });
}

PlacementResult design_at(const Placement &q, const Scenario &sc)
{
    validate(sc.radio);
    validate(sc.array);

    PlacementResult r;
    r.q_star = q;
    r.span_x = freq_span(q, sc.area, Axis::x);
    r.span_y = freq_span(q, sc.area, Axis::y);
    r.design = plan_flatten_3d(q, sc.area, sc.array, sc.radio);
    r.worst = worst_snr_on_grid(q, r.design.theta_x, r.design.theta_y, sc);

    const double dmax = max_dist_to_area(q, sc.area);
    const double H2 = sq(sc.altitude);
    r.approx_worst_snr = r.design.approx_worst_gain * sc.radio.tx_snr() * sq(sc.radio.ref_gain) * sc.array.m /
                         ((H2 + sq(dmax)) * (H2 + sq(q.qx()) + sq(q.qy())));
    return r;
}

PlacementResult search_placement_ula(const Scenario &sc)
{
    if (!sc.array.is_ula())
        throw std::invalid_argument("search_placement_ula: array must have ny == 1");
    return search(sc, 0.0, &placement_objective_ula);
}

PlacementResult search_placement_upa(const Scenario &sc)
{
    return search(sc, upa_qy(sc), &placement_objective_upa);
}

} // namespace airs
