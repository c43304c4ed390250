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

#include "airs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace airs
{

Placement::Placement(double qx, double qy, double altitude) : qx_(qx), qy_(qy), altitude_(altitude)
{
    if (!(altitude > 0.0) || !std::isfinite(altitude))
        throw std::invalid_argument("Placement: altitude H must be > 0, got " + std::to_string(altitude));
    if (!std::isfinite(qx) || !std::isfinite(qy))
        throw std::invalid_argument("Placement: horizontal coordinates must be finite");
}

TargetArea::TargetArea(double center_x, double length, double width)
    : center_x_(center_x), length_(length), width_(width)
{
    if (!(length >= 0.0) || !(width >= 0.0))
        throw std::invalid_argument("TargetArea: length and width must be >= 0");
    if (!std::isfinite(center_x) || !std::isfinite(length) || !std::isfinite(width))
        throw std::invalid_argument("TargetArea: dimensions must be finite");
}

TargetArea TargetArea::segment(double x_lo, double x_hi)
{
    if (x_hi < x_lo)
        throw std::invalid_argument("TargetArea::segment: x_hi < x_lo");
    return TargetArea(0.5 * (x_lo + x_hi), x_hi - x_lo, 0.0);
}

std::array<Point2, 4> TargetArea::corners() const
{
    return {Point2{x_lo(), y_lo()}, Point2{x_hi(), y_lo()}, Point2{x_hi(), y_hi()}, Point2{x_lo(), y_hi()}};
}

double dist_source_to_airs(const Placement &q)
{
    const double h = q.altitude();
    return std::sqrt(h * h + q.qx() * q.qx() + q.qy() * q.qy());
}

double dist_airs_to_point(const Placement &q, Point2 w)
{
    const double h = q.altitude();
    const double dx = w.x - q.qx();
    const double dy = w.y - q.qy();
    return std::sqrt(h * h + dx * dx + dy * dy);
}

SpatialFrequencies rx_spatial_freqs(const Placement &q)
{
    const double d = dist_source_to_airs(q);
    return {q.qx() / d, q.qy() / d};
}

SpatialFrequencies tx_spatial_freqs(const Placement &q, Point2 w)
{
    const double d = dist_airs_to_point(q, w);
    return {(w.x - q.qx()) / d, (w.y - q.qy()) / d};
}

namespace
{

double offset_along(const Placement &q, const SpatialFrequencies &rx, Point2 w, Axis axis)
{
    const auto tx = tx_spatial_freqs(q, w);
    return axis == Axis::x ? tx.phi_bar - rx.phi_bar : tx.omega_bar - rx.omega_bar;
}

} // namespace

FrequencySpan freq_span(const Placement &q, const TargetArea &area, Axis axis)
{
    const auto rx = rx_spatial_freqs(q);
    const auto corners = area.corners();

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    auto visit = [&](Point2 w) {
        const double v = offset_along(q, rx, w, axis);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    };

    for (int e = 0; e < 4; ++e)
    {
        const Point2 a = corners[e];
        const Point2 b = corners[(e + 1) % 4];
        visit(a);

        // projection of the AIRS ground point onto this edge
        const double ex = b.x - a.x;
        const double ey = b.y - a.y;
        const double len2 = ex * ex + ey * ey;
        if (len2 > 0.0)
        {
            double t = ((q.qx() - a.x) * ex + (q.qy() - a.y) * ey) / len2;
            t = std::clamp(t, 0.0, 1.0);
            visit({a.x + t * ex, a.y + t * ey});

            for (int k = 1; k <= kEdgeSamples; ++k)
            {
                const double s = static_cast<double>(k) / (kEdgeSamples + 1);
                visit({a.x + s * ex, a.y + s * ey});
            }
        }
    }
    return {lo, hi};
}

double max_dist_to_area(const Placement &q, const TargetArea &area)
{
    double best = 0.0;
    for (const auto &c : area.corners())
        best = std::max(best, std::hypot(c.x - q.qx(), c.y - q.qy()));
    return best;
}

std::vector<Point2> sample_area(const TargetArea &area, const EvalGrid &grid)
{
    if (grid.nx < 1 || grid.ny < 1)
        throw std::invalid_argument("EvalGrid: point counts must be >= 1");

    const int nx = area.length() > 0.0 ? grid.nx : 1;
    const int ny = area.width() > 0.0 ? grid.ny : 1;

    auto coord = [](double lo, double hi, int n, int i) {
        if (n == 1)
            return 0.5 * (lo + hi);
        return lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    };

    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(nx) * ny);
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            pts.push_back({coord(area.x_lo(), area.x_hi(), nx, ix), coord(area.y_lo(), area.y_hi(), ny, iy)});
    return pts;
}

} // namespace airs
