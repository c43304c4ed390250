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

#ifndef AIRS_GEOMETRY_HPP
#define AIRS_GEOMETRY_HPP

#include <array>
#include <vector>

namespace airs
{

/// Ground-plane point in meters. The source node sits at the origin.
struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

/// Horizontal position of the reflecting surface's reference element and its altitude.
///
/// The altitude is fixed per scenario and must be strictly positive.
class Placement
{
  public:
    Placement(double qx, double qy, double altitude);

    double qx() const { return qx_; }
    double qy() const { return qy_; }
    double altitude() const { return altitude_; }
    Point2 ground() const { return {qx_, qy_}; }

  private:
    double qx_;
    double qy_;
    double altitude_;
};

/// Rectangular target area centered on the x-axis.
///
/// A zero length and width is a single point; zero width with positive length is a segment.
class TargetArea
{
  public:
    TargetArea(double center_x, double length, double width);

    static TargetArea point(double x) { return TargetArea(x, 0.0, 0.0); }
    static TargetArea segment(double x_lo, double x_hi);

    double center_x() const { return center_x_; }
    double length() const { return length_; }
    double width() const { return width_; }

    double x_lo() const { return center_x_ - 0.5 * length_; }
    double x_hi() const { return center_x_ + 0.5 * length_; }
    double y_lo() const { return -0.5 * width_; }
    double y_hi() const { return 0.5 * width_; }

    bool is_point() const { return length_ == 0.0 && width_ == 0.0; }

    /// Corners ordered (x_lo, y_lo), (x_hi, y_lo), (x_hi, y_hi), (x_lo, y_hi).
    std::array<Point2, 4> corners() const;

  private:
    double center_x_;
    double length_;
    double width_;
};

/// Direction cosines sin(zenith)cos(azimuth) and sin(zenith)sin(azimuth).
struct SpatialFrequencies
{
    double phi_bar = 0.0;
    double omega_bar = 0.0;
};

enum class Axis
{
    x,
    y
};

/// Extrema of the transmit-minus-receive spatial frequency over an area.
struct FrequencySpan
{
    double delta_min = 0.0;
    double delta_max = 0.0;

    double span() const { return delta_max - delta_min; }
};

/// Samples per rectangle edge used by freq_span, in addition to corners and projections.
inline constexpr int kEdgeSamples = 256;

double dist_source_to_airs(const Placement &q);
double dist_airs_to_point(const Placement &q, Point2 w);

SpatialFrequencies rx_spatial_freqs(const Placement &q);
SpatialFrequencies tx_spatial_freqs(const Placement &q, Point2 w);

// Each frequency component is monotone along its own axis, so the extrema over the
// rectangle lie on its boundary. The boundary is evaluated at the corners, at the
// projection of q onto each edge, and at kEdgeSamples interior points per edge.
FrequencySpan freq_span(const Placement &q, const TargetArea &area, Axis axis);

/// Largest horizontal distance from q to any point of the area (attained at a corner).
double max_dist_to_area(const Placement &q, const TargetArea &area);

/// Row-major sample grid over the area: nx points along x, ny points along y.
/// A zero extent along an axis collapses that axis to a single sample.
struct EvalGrid
{
    int nx = 101;
    int ny = 61;
};

std::vector<Point2> sample_area(const TargetArea &area, const EvalGrid &grid);

} // namespace airs

#endif
