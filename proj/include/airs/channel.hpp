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

#ifndef AIRS_CHANNEL_HPP
#define AIRS_CHANNEL_HPP

#include "airs/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace airs
{

/// Link-level radio parameters. Powers in watts, gains linear.
///
/// dx_bar and dy_bar are the element spacings in wavelengths; wavelength is only
/// needed to turn the array's physical extent into meters.
struct RadioParams
{
    double tx_power = 0.1;
    double noise_power = 1e-14;
    double ref_gain = 1e-4;
    double dx_bar = 0.1;
    double dy_bar = 0.1;
    double wavelength = 0.124913524;

    double tx_snr() const { return tx_power / noise_power; }
    double dy_meters() const { return dy_bar * wavelength; }
};

/// Throws std::invalid_argument naming the first violated constraint.
void validate(const RadioParams &rp);

/// Reflecting array of nx * ny elements plus the source's antenna count m.
struct ArrayGeometry
{
    int nx = 1;
    int ny = 1;
    int m = 1;

    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
    bool is_ula() const { return ny == 1; }
};

void validate(const ArrayGeometry &geo);

/// Per-element phase shifts, canonically wrapped into [0, 2pi).
///
/// Element (ix, iy), zero based, lives at flat index ix * ny + iy.
class PhaseProfile
{
  public:
    /// Single element with zero phase.
    PhaseProfile() : PhaseProfile(1, 1, {0.0}) {}
    PhaseProfile(int nx, int ny, std::vector<double> theta);

    static PhaseProfile zeros(int nx, int ny);

    /// Outer-sum profile theta(ix, iy) = theta_x[ix] + theta_y[iy].
    static PhaseProfile separable(std::span<const double> theta_x, std::span<const double> theta_y);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    std::size_t size() const { return theta_.size(); }

    double operator()(int ix, int iy) const { return theta_[static_cast<std::size_t>(ix) * ny_ + iy]; }
    std::span<const double> values() const { return theta_; }

    /// Equality modulo 2pi within tol radians.
    bool approx_equal(const PhaseProfile &other, double tol = 1e-9) const;

  private:
    int nx_;
    int ny_;
    std::vector<double> theta_;
};

double path_gain_source_airs(const Placement &q, const RadioParams &rp);
double path_gain_airs_dest(const Placement &q, Point2 w, const RadioParams &rp);

/// |sum_n exp(j(theta_n + 2pi (ix dx_bar dphi + iy dy_bar domega)))|^2 for given
/// spatial-frequency offsets.
double array_factor_gain(const PhaseProfile &phases, double dphi, double domega, double dx_bar, double dy_bar);

/// As array_factor_gain but each element scaled by a real amplitude (same flat layout).
double weighted_array_factor_gain(const PhaseProfile &phases, std::span<const double> amplitudes, double dphi,
                                  double domega, double dx_bar, double dy_bar);

/// Array gain at ground point w for an AIRS at q. Value lies in [0, N^2].
double array_gain(const Placement &q, Point2 w, const PhaseProfile &phases, const ArrayGeometry &geo,
                  const RadioParams &rp);

/// Received SNR (linear) with maximum-ratio transmission at the source folded in as the factor M.
double snr(const Placement &q, Point2 w, const PhaseProfile &phases, const ArrayGeometry &geo, const RadioParams &rp);

/// SNR for the outer-sum profile theta_x[ix] + theta_y[iy], evaluated as the product of two
/// linear-array gains.
double snr_separable(const Placement &q, Point2 w, std::span<const double> theta_x, std::span<const double> theta_y,
                     const ArrayGeometry &geo, const RadioParams &rp);

/// SNR per unit array gain: P/sigma^2 * beta0^2 * M / (d_h^2 d_G^2).
double snr_scale(const Placement &q, Point2 w, const ArrayGeometry &geo, const RadioParams &rp);

/// Transmit-minus-receive spatial-frequency offsets (dPhi, dOmega) seen at w.
SpatialFrequencies frequency_offsets(const Placement &q, Point2 w);

} // namespace airs

#endif
