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

#include "airs/channel.hpp"
#include "airs/units.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace airs
{

void validate(const RadioParams &rp)
{
    if (!(rp.tx_power > 0.0))
        throw std::invalid_argument("tx_power must be > 0");
    if (!(rp.noise_power > 0.0))
        throw std::invalid_argument("noise_power must be > 0");
    if (!(rp.ref_gain > 0.0))
        throw std::invalid_argument("ref_gain must be > 0");
    if (!(rp.dx_bar > 0.0 && rp.dx_bar < 0.5))
        throw std::invalid_argument("dx_bar must lie in (0, 0.5)");
    if (!(rp.dy_bar > 0.0 && rp.dy_bar < 0.5))
        throw std::invalid_argument("dy_bar must lie in (0, 0.5)");
    if (!(rp.wavelength > 0.0))
        throw std::invalid_argument("wavelength must be > 0");
}

void validate(const ArrayGeometry &geo)
{
    if (geo.nx < 1 || geo.ny < 1)
        throw std::invalid_argument("array dimensions nx, ny must be >= 1");
    if (geo.m < 1)
        throw std::invalid_argument("source antenna count M must be >= 1");
}

PhaseProfile::PhaseProfile(int nx, int ny, std::vector<double> theta) : nx_(nx), ny_(ny), theta_(std::move(theta))
{
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("PhaseProfile: dimensions must be >= 1");
    if (theta_.size() != static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny))
        throw std::invalid_argument("PhaseProfile: expected " + std::to_string(nx * ny) + " phases, got " +
                                    std::to_string(theta_.size()));
    for (auto &t : theta_)
        t = wrap_phase(t);
}

PhaseProfile PhaseProfile::zeros(int nx, int ny)
{
    return PhaseProfile(nx, ny, std::vector<double>(static_cast<std::size_t>(nx) * ny, 0.0));
}

PhaseProfile PhaseProfile::separable(std::span<const double> theta_x, std::span<const double> theta_y)
{
    std::vector<double> theta;
    theta.reserve(theta_x.size() * theta_y.size());
    for (double tx : theta_x)
        for (double ty : theta_y)
            theta.push_back(tx + ty);
    return PhaseProfile(static_cast<int>(theta_x.size()), static_cast<int>(theta_y.size()), std::move(theta));
}

bool PhaseProfile::approx_equal(const PhaseProfile &other, double tol) const
{
    if (nx_ != other.nx_ || ny_ != other.ny_)
        return false;
    for (std::size_t i = 0; i < theta_.size(); ++i)
    {
        const double d = std::abs(std::remainder(theta_[i] - other.theta_[i], kTwoPi));
        if (d > tol)
            return false;
    }
    return true;
}

double path_gain_source_airs(const Placement &q, const RadioParams &rp)
{
    const double d = dist_source_to_airs(q);
    return rp.ref_gain / (d * d);
}

double path_gain_airs_dest(const Placement &q, Point2 w, const RadioParams &rp)
{
    const double d = dist_airs_to_point(q, w);
    return rp.ref_gain / (d * d);
}

SpatialFrequencies frequency_offsets(const Placement &q, Point2 w)
{
    const auto rx = rx_spatial_freqs(q);
    const auto tx = tx_spatial_freqs(q, w);
    return {tx.phi_bar - rx.phi_bar, tx.omega_bar - rx.omega_bar};
}

double array_factor_gain(const PhaseProfile &phases, double dphi, double domega, double dx_bar, double dy_bar)
{
    std::complex<double> acc{0.0, 0.0};
    for (int ix = 0; ix < phases.nx(); ++ix)
    {
        const double base = kTwoPi * ix * dx_bar * dphi;
        for (int iy = 0; iy < phases.ny(); ++iy)
            acc += std::polar(1.0, phases(ix, iy) + base + kTwoPi * iy * dy_bar * domega);
    }
    return std::norm(acc);
}

double weighted_array_factor_gain(const PhaseProfile &phases, std::span<const double> amplitudes, double dphi,
                                  double domega, double dx_bar, double dy_bar)
{
    if (amplitudes.size() != phases.size())
        throw std::invalid_argument("weighted_array_factor_gain: amplitude count does not match phase count");

    std::complex<double> acc{0.0, 0.0};
    for (int ix = 0; ix < phases.nx(); ++ix)
    {
        const double base = kTwoPi * ix * dx_bar * dphi;
        for (int iy = 0; iy < phases.ny(); ++iy)
        {
            const double a = amplitudes[static_cast<std::size_t>(ix) * phases.ny() + iy];
            if (a != 0.0)
                acc += std::polar(a, phases(ix, iy) + base + kTwoPi * iy * dy_bar * domega);
        }
    }
    return std::norm(acc);
}

namespace
{

void check_shape(const PhaseProfile &phases, const ArrayGeometry &geo)
{
    if (phases.nx() != geo.nx || phases.ny() != geo.ny)
        throw std::invalid_argument("phase profile is " + std::to_string(phases.nx()) + "x" +
                                    std::to_string(phases.ny()) + " but the array is " + std::to_string(geo.nx) +
                                    "x" + std::to_string(geo.ny));
}

double linear_gain(std::span<const double> theta, double dbar, double delta)
{
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < theta.size(); ++i)
        acc += std::polar(1.0, theta[i] + kTwoPi * static_cast<double>(i) * dbar * delta);
    return std::norm(acc);
}

} // namespace

double array_gain(const Placement &q, Point2 w, const PhaseProfile &phases, const ArrayGeometry &geo,
                  const RadioParams &rp)
{
    check_shape(phases, geo);
    const auto off = frequency_offsets(q, w);
    return array_factor_gain(phases, off.phi_bar, off.omega_bar, rp.dx_bar, rp.dy_bar);
}

double snr_scale(const Placement &q, Point2 w, const ArrayGeometry &geo, const RadioParams &rp)
{
    const double dh = dist_airs_to_point(q, w);
    const double dg = dist_source_to_airs(q);
    return rp.tx_snr() * rp.ref_gain * rp.ref_gain * geo.m / (dh * dh * dg * dg);
}

double snr(const Placement &q, Point2 w, const PhaseProfile &phases, const ArrayGeometry &geo, const RadioParams &rp)
{
    return snr_scale(q, w, geo, rp) * array_gain(q, w, phases, geo, rp);
}

double snr_separable(const Placement &q, Point2 w, std::span<const double> theta_x, std::span<const double> theta_y,
                     const ArrayGeometry &geo, const RadioParams &rp)
{
    if (theta_x.size() != static_cast<std::size_t>(geo.nx) || theta_y.size() != static_cast<std::size_t>(geo.ny))
        throw std::invalid_argument("snr_separable: factor lengths must equal nx and ny");
    const auto off = frequency_offsets(q, w);
    const double gx = linear_gain(theta_x, rp.dx_bar, off.phi_bar);
    const double gy = linear_gain(theta_y, rp.dy_bar, off.omega_bar);
    return snr_scale(q, w, geo, rp) * gx * gy;
}

} // namespace airs
