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

#ifndef AIRS_TESTS_ORACLES_HPP
#define AIRS_TESTS_ORACLES_HPP

// Reference computations for the tests. They work from raw 3-D geometry and plain
// loops and deliberately share no code with the library beyond the value types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle
{

constexpr double kPi = std::numbers::pi;

struct Vec3
{
    double x, y, z;
};

inline Vec3 unit(Vec3 v)
{
    const double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    return {v.x / n, v.y / n, v.z / n};
}

// Array gain from element positions: the incoming wave travels along u_in (source to
// surface), the outgoing along u_out (surface to w); element (ix, iy) sits at
// (ix dx, iy dy, 0) wavelengths from the reference element.
inline double array_gain(double qx, double qy, double H, double wx, double wy, const std::vector<double> &theta,
                         int nx, int ny, double dx, double dy)
{
    const Vec3 u_in = unit({qx, qy, H});
    const Vec3 u_out = unit({wx - qx, wy - qy, -H});
    std::complex<double> acc = 0.0;
    for (int ix = 0; ix < nx; ++ix)
        for (int iy = 0; iy < ny; ++iy)
        {
            const double px = ix * dx;
            const double py = iy * dy;
            const double path = px * (u_out.x - u_in.x) + py * (u_out.y - u_in.y);
            acc += std::exp(std::complex<double>(0.0, theta[ix * ny + iy] + 2.0 * kPi * path));
        }
    return std::norm(acc);
}

// Received SNR, all inputs linear.
inline double snr(double qx, double qy, double H, double wx, double wy, const std::vector<double> &theta, int nx,
                  int ny, double dx, double dy, double pbar, double beta0, int M)
{
    const double dg2 = H * H + qx * qx + qy * qy;
    const double dh2 = H * H + (wx - qx) * (wx - qx) + (wy - qy) * (wy - qy);
    return pbar * beta0 * beta0 * M * array_gain(qx, qy, H, wx, wy, theta, nx, ny, dx, dy) / (dg2 * dh2);
}

// Spatial-frequency offset along x or y, by dense sampling of the whole rectangle.
struct Span
{
    double lo, hi;
};

inline Span span_by_sampling(double qx, double qy, double H, double xlo, double xhi, double ylo, double yhi,
                             bool along_x, int samples)
{
    const double dg = std::sqrt(H * H + qx * qx + qy * qy);
    const double rx = (along_x ? qx : qy) / dg;
    Span s{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    const int ny = yhi > ylo ? samples : 1;
    const int nx = xhi > xlo ? samples : 1;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
        {
            const double wx = nx == 1 ? xlo : xlo + (xhi - xlo) * i / (nx - 1);
            const double wy = ny == 1 ? ylo : ylo + (yhi - ylo) * j / (ny - 1);
            const double dh = std::sqrt(H * H + (wx - qx) * (wx - qx) + (wy - qy) * (wy - qy));
            const double v = (along_x ? wx - qx : wy - qy) / dh - rx;
            s.lo = std::min(s.lo, v);
            s.hi = std::max(s.hi, v);
        }
    return s;
}

// f2(q) = (H^2 + |q - w|^2)(H^2 + |q|^2)
inline double f2(double qx, double qy, double wx, double wy, double H)
{
    return (H * H + (qx - wx) * (qx - wx) + (qy - wy) * (qy - wy)) * (H * H + qx * qx + qy * qy);
}

struct GridMin
{
    double qx, qy, cell;
};

// Minimizer of f2 on an n x n grid over the bounding box of {0, w}, padded by H.
inline GridMin minimize_f2(double wx, double wy, double H, int n)
{
    const double x0 = std::min(0.0, wx) - H, x1 = std::max(0.0, wx) + H;
    const double y0 = std::min(0.0, wy) - H, y1 = std::max(0.0, wy) + H;
    GridMin best{0.0, 0.0, std::max((x1 - x0), (y1 - y0)) / (n - 1)};
    double fbest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
        {
            const double qx = x0 + (x1 - x0) * i / (n - 1);
            const double qy = y0 + (y1 - y0) * j / (n - 1);
            const double f = f2(qx, qy, wx, wy, H);
            if (f < fbest)
            {
                fbest = f;
                best.qx = qx;
                best.qy = qy;
            }
        }
    return best;
}

// Direct element sum of a 1-D profile at spatial-frequency offset delta.
inline double linear_gain(const std::vector<double> &theta, double d, double delta)
{
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i)
        acc += std::exp(std::complex<double>(0.0, theta[i] + 2.0 * kPi * static_cast<double>(i) * d * delta));
    return std::norm(acc);
}

} // namespace oracle

// Values computed once by an independent script and frozen here.
namespace frozen
{
inline constexpr double kDistQ10 = 100.5087558374891;         // |(10.1, 0, 100)|
inline constexpr double kRxPhi = 0.5883484054145521;          // q = (300, 400, 100)
inline constexpr double kRxOmega = 0.7844645405527362;
inline constexpr double kTxPhiOriginTo1000 = 0.9950371902099892; // q = 0, w = (1000, 0)
inline constexpr double kSegDeltaMin = 0.9284766908852593;    // [250, 750], q = 0
inline constexpr double kSegDeltaMax = 0.9912279006826347;
inline constexpr double kSegSpan = 0.06275120979737536;
inline constexpr double kDmaxRect = 1529.7058540778355;       // q = 0, 1000 x 600 at 1000
inline constexpr double kPathGainG = 3.846153846153846e-10;   // q = (500, 0), H = 100, beta0 = 1e-4
inline constexpr double kPathGainH = 1.0102009995918688e-10;  // q = (10.1, 0), w = (1000, 0)
inline constexpr double kFourTermSum = 14.11797757985566;     // N = 4, d = 0.1, delta = 0.5
inline constexpr double kBeam128Half = 6640.518434557703;     // s^2 at Ns = 128, delta = 1 / (2 Ns d)
inline constexpr double kXiRho10 = 0.010102051443364402;
} // namespace frozen

#endif
