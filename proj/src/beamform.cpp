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

#include "airs/beamform.hpp"
#include "airs/units.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace airs
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kSingularTol = 1e-12;

void check_spacing(double d_bar)
{
    if (!(d_bar > 0.0))
        throw std::invalid_argument("element spacing must be > 0");
}

void fill_layout(FlattenPlan &p)
{
    const int extra = p.N % p.L;
    p.sizes.assign(p.L, p.Ns);
    p.starts.assign(p.L, 0);
    int start = 0;
    for (int l = 0; l < p.L; ++l)
    {
        if (l < extra)
            ++p.sizes[l];
        p.starts[l] = start;
        start += p.sizes[l];
    }
}

// sin(pi n d x) / sin(pi d x)
double dirichlet(int n, double d_bar, double x)
{
    const double den = std::sin(kPi * d_bar * x);
    if (std::abs(den) < kSingularTol)
        return n * std::cos(kPi * n * d_bar * x) / std::cos(kPi * d_bar * x);
    return std::sin(kPi * n * d_bar * x) / den;
}

} // namespace

double FlattenPlan::coverage_lo() const { return steer_freqs.front() - 0.5 / (Ns * spacing); }
double FlattenPlan::coverage_hi() const { return steer_freqs.back() + 0.5 / (Ns * spacing); }

int subarray_count(double span, int N, double d_bar)
{
    if (!(span >= 0.0))
        throw std::invalid_argument("subarray_count: span must be >= 0");
    const double x = span * N * d_bar;
    const int L = static_cast<int>(std::ceil(std::sqrt(x) - 1e-9));
    return std::clamp(L, 1, N);
}

FlattenPlan make_flatten_plan(double delta_min, int L, int N, double d_bar)
{
    if (N < 1)
        throw std::invalid_argument("flatten plan: N must be >= 1");
    if (L < 1 || L > N)
        throw std::invalid_argument("flatten plan: L must lie in [1, N], got " + std::to_string(L));
    check_spacing(d_bar);

    FlattenPlan p;
    p.L = L;
    p.N = N;
    p.Ns = N / L;
    p.delta_min = delta_min;
    p.spacing = d_bar;
    fill_layout(p);

    const double ns = p.Ns;
    const double step = 2.0 * kPi * ns * d_bar * delta_min + kPi + kPi / ns;
    for (int l = 1; l <= L; ++l)
    {
        p.steer_freqs.push_back(delta_min + (2.0 * l - 1.0) / (2.0 * ns * d_bar));
        p.common_phases.push_back(-step * l);
    }
    return p;
}

FlattenPlan steering_plan(double delta, int N, double d_bar)
{
    if (N < 1)
        throw std::invalid_argument("steering plan: N must be >= 1");
    check_spacing(d_bar);

    FlattenPlan p;
    p.L = 1;
    p.N = N;
    p.Ns = N;
    p.delta_min = delta;
    p.spacing = d_bar;
    p.steer_freqs = {delta};
    p.common_phases = {0.0};
    fill_layout(p);
    return p;
}

FlattenPlan plan_flatten_1d(double delta_min, double delta_max, int N, double d_bar)
{
    if (delta_max < delta_min)
        throw std::invalid_argument("plan_flatten_1d: delta_max < delta_min");
    const double span = delta_max - delta_min;
    if (span == 0.0 || N == 1)
        return steering_plan(delta_min, N, d_bar);
    return make_flatten_plan(delta_min, subarray_count(span, N, d_bar), N, d_bar);
}

std::vector<double> phases_from_plan(const FlattenPlan &plan, int N)
{
    if (N != plan.N)
        throw std::invalid_argument("phases_from_plan: plan built for N=" + std::to_string(plan.N) +
                                    ", requested N=" + std::to_string(N));
    std::vector<double> theta;
    theta.reserve(N);
    for (int l = 0; l < plan.L; ++l)
        for (int i = 0; i < plan.sizes[l]; ++i)
            theta.push_back(plan.common_phases[l] - kTwoPi * i * plan.spacing * plan.steer_freqs[l]);
    return theta;
}

double single_beam_pattern(int Ns, double d_bar, double delta)
{
    if (Ns < 1)
        throw std::invalid_argument("single_beam_pattern: Ns must be >= 1");
    return dirichlet(Ns, d_bar, delta);
}

double flattened_pattern_gain(const FlattenPlan &plan, double delta)
{
    const double d = plan.spacing;
    std::complex<double> acc{0.0, 0.0};
    for (int l = 0; l < plan.L; ++l)
    {
        const int n = plan.sizes[l];
        const double x = delta - plan.steer_freqs[l];
        const double arg = plan.common_phases[l] + kTwoPi * plan.starts[l] * d * delta + kPi * (n - 1) * d * x;
        acc += std::polar(dirichlet(n, d, x), arg);
    }
    return std::norm(acc);
}

PhaseProfile conjugate_phases(const Placement &q, Point2 w, const ArrayGeometry &geo, const RadioParams &rp)
{
    validate(geo);
    const auto off = frequency_offsets(q, w);
    std::vector<double> theta;
    theta.reserve(geo.size());
    for (int ix = 0; ix < geo.nx; ++ix)
        for (int iy = 0; iy < geo.ny; ++iy)
            theta.push_back(-kTwoPi * ix * rp.dx_bar * off.phi_bar - kTwoPi * iy * rp.dy_bar * off.omega_bar);
    return PhaseProfile(geo.nx, geo.ny, std::move(theta));
}

Plan3d plan_flatten_3d(const Placement &q, const TargetArea &area, const ArrayGeometry &geo, const RadioParams &rp)
{
    validate(geo);
    const auto sx = freq_span(q, area, Axis::x);
    const auto sy = freq_span(q, area, Axis::y);

    auto px = plan_flatten_1d(sx.delta_min, sx.delta_max, geo.nx, rp.dx_bar);
    auto py = plan_flatten_1d(sy.delta_min, sy.delta_max, geo.ny, rp.dy_bar);
    auto tx = phases_from_plan(px, geo.nx);
    auto ty = phases_from_plan(py, geo.ny);
    auto profile = PhaseProfile::separable(tx, ty);

    double approx = 1.0;
    for (const auto *p : {&px, &py})
    {
        if (p->N > 1)
        {
            const double r = static_cast<double>(p->N) / p->L;
            approx *= 4.0 / (kPi * kPi) * r * r;
        }
    }

    return Plan3d{std::move(px), std::move(py), std::move(tx), std::move(ty), std::move(profile), approx};
}

} // namespace airs
