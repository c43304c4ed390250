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

#include "airs/bench.hpp"
#include "airs/units.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace airs
{

namespace
{

constexpr double kPi = std::numbers::pi;

struct SchemeName
{
    Scheme scheme;
    const char *name;
};

constexpr SchemeName kSchemes[] = {
    {Scheme::optimal_placement, "optimal-placement"}, {Scheme::center_placement, "center-placement"},
    {Scheme::midpoint_placement, "midpoint-placement"}, {Scheme::flatten_3d, "3d-flatten"},
    {Scheme::beamforming_1d, "1d-beamforming"},        {Scheme::deactivation, "deactivation-broadening"},
};

double db(double v) { return to_db(v); }

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return v;
}

std::vector<double> arange(double lo, double hi, double step)
{
    std::vector<double> v;
    const auto n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int k = 0; k <= n; ++k)
        v.push_back(lo + k * step);
    return v;
}

int as_count(double v, const char *what)
{
    const double r = std::round(v);
    if (!(r >= 1.0) || std::abs(v - r) > 1e-9)
        throw std::invalid_argument(std::string(what) + " sweep values must be positive integers");
    return static_cast<int>(r);
}

void require_schemes(const ExperimentSpec &spec, std::initializer_list<Scheme> allowed)
{
    for (Scheme s : spec.schemes)
        if (std::find(allowed.begin(), allowed.end(), s) == allowed.end())
            throw std::invalid_argument("scheme " + scheme_name(s) + " is not available for figure " + spec.figure);
}

bool wants(const ExperimentSpec &spec, Scheme s)
{
    return std::find(spec.schemes.begin(), spec.schemes.end(), s) != spec.schemes.end();
}

struct Segment
{
    double lo;
    double hi;
    const char *tag;
};

constexpr Segment kSegments[] = {{250.0, 750.0, "250-750"}, {500.0, 1500.0, "500-1500"}, {155.0, 325.0, "155-325"}};

Scenario segment_scenario(const Scenario &base, const Segment &s, int N)
{
    Scenario sc = base;
    sc.area = TargetArea::segment(s.lo, s.hi);
    sc.array = {N, 1, base.array.m};
    return sc;
}

Scenario rectangle_scenario(const Scenario &base, int nx, int ny)
{
    Scenario sc = base;
    sc.area = TargetArea(1000.0, 1000.0, 600.0);
    sc.array = {nx, ny, base.array.m};
    return sc;
}

Scenario with_power_dbm(const Scenario &sc, double dbm)
{
    Scenario out = sc;
    out.radio.tx_power = dbm_to_watts(dbm);
    return out;
}

// figure 4: deployment coefficient branches versus rho
Table fig_xi(const ExperimentSpec &spec)
{
    require_schemes(spec, {Scheme::optimal_placement});
    Table t{{"sweep", "scheme", "value_db"}, {}};
    for (double rho : spec.sweep)
    {
        const double lo = deployment_coefficient(rho);
        t.rows.push_back({rho, "xi-lower", lo});
        t.rows.push_back({rho, "xi-upper", 1.0 - lo});
    }
    return t;
}

// figure 5: N = 512 split into L = 4, centered on zero offset
Table fig_pattern(const ExperimentSpec &spec)
{
    require_schemes(spec, {Scheme::flatten_3d});
    const int N = 512;
    const int L = 4;
    const double d = spec.base.radio.dx_bar;
    const int Ns = N / L;
    const auto plan = make_flatten_plan(-L / (2.0 * Ns * d), L, N, d);
    Table t{{"delta", "gain_db"}, {}};
    for (double delta : spec.sweep)
        t.rows.push_back({delta, "", db(flattened_pattern_gain(plan, delta))});
    return t;
}

// figure 6: worst-case gain over a fixed span versus N
Table fig_growth(const ExperimentSpec &spec)
{
    require_schemes(spec, {Scheme::flatten_3d});
    const double span = 0.1;
    const double d = spec.base.radio.dx_bar;
    Table t{{"sweep", "scheme", "value_db"}, {}};
    for (double v : spec.sweep)
    {
        const int N = as_count(v, "N");
        const auto plan = plan_flatten_1d(0.0, span, N, d);
        const double r = static_cast<double>(N) / plan.L;
        t.rows.push_back({v, "worst-gain", db(worst_pattern_gain(plan, 0.0, span, 20001))});
        t.rows.push_back({v, "approx", db(4.0 / (kPi * kPi) * r * r)});
        t.rows.push_back({v, "small-n", db(4.0 / (kPi * kPi) * N * N)});
        t.rows.push_back({v, "large-n", db(4.0 / (kPi * kPi) * N / (span * d))});
    }
    return t;
}

// figure 7: single destination at (1000, 0)
Table fig_single(const ExperimentSpec &spec)
{
    require_schemes(spec, {Scheme::optimal_placement, Scheme::midpoint_placement});
    const Point2 w1{1000.0, 0.0};
    const double H = spec.base.altitude;
    const auto opt = optimal_placement_single(w1, H).candidates.front();
    const Placement mid(0.5 * w1.x, 0.5 * w1.y, H);

    Table t{{"sweep", "scheme", "value_db"}, {}};
    for (double v : spec.sweep)
    {
        const int N = as_count(v, "N");
        const ArrayGeometry geo{N, 1, spec.base.array.m};
        for (Scheme s : spec.schemes)
        {
            const Placement &q = s == Scheme::optimal_placement ? opt : mid;
            const auto phases = conjugate_phases(q, w1, geo, spec.base.radio);
            t.rows.push_back({v, scheme_name(s), db(snr(q, w1, phases, geo, spec.base.radio))});
        }
    }
    return t;
}

// figure 8: sub-array count and worst-case cascaded path loss along qx
Table fig_staircase(const ExperimentSpec &spec)
{
    require_schemes(spec, {Scheme::optimal_placement});
    Table t{{"sweep", "scheme", "value_db"}, {}};
    for (const auto &seg : kSegments)
    {
        const auto sc = segment_scenario(spec.base, seg, 256);
        const double H2 = sc.altitude * sc.altitude;
        for (double qx : spec.sweep)
        {
            if (qx > sc.area.center_x())
                continue;
            const Placement q(qx, 0.0, sc.altitude);
            const auto s = freq_span(q, sc.area, Axis::x);
            const double dmax = max_dist_to_area(q, sc.area);
            const double loss = sc.radio.ref_gain * sc.radio.ref_gain / ((H2 + dmax * dmax) * (H2 + qx * qx));
            t.rows.push_back({qx, std::string("subarrays:") + seg.tag,
                              static_cast<double>(subarray_count(s.span(), 256, sc.radio.dx_bar))});
            t.rows.push_back({qx, std::string("path-loss:") + seg.tag, db(loss)});
        }
    }
    return t;
}

// figures 9a-9c: worst SNR along qx for one segment
Table fig_regime(const ExperimentSpec &spec, const Segment &seg)
{
    require_schemes(spec, {Scheme::optimal_placement});
    const auto sc = segment_scenario(spec.base, seg, 256);
    Table t{{"sweep", "scheme", "value_db"}, {}};
    for (double qx : spec.sweep)
    {
        const auto r = design_at(Placement(qx, 0.0, sc.altitude), sc);
        t.rows.push_back({qx, "worst-snr", db(r.worst.snr)});
        t.rows.push_back({qx, "worst-snr-approx", db(r.approx_worst_snr)});
    }
    const auto best = search_placement_ula(sc);
    t.rows.push_back({best.q_star.qx(), "optimum", db(best.worst.snr)});
    return t;
}

// figure 10: linear array over the rectangle versus transmit power
Table fig_ula_power(const ExperimentSpec &spec)
{
    require_schemes(spec, {Scheme::optimal_placement, Scheme::center_placement});
    Table t{{"sweep", "scheme", "value_db"}, {}};
    for (double p : spec.sweep)
    {
        const auto sc = with_power_dbm(rectangle_scenario(spec.base, 256, 1), p);
        for (Scheme s : spec.schemes)
        {
            const auto r = s == Scheme::optimal_placement ? search_placement_ula(sc) : benchmark_center_placement(sc);
            t.rows.push_back({p, scheme_name(s), db(r.worst.snr)});
        }
    }
    return t;
}

// figure 11: planar array with Ny = 20 versus N
Table fig_upa_elements(const ExperimentSpec &spec)
{
    require_schemes(spec, {Scheme::flatten_3d, Scheme::beamforming_1d});
    const int ny = 20;
    Table t{{"sweep", "scheme", "value_db"}, {}};
    for (double v : spec.sweep)
    {
        const int N = as_count(v, "N");
        if (N % ny != 0)
            throw std::invalid_argument("figure 11 sweep values must be multiples of Ny=20");
        const auto sc = rectangle_scenario(spec.base, N / ny, ny);
        for (Scheme s : spec.schemes)
        {
            double worst = 0.0;
            if (s == Scheme::flatten_3d)
                worst = search_placement_upa(sc).worst.snr;
            else
                worst = benchmark_1d_on_upa(benchmark_1d_placement(sc), sc).worst.snr;
            t.rows.push_back({v, scheme_name(s), db(worst)});
        }
    }
    return t;
}

// figure 12: N = 400 as 400x1 and 20x20 versus transmit power
Table fig_ula_upa(const ExperimentSpec &spec)
{
    require_schemes(spec, {Scheme::optimal_placement, Scheme::center_placement, Scheme::deactivation});
    Table t{{"sweep", "scheme", "value_db"}, {}};
    struct Shape
    {
        int nx, ny;
        const char *tag;
    };
    constexpr Shape shapes[] = {{400, 1, "ula"}, {20, 20, "upa"}};
    for (double p : spec.sweep)
    {
        for (const auto &shape : shapes)
        {
            const auto sc = with_power_dbm(rectangle_scenario(spec.base, shape.nx, shape.ny), p);
            const bool ula = shape.ny == 1;
            const bool need_opt = wants(spec, Scheme::optimal_placement) || wants(spec, Scheme::deactivation);
            PlacementResult opt;
            if (need_opt)
                opt = ula ? search_placement_ula(sc) : search_placement_upa(sc);
            for (Scheme s : spec.schemes)
            {
                double worst = 0.0;
                if (s == Scheme::optimal_placement)
                    worst = opt.worst.snr;
                else if (s == Scheme::center_placement)
                    worst = benchmark_center_placement(sc).worst.snr;
                else
                    worst = benchmark_deactivation(opt.q_star, sc).worst.snr;
                t.rows.push_back({p, scheme_name(s) + "/" + shape.tag, db(worst)});
            }
        }
    }
    return t;
}

} // namespace

Scheme parse_scheme(std::string_view name)
{
    for (const auto &s : kSchemes)
        if (name == s.name)
            return s.scheme;
    std::string valid;
    for (const auto &s : kSchemes)
        valid += std::string(valid.empty() ? "" : ", ") + s.name;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (valid: " + valid + ")");
}

std::string scheme_name(Scheme s)
{
    for (const auto &e : kSchemes)
        if (e.scheme == s)
            return e.name;
    return "unknown";
}

BenchmarkOutcome benchmark_1d_on_upa(const Placement &q, const Scenario &sc)
{
    validate(sc.array);
    const auto s = freq_span(q, sc.area, Axis::x);
    const auto plan = plan_flatten_1d(s.delta_min, s.delta_max, sc.array.nx, sc.radio.dx_bar);
    const auto tx = phases_from_plan(plan, sc.array.nx);
    const std::vector<double> ty(sc.array.ny, 0.0);

    BenchmarkOutcome out;
    out.q = q;
    out.phases = PhaseProfile::separable(tx, ty);
    out.amplitudes.assign(sc.array.size(), 1.0);
    out.worst = worst_snr_on_grid(q, tx, ty, sc);
    return out;
}

Placement benchmark_1d_placement(const Scenario &sc)
{
    Scenario lin = sc;
    lin.array = {sc.array.nx, 1, sc.array.m};
    const auto r = search_placement_ula(lin);
    return Placement(r.q_star.qx(), upa_qy(sc), sc.altitude);
}

PlacementResult benchmark_center_placement(const Scenario &sc)
{
    return design_at(Placement(sc.area.center_x(), upa_qy(sc), sc.altitude), sc);
}

int active_elements(double span, int N, double d_bar)
{
    if (N < 1)
        throw std::invalid_argument("active_elements: N must be >= 1");
    if (!(span > 0.0))
        return N;
    const double cap = std::floor(1.0 / (span * d_bar) + 1e-9);
    return static_cast<int>(std::clamp(cap, 1.0, static_cast<double>(N)));
}

BenchmarkOutcome benchmark_deactivation(const Placement &q, const Scenario &sc)
{
    validate(sc.array);
    const auto s_x = freq_span(q, sc.area, Axis::x);
    const auto s_y = freq_span(q, sc.area, Axis::y);

    auto axis = [](const FrequencySpan &s, int N, double d, std::vector<double> &theta, std::vector<double> &amp) {
        const int active = active_elements(s.span(), N, d);
        const int start = (N - active) / 2;
        const double center = 0.5 * (s.delta_min + s.delta_max);
        theta.resize(N);
        amp.assign(N, 0.0);
        for (int i = 0; i < N; ++i)
            theta[i] = -kTwoPi * i * d * center;
        std::fill(amp.begin() + start, amp.begin() + start + active, 1.0);
    };

    std::vector<double> tx, ty, ax, ay;
    axis(s_x, sc.array.nx, sc.radio.dx_bar, tx, ax);
    axis(s_y, sc.array.ny, sc.radio.dy_bar, ty, ay);

    BenchmarkOutcome out;
    out.q = q;
    out.phases = PhaseProfile::separable(tx, ty);
    out.amplitudes.resize(sc.array.size());
    for (int ix = 0; ix < sc.array.nx; ++ix)
        for (int iy = 0; iy < sc.array.ny; ++iy)
            out.amplitudes[static_cast<std::size_t>(ix) * sc.array.ny + iy] = ax[ix] * ay[iy];
    out.worst = worst_snr_on_grid(q, out.phases, out.amplitudes, sc);
    return out;
}

double worst_pattern_gain(const FlattenPlan &plan, double lo, double hi, int samples)
{
    if (samples < 2 || !(hi >= lo))
        throw std::invalid_argument("worst_pattern_gain: need hi >= lo and at least 2 samples");
    double worst = flattened_pattern_gain(plan, lo);
    for (int k = 1; k < samples; ++k)
        worst = std::min(worst, flattened_pattern_gain(plan, lo + (hi - lo) * k / (samples - 1)));
    return worst;
}

const std::vector<std::string> &figure_ids()
{
    static const std::vector<std::string> ids = {"4", "5", "6", "7", "8", "9a", "9b", "9c", "10", "11", "12"};
    return ids;
}

ExperimentSpec figure_preset(std::string_view id, const Scenario &base)
{
    ExperimentSpec spec;
    spec.figure = std::string(id);
    spec.base = base;
    const double xc_lo = -5.0 * base.altitude;

    auto qx_sweep = [&](double xc) {
        Scenario sc = base;
        sc.area = TargetArea(xc, 0.0, 0.0);
        return search_grid(sc);
    };

    if (id == "4")
    {
        spec.sweep = linspace(0.0, 10.0, 201);
        spec.schemes = {Scheme::optimal_placement};
    }
    else if (id == "5")
    {
        spec.sweep = linspace(-0.5, 0.5, 2001);
        spec.schemes = {Scheme::flatten_3d};
    }
    else if (id == "6")
    {
        for (int k = 0; k <= 12; ++k)
            spec.sweep.push_back(std::round(std::pow(10.0, 1.0 + k / 4.0)));
        spec.schemes = {Scheme::flatten_3d};
    }
    else if (id == "7")
    {
        spec.sweep = arange(10.0, 1000.0, 10.0);
        spec.schemes = {Scheme::optimal_placement, Scheme::midpoint_placement};
    }
    else if (id == "8")
    {
        spec.sweep = arange(xc_lo, 1000.0, base.search.step);
        spec.schemes = {Scheme::optimal_placement};
    }
    else if (id == "9a" || id == "9b" || id == "9c")
    {
        const auto &seg = kSegments[id[1] - 'a'];
        spec.sweep = qx_sweep(0.5 * (seg.lo + seg.hi));
        spec.schemes = {Scheme::optimal_placement};
    }
    else if (id == "10")
    {
        spec.sweep = arange(0.0, 40.0, 5.0);
        spec.schemes = {Scheme::optimal_placement, Scheme::center_placement};
    }
    else if (id == "11")
    {
        spec.sweep = arange(100.0, 1000.0, 100.0);
        spec.schemes = {Scheme::flatten_3d, Scheme::beamforming_1d};
    }
    else if (id == "12")
    {
        spec.sweep = arange(0.0, 40.0, 5.0);
        spec.schemes = {Scheme::optimal_placement, Scheme::center_placement, Scheme::deactivation};
    }
    else
    {
        std::string valid;
        for (const auto &f : figure_ids())
            valid += (valid.empty() ? "" : " ") + f;
        throw std::invalid_argument("unknown figure id '" + std::string(id) + "' (valid: " + valid + ")");
    }
    return spec;
}

Table run_experiment(const ExperimentSpec &spec)
{
    if (spec.sweep.empty())
        throw std::invalid_argument("experiment sweep is empty");
    if (spec.schemes.empty())
        throw std::invalid_argument("experiment needs at least one scheme");

    const auto &f = spec.figure;
    if (f == "4")
        return fig_xi(spec);
    if (f == "5")
        return fig_pattern(spec);
    if (f == "6")
        return fig_growth(spec);
    if (f == "7")
        return fig_single(spec);
    if (f == "8")
        return fig_staircase(spec);
    if (f == "9a" || f == "9b" || f == "9c")
        return fig_regime(spec, kSegments[f[1] - 'a']);
    if (f == "10")
        return fig_ula_power(spec);
    if (f == "11")
        return fig_upa_elements(spec);
    if (f == "12")
        return fig_ula_upa(spec);
    throw std::invalid_argument("unknown figure id '" + f + "'");
}

void write_csv(const Table &t, std::ostream &os)
{
    const bool labeled = t.columns.size() == 3;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << '\n';
    char buf[64];
    for (const auto &r : t.rows)
    {
        std::snprintf(buf, sizeof buf, "%.9g", r.x);
        os << buf << ',';
        if (labeled)
            os << r.label << ',';
        std::snprintf(buf, sizeof buf, "%.9g", r.value);
        os << buf << '\n';
    }
}

} // namespace airs
