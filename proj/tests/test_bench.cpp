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

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace airs;

namespace
{

Scenario rectangle(int nx, int ny)
{
    Scenario sc;
    sc.array = {nx, ny, 64};
    return sc;
}

std::string csv(const Table &t)
{
    std::ostringstream os;
    write_csv(t, os);
    return os.str();
}

} // namespace

TEST_CASE("scheme names round-trip")
{
    for (const char *n : {"optimal-placement", "center-placement", "midpoint-placement", "3d-flatten", "1d-beamforming",
                          "deactivation-broadening"})
        CHECK(scheme_name(parse_scheme(n)) == n);
    CHECK_THROWS_WITH_AS(parse_scheme("greedy"), doctest::Contains("greedy"), std::invalid_argument);
}

TEST_CASE("column-wise design on a single row is the linear design")
{
    const auto sc = rectangle(64, 1);
    const Placement q(100.0, 0.0, 100.0);
    const auto b = benchmark_1d_on_upa(q, sc);
    const auto d = design_at(q, sc);
    CHECK(b.worst.snr == doctest::Approx(d.worst.snr).epsilon(1e-12));
    CHECK(b.phases.approx_equal(d.design.phases));
}

TEST_CASE("column-wise design has nulls across y")
{
    const auto sc = rectangle(10, 20);
    const Placement q(0.0, upa_qy(sc), 100.0);
    const auto b = benchmark_1d_on_upa(q, sc);

    // find wy on the line wx = 1000 where the y offset equals 1 / (Ny dy)
    const double target = 1.0 / (20 * sc.radio.dy_bar);
    auto offset = [&](double wy) { return frequency_offsets(q, {1000.0, wy}).omega_bar; };
    double lo = 0.0, hi = 5000.0;
    for (int i = 0; i < 200; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        (offset(mid) < target ? lo : hi) = mid;
    }
    const Point2 w{1000.0, 0.5 * (lo + hi)};
    const double null_snr = snr(q, w, b.phases, sc.array, sc.radio);
    const double on_axis = snr(q, {1000.0, 0.0}, b.phases, sc.array, sc.radio);
    CHECK(null_snr < on_axis * 1e-20);
}

TEST_CASE("1-D benchmark placement uses the linear objective with the planar offset")
{
    const auto sc = rectangle(20, 20);
    const auto q = benchmark_1d_placement(sc);
    Scenario lin = sc;
    lin.array.ny = 1;
    CHECK(q.qx() == search_placement_ula(lin).q_star.qx());
    CHECK(q.qy() == upa_qy(sc));
}

TEST_CASE("center placement")
{
    const auto sc = rectangle(256, 1);
    const auto c = benchmark_center_placement(sc);
    CHECK(c.q_star.qx() == 1000.0);
    CHECK(c.q_star.qy() == 0.0);
    CHECK(c.worst.snr < search_placement_ula(sc).worst.snr);

    Scenario pt = sc;
    pt.area = TargetArea::point(1000.0);
    const auto cp = benchmark_center_placement(pt);
    CHECK(cp.worst.snr < single_location_snr({1000.0, 0.0}, 100.0, 256, 64, sc.radio));
}

TEST_CASE("active element count")
{
    CHECK(active_elements(0.0, 400, 0.1) == 400);
    CHECK(active_elements(0.02, 400, 0.1) == 400);
    CHECK(active_elements(0.1, 400, 0.1) == 100);
    CHECK(active_elements(1.5, 400, 0.1) == 6);
    CHECK(active_elements(50.0, 400, 0.1) == 1);
}

TEST_CASE("deactivation keeps a centered block")
{
    const auto sc = rectangle(400, 1);
    const Placement q(0.0, 0.0, 100.0);
    const auto b = benchmark_deactivation(q, sc);
    const int active = active_elements(freq_span(q, sc.area, Axis::x).span(), 400, 0.1);
    int count = 0, first = -1;
    for (int i = 0; i < 400; ++i)
        if (b.amplitudes[i] == 1.0)
        {
            ++count;
            if (first < 0)
                first = i;
        }
    CHECK(count == active);
    CHECK(first == (400 - active) / 2);
}

TEST_CASE("deactivation over a point is the steered full array")
{
    Scenario sc = rectangle(64, 8);
    sc.area = TargetArea::point(700.0);
    const Placement q(7.0, upa_qy(sc), 100.0);
    const auto b = benchmark_deactivation(q, sc);
    for (double a : b.amplitudes)
        CHECK(a == 1.0);
    CHECK(b.worst.snr == doctest::Approx(design_at(q, sc).worst.snr).epsilon(1e-10));
}

TEST_CASE("flattening against deactivation at 400 elements")
{
    const auto ula = rectangle(400, 1);
    const auto upa = rectangle(20, 20);
    const auto fu = search_placement_ula(ula);
    const auto fp = search_placement_upa(upa);
    const auto du = benchmark_deactivation(fu.q_star, ula);
    const auto dp = benchmark_deactivation(fp.q_star, upa);
    CHECK(fu.worst.snr > du.worst.snr);
    CHECK(dp.worst.snr > du.worst.snr);
    // on the 20x20 array the shrunken aperture edges out the flattened design
    CHECK(dp.worst.snr > fp.worst.snr);
    CHECK(to_db(dp.worst.snr) - to_db(fp.worst.snr) < 3.0);
}

TEST_CASE("pattern worst over an interval")
{
    const auto p = make_flatten_plan(0.0, 2, 256, 0.1);
    const double w = worst_pattern_gain(p, 0.0, 0.1, 2001);
    CHECK(w == doctest::Approx(flattened_pattern_gain(p, 0.0)).epsilon(1e-12));
    CHECK_THROWS_AS(worst_pattern_gain(p, 0.0, 0.1, 1), std::invalid_argument);
}

TEST_CASE("figure presets")
{
    const Scenario base;
    for (const auto &id : figure_ids())
    {
        const auto spec = figure_preset(id, base);
        CHECK_FALSE(spec.sweep.empty());
        CHECK_FALSE(spec.schemes.empty());
    }
    CHECK_THROWS_WITH_AS(figure_preset("13", base), doctest::Contains("9a"), std::invalid_argument);
}

TEST_CASE("experiment errors")
{
    auto spec = figure_preset("7", Scenario{});
    spec.sweep.clear();
    CHECK_THROWS_WITH_AS(run_experiment(spec), doctest::Contains("empty"), std::invalid_argument);
    spec = figure_preset("7", Scenario{});
    spec.schemes = {Scheme::deactivation};
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
    spec.schemes.clear();
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
    spec = figure_preset("11", Scenario{});
    spec.sweep = {110.0};
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
}

TEST_CASE("deployment coefficient table")
{
    const auto t = run_experiment(figure_preset("4", Scenario{}));
    REQUIRE(t.rows.size() == 402u);
    CHECK(t.columns == std::vector<std::string>{"sweep", "scheme", "value_db"});
    CHECK(t.rows[0].label == "xi-lower");
    CHECK(t.rows[0].value == 0.5);
    CHECK(t.rows.back().x == 10.0);
    CHECK(t.rows.back().label == "xi-upper");
    CHECK(t.rows.back().value == doctest::Approx(0.9899).epsilon(1e-4));
}

TEST_CASE("pattern table")
{
    const auto t = run_experiment(figure_preset("5", Scenario{}));
    CHECK(t.columns == std::vector<std::string>{"delta", "gain_db"});
    const auto text = csv(t);
    CHECK(text.rfind("delta,gain_db\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(t.rows.size() == 2001u);
    CHECK(t.rows.front().x == -0.5);
    CHECK(t.rows.back().x == 0.5);
}

TEST_CASE("single-location figure")
{
    auto spec = figure_preset("7", Scenario{});
    spec.sweep = {225.0, 580.0};
    const auto t = run_experiment(spec);
    REQUIRE(t.rows.size() == 4u);
    CHECK(t.rows[0].label == "optimal-placement");
    CHECK(t.rows[0].value == doctest::Approx(15.1055).epsilon(1e-4));
    CHECK(t.rows[3].label == "midpoint-placement");
    CHECK(t.rows[3].value == doctest::Approx(15.0309).epsilon(1e-4));
}

TEST_CASE("csv formatting")
{
    Table t{{"sweep", "scheme", "value_db"}, {{1.0 / 3.0, "a", -1e-7}, {100.0, "b", -INFINITY}}};
    CHECK(csv(t) == "sweep,scheme,value_db\n0.333333333,a,-1e-07\n100,b,-inf\n");
}

TEST_CASE("experiments are deterministic")
{
    auto spec = figure_preset("12", Scenario{});
    spec.sweep = {20.0};
    CHECK(csv(run_experiment(spec)) == csv(run_experiment(spec)));
}
