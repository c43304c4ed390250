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

#include "airs/config.hpp"

#include <doctest.h>

using namespace airs;

TEST_CASE("empty config gives the default scenario")
{
    const auto c = parse_config("");
    CHECK(c == ScenarioConfig{});
    const auto sc = to_scenario(c);
    CHECK(sc.altitude == 100.0);
    CHECK(sc.radio.tx_snr() == doctest::Approx(1e13));
    CHECK(sc.radio.ref_gain == doctest::Approx(1e-4));
    CHECK(sc.array.m == 64);
    CHECK(sc.radio.dx_bar == 0.1);
    CHECK(sc.radio.dy_bar == 0.1);
    CHECK(sc.area.center_x() == 1000.0);
    CHECK(sc.area.length() == 1000.0);
    CHECK(sc.area.width() == 600.0);
    CHECK(sc.grid.nx == 101);
    CHECK(sc.grid.ny == 61);
    CHECK_FALSE(sc.search.q_min.has_value());
}

TEST_CASE("dB values become linear")
{
    const auto c = parse_config("noise_dbm = -110\ntx_power_dbm = 20\n");
    CHECK(to_scenario(c).radio.tx_snr() == doctest::Approx(1e13));
    const auto d = parse_config("noise_dbm = \xE2\x88\x92" "100\n");
    CHECK(d.noise_dbm == -100.0);
}

TEST_CASE("comments, blanks and spacing")
{
    const auto c = parse_config("# scenario\n\n  H=250   # meters\r\nNx = 32\nq_min = -400\n");
    CHECK(c.H == 250.0);
    CHECK(c.Nx == 32);
    REQUIRE(c.q_min.has_value());
    CHECK(*c.q_min == -400.0);
}

TEST_CASE("errors name the key")
{
    auto key_of = [](const char *text) {
        try
        {
            parse_config(text);
        }
        catch (const ConfigError &e)
        {
            return e.key();
        }
        return std::string("<none>");
    };
    CHECK(key_of("H = -5") == "H");
    CHECK(key_of("H = abc") == "H");
    CHECK(key_of("M = 2.5") == "M");
    CHECK(key_of("dx_bar = 0.6") == "dx_bar");
    CHECK(key_of("bogus = 1") == "bogus");
    CHECK(key_of("grid_nx = 0") == "grid_nx");
    CHECK(key_of("step = 0") == "step");
    CHECK(key_of("q_min = 5\nq_max = 1") == "q_min");
    CHECK(key_of("just words") == "just words");
    CHECK_THROWS_WITH_AS(parse_config("H = -5"), doctest::Contains("H > 0"), ConfigError);
}

TEST_CASE("serialize and parse round-trip")
{
    ScenarioConfig c;
    c.H = 123.456789012345;
    c.tx_power_dbm = 1.0 / 3.0;
    c.Ny = 20;
    c.q_min = -0.1;
    c.q_max = 999.75;
    c.wavelength = 0.1249135241666;
    const auto back = parse_config(serialize_config(c));
    CHECK(back == c);
    CHECK(serialize_config(back) == serialize_config(c));
    CHECK(parse_config(serialize_config(ScenarioConfig{})) == ScenarioConfig{});
}

TEST_CASE("overrides go through the same checks")
{
    ScenarioConfig c;
    set_value(c, "Ny", "20");
    CHECK(c.Ny == 20);
    CHECK_THROWS_AS(set_value(c, "Ny", "0"), ConfigError);
    for (const auto &k : config_keys())
    {
        const bool integer = k == "M" || k == "Nx" || k == "Ny" || k == "grid_nx" || k == "grid_ny";
        CHECK_NOTHROW(set_value(c, k, integer ? "3" : "0.25"));
    }
}
