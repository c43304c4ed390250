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
#include "airs/units.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace airs
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Accepts the typographic minus sign U+2212 as '-'.
std::string normalize_minus(std::string_view v)
{
    std::string out(v);
    const std::string minus = "\xE2\x88\x92";
    for (auto pos = out.find(minus); pos != std::string::npos; pos = out.find(minus, pos))
        out.replace(pos, minus.size(), "-");
    return out;
}

double to_double(std::string_view key, std::string_view raw)
{
    const auto text = normalize_minus(trim(raw));
    double v = 0.0;
    const char *first = text.data();
    const char *last = first + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
        throw ConfigError(std::string(key), "expected a finite number, got '" + std::string(raw) + "'");
    return v;
}

int to_int(std::string_view key, std::string_view raw)
{
    const auto text = normalize_minus(trim(raw));
    long v = 0;
    const char *first = text.data();
    const char *last = first + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last || v < -2147483647L || v > 2147483647L)
        throw ConfigError(std::string(key), "expected an integer, got '" + std::string(raw) + "'");
    return static_cast<int>(v);
}

void require(bool ok, std::string_view key, const char *constraint)
{
    if (!ok)
        throw ConfigError(std::string(key), std::string("must satisfy ") + constraint);
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ConfigError::ConfigError(std::string key, const std::string &what)
    : std::runtime_error("config key '" + key + "': " + what), key_(std::move(key))
{
}

const std::vector<std::string> &config_keys()
{
    static const std::vector<std::string> keys = {"H",        "tx_power_dbm", "noise_dbm", "beta0_db", "M",
                                                  "Nx",       "Ny",           "dx_bar",    "dy_bar",   "wavelength",
                                                  "center_x", "Dx",           "Dy",        "q_min",    "q_max",
                                                  "step",     "grid_nx",      "grid_ny"};
    return keys;
}

void set_value(ScenarioConfig &c, std::string_view key, std::string_view value)
{
    if (key == "H")
    {
        c.H = to_double(key, value);
        require(c.H > 0.0, key, "H > 0");
    }
    else if (key == "tx_power_dbm")
        c.tx_power_dbm = to_double(key, value);
    else if (key == "noise_dbm")
        c.noise_dbm = to_double(key, value);
    else if (key == "beta0_db")
        c.beta0_db = to_double(key, value);
    else if (key == "M")
    {
        c.M = to_int(key, value);
        require(c.M >= 1, key, "M >= 1");
    }
    else if (key == "Nx")
    {
        c.Nx = to_int(key, value);
        require(c.Nx >= 1, key, "Nx >= 1");
    }
    else if (key == "Ny")
    {
        c.Ny = to_int(key, value);
        require(c.Ny >= 1, key, "Ny >= 1");
    }
    else if (key == "dx_bar")
    {
        c.dx_bar = to_double(key, value);
        require(c.dx_bar > 0.0 && c.dx_bar < 0.5, key, "0 < dx_bar < 0.5");
    }
    else if (key == "dy_bar")
    {
        c.dy_bar = to_double(key, value);
        require(c.dy_bar > 0.0 && c.dy_bar < 0.5, key, "0 < dy_bar < 0.5");
    }
    else if (key == "wavelength")
    {
        c.wavelength = to_double(key, value);
        require(c.wavelength > 0.0, key, "wavelength > 0");
    }
    else if (key == "center_x")
        c.center_x = to_double(key, value);
    else if (key == "Dx")
    {
        c.Dx = to_double(key, value);
        require(c.Dx >= 0.0, key, "Dx >= 0");
    }
    else if (key == "Dy")
    {
        c.Dy = to_double(key, value);
        require(c.Dy >= 0.0, key, "Dy >= 0");
    }
    else if (key == "q_min")
        c.q_min = to_double(key, value);
    else if (key == "q_max")
        c.q_max = to_double(key, value);
    else if (key == "step")
    {
        c.step = to_double(key, value);
        require(c.step > 0.0, key, "step > 0");
    }
    else if (key == "grid_nx")
    {
        c.grid_nx = to_int(key, value);
        require(c.grid_nx >= 1, key, "grid_nx >= 1");
    }
    else if (key == "grid_ny")
    {
        c.grid_ny = to_int(key, value);
        require(c.grid_ny >= 1, key, "grid_ny >= 1");
    }
    else
        throw ConfigError(std::string(key), "unknown key");
}

void validate(const ScenarioConfig &c)
{
    if (c.q_min && c.q_max && !(*c.q_min < *c.q_max))
        throw ConfigError("q_min", "must satisfy q_min < q_max");
}

ScenarioConfig parse_config(std::string_view text)
{
    ScenarioConfig cfg;
    int line_no = 0;
    while (!text.empty())
    {
        ++line_no;
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(std::string(line), "line " + std::to_string(line_no) + " is not of the form key = value");
        const auto key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("", "line " + std::to_string(line_no) + " has an empty key");
        set_value(cfg, key, line.substr(eq + 1));
    }
    validate(cfg);
    return cfg;
}

std::string serialize_config(const ScenarioConfig &c)
{
    std::ostringstream os;
    os << "H = " << fmt(c.H) << '\n';
    os << "tx_power_dbm = " << fmt(c.tx_power_dbm) << '\n';
    os << "noise_dbm = " << fmt(c.noise_dbm) << '\n';
    os << "beta0_db = " << fmt(c.beta0_db) << '\n';
    os << "M = " << c.M << '\n';
    os << "Nx = " << c.Nx << '\n';
    os << "Ny = " << c.Ny << '\n';
    os << "dx_bar = " << fmt(c.dx_bar) << '\n';
    os << "dy_bar = " << fmt(c.dy_bar) << '\n';
    os << "wavelength = " << fmt(c.wavelength) << '\n';
    os << "center_x = " << fmt(c.center_x) << '\n';
    os << "Dx = " << fmt(c.Dx) << '\n';
    os << "Dy = " << fmt(c.Dy) << '\n';
    if (c.q_min)
        os << "q_min = " << fmt(*c.q_min) << '\n';
    if (c.q_max)
        os << "q_max = " << fmt(*c.q_max) << '\n';
    os << "step = " << fmt(c.step) << '\n';
    os << "grid_nx = " << c.grid_nx << '\n';
    os << "grid_ny = " << c.grid_ny << '\n';
    return os.str();
}

Scenario to_scenario(const ScenarioConfig &c)
{
    validate(c);
    Scenario sc;
    sc.altitude = c.H;
    sc.radio.tx_power = dbm_to_watts(c.tx_power_dbm);
    sc.radio.noise_power = dbm_to_watts(c.noise_dbm);
    sc.radio.ref_gain = from_db(c.beta0_db);
    sc.radio.dx_bar = c.dx_bar;
    sc.radio.dy_bar = c.dy_bar;
    sc.radio.wavelength = c.wavelength;
    sc.array = {c.Nx, c.Ny, c.M};
    sc.area = TargetArea(c.center_x, c.Dx, c.Dy);
    sc.search.q_min = c.q_min;
    sc.search.q_max = c.q_max;
    sc.search.step = c.step;
    sc.grid = {c.grid_nx, c.grid_ny};
    return sc;
}

} // namespace airs
