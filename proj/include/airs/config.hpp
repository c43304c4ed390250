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

#ifndef AIRS_CONFIG_HPP
#define AIRS_CONFIG_HPP

#include "airs/scenario.hpp"
#include "airs/units.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace airs
{

/// User-facing scenario description. Powers and gains are in dB/dBm here and become
/// linear in to_scenario.
struct ScenarioConfig
{
    double H = 100.0;
    double tx_power_dbm = 20.0;
    double noise_dbm = -110.0;
    double beta0_db = -40.0;
    int M = 64;
    int Nx = 256;
    int Ny = 1;
    double dx_bar = 0.1;
    double dy_bar = 0.1;
    double wavelength = kSpeedOfLight / 2.4e9;
    double center_x = 1000.0;
    double Dx = 1000.0;
    double Dy = 600.0;
    std::optional<double> q_min;
    std::optional<double> q_max;
    double step = 1.0;
    int grid_nx = 101;
    int grid_ny = 61;

    bool operator==(const ScenarioConfig &) const = default;
};

/// Parse or validation failure tied to one configuration key.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string key, const std::string &what);
    const std::string &key() const { return key_; }

  private:
    std::string key_;
};

/// Names accepted by parse_config and set_value.
const std::vector<std::string> &config_keys();

/// Sets one key from its text value and re-validates that key.
void set_value(ScenarioConfig &cfg, std::string_view key, std::string_view value);

/// Reads "key = value" lines. Blank lines and text after '#' are ignored; unset keys keep
/// their defaults.
ScenarioConfig parse_config(std::string_view text);

/// Writes every key with enough digits to parse back to the identical config.
std::string serialize_config(const ScenarioConfig &cfg);

/// Checks cross-key constraints (q_min < q_max).
void validate(const ScenarioConfig &cfg);

Scenario to_scenario(const ScenarioConfig &cfg);

} // namespace airs

#endif
