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
#include "airs/bench.hpp"
#include "airs/config.hpp"
#include "airs/placement.hpp"
#include "airs/units.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace airs;

namespace
{

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::vector<double> parse_list(const std::string &text, const char *what)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        try
        {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        }
        catch (const std::exception &)
        {
            throw std::invalid_argument(std::string(what) + ": '" + item + "' is not a number");
        }
    }
    return out;
}

ScenarioConfig load_config(const std::string &path, const std::vector<std::string> &overrides)
{
    ScenarioConfig cfg;
    if (!path.empty())
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open config file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        cfg = parse_config(ss.str());
    }
    for (const auto &kv : overrides)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
        set_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    validate(cfg);
    return cfg;
}

void write_fields(std::ostream &os, const std::vector<std::pair<std::string, std::string>> &fields)
{
    os << "field,value\n";
    for (const auto &[k, v] : fields)
        os << k << ',' << v << '\n';
}

void write_result(std::ostream &os, const PlacementResult &r)
{
    write_fields(os, {{"qx", num(r.q_star.qx())},
                      {"qy", num(r.q_star.qy())},
                      {"objective", num(r.objective)},
                      {"Lx", std::to_string(r.Lx())},
                      {"Ly", std::to_string(r.Ly())},
                      {"span_x", num(r.span_x.span())},
                      {"span_y", num(r.span_y.span())},
                      {"worst_snr_db", num(to_db(r.worst.snr))},
                      {"worst_x", num(r.worst.at.x)},
                      {"worst_y", num(r.worst.at.y)},
                      {"approx_worst_snr_db", num(to_db(r.approx_worst_snr))}});
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Placement and passive beam design for aerial reflecting surfaces"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    app.add_option("--config", config_path, "Scenario file with key = value lines");
    app.add_option("--set", overrides, "Override one scenario key (key=value), repeatable");
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    auto *single = app.add_subcommand("single-loc", "Closed-form placement for one destination");
    single->fallthrough();
    std::string w1_text = "1000,0";
    int single_n = 256;
    single->add_option("--w1", w1_text, "Destination x,y in meters")->capture_default_str();
    single->add_option("--N", single_n, "Number of reflecting elements")->capture_default_str();

    auto *flat = app.add_subcommand("flatten-1d", "Sub-array plan covering a spatial-frequency interval");
    flat->fallthrough();
    double flat_lo = 0.0;
    double flat_hi = 0.1;
    int flat_n = 256;
    flat->add_option("--delta-min", flat_lo)->capture_default_str();
    flat->add_option("--delta-max", flat_hi)->capture_default_str();
    flat->add_option("--N", flat_n)->capture_default_str();

    auto *ula = app.add_subcommand("place-ula", "Optimize placement of a linear array over the area");
    ula->fallthrough();
    int ula_n = 0;
    ula->add_option("--N", ula_n, "Element count (default: Nx from the scenario)");

    auto *upa = app.add_subcommand("place-upa", "Optimize placement of a planar array over the area");
    upa->fallthrough();
    int upa_nx = 0;
    int upa_ny = 0;
    upa->add_option("--nx", upa_nx, "Elements along x (default: Nx from the scenario)");
    upa->add_option("--ny", upa_ny, "Elements along y (default: Ny from the scenario)");

    auto *fig = app.add_subcommand("figure", "Reproduce one figure as CSV");
    fig->fallthrough();
    std::string fig_id;
    std::string fig_sweep;
    std::string fig_schemes;
    fig->add_option("id", fig_id, "Figure id")->required();
    fig->add_option("--sweep", fig_sweep, "Comma-separated sweep values replacing the preset");
    fig->add_option("--schemes", fig_schemes, "Comma-separated schemes replacing the preset");

    auto *dump = app.add_subcommand("pattern-dump", "Flattened beam pattern as delta,gain_db");
    dump->fallthrough();
    int dump_n = 512;
    int dump_l = 4;
    double dump_min = -0.15625;
    double dump_lo = -0.5;
    double dump_hi = 0.5;
    int dump_points = 2001;
    dump->add_option("--N", dump_n)->capture_default_str();
    dump->add_option("--L", dump_l)->capture_default_str();
    dump->add_option("--delta-min", dump_min, "Lower edge of the first sub-beam")->capture_default_str();
    dump->add_option("--lo", dump_lo)->capture_default_str();
    dump->add_option("--hi", dump_hi)->capture_default_str();
    dump->add_option("--points", dump_points)->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        std::cerr << "airs: error: " << e.what() << '\n';
        return e.get_exit_code() ? e.get_exit_code() : 2;
    }

    try
    {
        const auto cfg = load_config(config_path, overrides);
        Scenario sc = to_scenario(cfg);

        std::ostringstream out;
        if (*single)
        {
            const auto w = parse_list(w1_text, "--w1");
            if (w.size() != 2)
                throw std::invalid_argument("--w1 expects x,y");
            if (single_n < 1)
                throw std::invalid_argument("--N must be >= 1");
            const Point2 w1{w[0], w[1]};
            const auto sol = optimal_placement_single(w1, sc.altitude);
            const ArrayGeometry geo{single_n, 1, sc.array.m};
            out << "candidate,rho,xi,qx,qy,snr_db\n";
            for (std::size_t i = 0; i < sol.candidates.size(); ++i)
            {
                const auto &q = sol.candidates[i];
                const auto phases = conjugate_phases(q, w1, geo, sc.radio);
                out << i << ',' << num(sol.rho) << ',' << num(sol.xi[i]) << ',' << num(q.qx()) << ','
                    << num(q.qy()) << ',' << num(to_db(snr(q, w1, phases, geo, sc.radio))) << '\n';
            }
        }
        else if (*flat)
        {
            const auto plan = plan_flatten_1d(flat_lo, flat_hi, flat_n, sc.radio.dx_bar);
            out << "subarray,start,size,steer_freq,common_phase\n";
            for (int l = 0; l < plan.L; ++l)
                out << l + 1 << ',' << plan.starts[l] << ',' << plan.sizes[l] << ',' << num(plan.steer_freqs[l])
                    << ',' << num(plan.common_phases[l]) << '\n';
        }
        else if (*ula)
        {
            sc.array.nx = ula_n > 0 ? ula_n : sc.array.nx;
            sc.array.ny = 1;
            write_result(out, search_placement_ula(sc));
        }
        else if (*upa)
        {
            sc.array.nx = upa_nx > 0 ? upa_nx : sc.array.nx;
            sc.array.ny = upa_ny > 0 ? upa_ny : sc.array.ny;
            write_result(out, search_placement_upa(sc));
        }
        else if (*fig)
        {
            auto spec = figure_preset(fig_id, sc);
            if (!fig_sweep.empty())
                spec.sweep = parse_list(fig_sweep, "--sweep");
            if (!fig_schemes.empty())
            {
                spec.schemes.clear();
                std::stringstream ss(fig_schemes);
                std::string name;
                while (std::getline(ss, name, ','))
                    spec.schemes.push_back(parse_scheme(name));
            }
            write_csv(run_experiment(spec), out);
        }
        else if (*dump)
        {
            if (dump_points < 2)
                throw std::invalid_argument("--points must be >= 2");
            const auto plan = make_flatten_plan(dump_min, dump_l, dump_n, sc.radio.dx_bar);
            Table t{{"delta", "gain_db"}, {}};
            for (int k = 0; k < dump_points; ++k)
            {
                const double d = dump_lo + (dump_hi - dump_lo) * k / (dump_points - 1);
                t.rows.push_back({d, "", to_db(flattened_pattern_gain(plan, d))});
            }
            write_csv(t, out);
        }

        if (out_path.empty())
        {
            std::cout << out.str();
        }
        else
        {
            std::ofstream f(out_path, std::ios::binary);
            if (!f)
                throw std::runtime_error("cannot open output file '" + out_path + "'");
            f << out.str();
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "airs: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
