// SPDX-License-Identifier: Apache-2.0
//
// ueant - handheld UE antenna pattern, polarization and blockage modelling
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

#include <cmath>
#include <cstdio>
#include <string>

#include <doctest.h>

#include "ueant/csv.hpp"
#include "ueant/errors.hpp"
#include "ueant/simrun.hpp"

using namespace ueant;

namespace
{
    // A small randomized run that keeps the per-replication sweeps cheap.
    SimConfig mc_config(int replications, int threads)
    {
        SimConfig cfg = default_config();
        cfg.has_seed = true;
        cfg.seed = 4242;
        cfg.replications = replications;
        cfg.threads = threads;
        cfg.orientation.uniform_random = true;
        cfg.port_loss.enabled = true;
        cfg.probabilities.p = {0.25, 0.35, 0.2, 0.2};
        cfg.probe_step.theta_deg = 30.0;
        cfg.probe_step.phi_deg = 30.0;
        return cfg;
    }

    bool records_equal(const McRecord &a, const McRecord &b)
    {
        return a.replication == b.replication && a.scenario == b.scenario &&
               a.orientation.alpha_deg == b.orientation.alpha_deg &&
               a.orientation.beta_deg == b.orientation.beta_deg &&
               a.orientation.gamma_deg == b.orientation.gamma_deg &&
               a.serving_gain_dbi == b.serving_gain_dbi &&
               a.best_serving_gain_dbi == b.best_serving_gain_dbi &&
               a.imbalance_max_db == b.imbalance_max_db &&
               a.imbalance_frac_above_10db == b.imbalance_frac_above_10db;
    }
}

TEST_CASE("port enumeration expands dual polarizations")
{
    SimConfig cfg = default_config();
    CHECK(ports_for(cfg).size() == 8);

    const std::string text = "{\"layout\": {\"kind\": \"legacy_array\", \"n_ports\": 8}}";
    const SimConfig legacy = parse_config(text);
    CHECK(ports_for(legacy).size() == 8); // four dual-polarized positions
}

TEST_CASE("replications replay exactly for any thread count")
{
    const McResult a = monte_carlo_run(mc_config(24, 1));
    const McResult b = monte_carlo_run(mc_config(24, 4));
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i)
        CHECK(records_equal(a.records[i], b.records[i]));
    CHECK(a.mean_best_serving_dbi == b.mean_best_serving_dbi);
}

TEST_CASE("a replication draws the same values regardless of how many follow")
{
    const McResult small = monte_carlo_run(mc_config(6, 2));
    const McResult big = monte_carlo_run(mc_config(18, 3));
    for (std::size_t i = 0; i < small.records.size(); ++i)
        CHECK(records_equal(small.records[i], big.records[i]));
}

TEST_CASE("different seeds decorrelate the run")
{
    SimConfig cfg = mc_config(10, 2);
    const McResult a = monte_carlo_run(cfg);
    cfg.seed = 4243;
    const McResult b = monte_carlo_run(cfg);
    int same = 0;
    for (std::size_t i = 0; i < a.records.size(); ++i)
        if (a.records[i].orientation.alpha_deg == b.records[i].orientation.alpha_deg)
            ++same;
    CHECK(same == 0);
}

TEST_CASE("scenario mix follows the configured probabilities")
{
    SimConfig cfg = mc_config(4000, 4);
    cfg.port_loss.enabled = false;      // keep the loop lean
    cfg.orientation.uniform_random = false;
    cfg.probe_step.theta_deg = 90.0;
    cfg.probe_step.phi_deg = 90.0;
    const McResult res = monte_carlo_run(cfg);
    for (BlockageScenario s : ALL_SCENARIOS)
    {
        const double frac = static_cast<double>(
                                res.scenario_counts[static_cast<std::size_t>(s)]) /
                            4000.0;
        CHECK(std::fabs(frac - cfg.probabilities.at(s)) < 0.03);
    }
}

TEST_CASE("random mountings cover the sphere without a hemisphere bias")
{
    SimConfig cfg = mc_config(3000, 4);
    cfg.probabilities = ScenarioProbabilities::free_space_only();
    cfg.port_loss.enabled = false;
    cfg.probe_step.theta_deg = 90.0;
    cfg.probe_step.phi_deg = 90.0;
    const McResult res = monte_carlo_run(cfg);

    // The rotated device x axis lands uniformly on the sphere, so its global
    // z component is uniform in [-1, 1].
    double mean_z = 0.0;
    int upper = 0;
    for (const McRecord &rec : res.records)
    {
        const Rotation r = rotation_matrix(rec.orientation);
        const Vec3 device_x = r.apply({1, 0, 0});
        mean_z += device_x.z;
        if (device_x.z > 0)
            ++upper;
    }
    mean_z /= static_cast<double>(res.records.size());
    CHECK(std::fabs(mean_z) < 0.03);
    CHECK(std::fabs(upper / 3000.0 - 0.5) < 0.03);
}

TEST_CASE("imbalance columns are zero for a single-port run")
{
    SimConfig cfg = mc_config(3, 1);
    cfg.antennas = {4};
    const McResult res = monte_carlo_run(cfg);
    for (const McRecord &rec : res.records)
    {
        CHECK(rec.serving_gain_dbi.size() == 1);
        CHECK(rec.imbalance_max_db == 0.0);
        CHECK(rec.imbalance_frac_above_10db == 0.0);
    }
}

TEST_CASE("the cut export writes one row per azimuth step")
{
    SimConfig cfg = default_config();
    cfg.map_step.phi_deg = 2.0;
    const std::string path = "ueant_test_cut.csv";
    const auto rows = pattern_cut_export(cfg, 90.0, true, false,
                                         BlockageScenario::FreeSpace, path);
    CHECK(rows == 180);
    const CsvTable t = read_csv(path);
    CHECK(t.rows.size() == 180);
    const auto gain_col = t.column("gain_dbi");
    double peak = -1e9;
    for (const auto &row : t.rows)
        peak = std::max(peak, parse_double(row[gain_col]));
    CHECK(peak == 5.3);
    std::remove(path.c_str());
}

TEST_CASE("normalized cuts put their peak at 0 dB")
{
    SimConfig cfg = default_config();
    cfg.map_step.phi_deg = 5.0;
    const std::string path = "ueant_test_cut_norm.csv";
    pattern_cut_export(cfg, 90.0, false, true, BlockageScenario::FreeSpace, path);
    const CsvTable t = read_csv(path);
    double peak = -1e9;
    for (const auto &row : t.rows)
        for (std::size_t c = 2; c < row.size(); ++c)
            peak = std::max(peak, parse_double(row[c]));
    CHECK(peak == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("the sphere map export covers the whole grid")
{
    SimConfig cfg = default_config();
    cfg.map_step.theta_deg = 15.0;
    cfg.map_step.phi_deg = 15.0;
    cfg.antennas = {3, 4};
    const std::string path = "ueant_test_map.csv";
    const auto rows = sphere_map_export(cfg, BlockageScenario::FreeSpace, path);
    CHECK(rows == 12u * 24u);
    const CsvTable t = read_csv(path);
    CHECK(t.header.size() == 4);
    CHECK(t.column("ant3_p0_dbi") == 2);
    std::remove(path.c_str());
}

TEST_CASE("the imbalance export is a proper CDF")
{
    SimConfig cfg = default_config();
    cfg.map_step.theta_deg = 10.0;
    cfg.map_step.phi_deg = 10.0;
    const std::string path = "ueant_test_imb.csv";
    ImbalanceStats stats;
    imbalance_export(cfg, BlockageScenario::FreeSpace, path, &stats);
    const CsvTable t = read_csv(path);
    REQUIRE(!t.rows.empty());
    double prev_v = -1e9, prev_p = 0.0;
    for (const auto &row : t.rows)
    {
        const double v = parse_double(row[0]);
        const double p = parse_double(row[1]);
        CHECK(v >= prev_v);
        CHECK(p >= prev_p);
        prev_v = v;
        prev_p = p;
    }
    CHECK(parse_double(t.rows.back()[1]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(parse_double(t.rows.back()[0]) == doctest::Approx(stats.max_db).epsilon(1e-12));
    std::remove(path.c_str());
}

TEST_CASE("the replication export round-trips through CSV")
{
    SimConfig cfg = mc_config(12, 2);
    const std::string path = "ueant_test_mc.csv";
    McResult res;
    const auto rows = blockage_mc_export(cfg, path, &res);
    CHECK(rows == 12);
    const CsvTable t = read_csv(path);
    REQUIRE(t.rows.size() == 12);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
    {
        CHECK(parse_double(t.rows[i][t.column("replication")]) == static_cast<double>(i));
        CHECK_NOTHROW(scenario_from_string(t.rows[i][t.column("scenario")]));
        CHECK(parse_double(t.rows[i][t.column("best_dbi")]) ==
              res.records[i].best_serving_gain_dbi);
    }
    std::remove(path.c_str());
}

TEST_CASE("the combining export lists every port pair once")
{
    SimConfig cfg = default_config();
    cfg.map_step.theta_deg = 10.0;
    cfg.map_step.phi_deg = 10.0;
    const std::string path = "ueant_test_comb.csv";
    const auto rows = combine_export(cfg, BlockageScenario::FreeSpace, path);
    CHECK(rows == 28); // C(8, 2)
    const CsvTable t = read_csv(path);
    for (const auto &row : t.rows)
    {
        const double peak = parse_double(row[t.column("peak_dbi")]);
        CHECK(peak < 8.31); // no pair beats two co-located elements
        CHECK(peak > -17.2);
    }
    std::remove(path.c_str());
}
