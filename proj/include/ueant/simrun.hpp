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

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ueant/config.hpp"
#include "ueant/synthesis.hpp"

namespace ueant
{

    // Ports of the active antenna selection, one per polarization.
    std::vector<PortKey> ports_for(const SimConfig &cfg);

    // The deterministic device state of a run: fixed orientation, no port
    // loss, the given posture.
    UeState base_state(const SimConfig &cfg, BlockageScenario scenario);

    // One Monte-Carlo replication. Imbalance numbers are 0 when the run has
    // a single port.
    struct McRecord
    {
        int replication = 0;
        BlockageScenario scenario = BlockageScenario::FreeSpace;
        RotationAngles orientation;
        std::vector<double> serving_gain_dbi; // per port, ports_for order
        double best_serving_gain_dbi = 0.0;
        double imbalance_max_db = 0.0;
        double imbalance_frac_above_10db = 0.0;
    };

    struct McResult
    {
        std::vector<PortKey> ports;
        std::vector<McRecord> records;
        std::array<int, 4> scenario_counts = {0, 0, 0, 0};
        double mean_best_serving_dbi = 0.0;
    };

    // Runs the replication loop. Every replication draws its scenario,
    // orientation and port losses from its own seed substreams, so the result
    // is identical for any thread count and any replication order. The
    // configuration must already be validated.
    McResult monte_carlo_run(const SimConfig &cfg);

    // CSV products. Each writes one file and returns the data row count.
    // All of them evaluate the fixed orientation of the configuration; only
    // monte_carlo_run draws random numbers.

    // Azimuth cut at a fixed theta. Raw cuts sample the first active
    // element's pattern in the antenna frame; device cuts sample every active
    // port's effective gain in the global frame under the given posture.
    // normalize shifts the cut so its maximum sits at 0 dB.
    std::size_t pattern_cut_export(const SimConfig &cfg, double theta_deg, bool raw,
                                   bool normalize, BlockageScenario scenario,
                                   const std::string &path);

    // Full-sphere per-port effective gain on the map grid.
    std::size_t sphere_map_export(const SimConfig &cfg, BlockageScenario scenario,
                                  const std::string &path);

    // Weighted CDF of the per-direction port imbalance on the map grid.
    std::size_t imbalance_export(const SimConfig &cfg, BlockageScenario scenario,
                                 const std::string &path, ImbalanceStats *stats_out = nullptr);

    // The replication records of monte_carlo_run.
    std::size_t blockage_mc_export(const SimConfig &cfg, const std::string &path,
                                   McResult *result_out = nullptr);

    // Equal-weight coherent combining of every port pair: peak combined gain
    // over the map grid and combined gain towards the serving direction.
    std::size_t combine_export(const SimConfig &cfg, BlockageScenario scenario,
                               const std::string &path);

} // namespace ueant
