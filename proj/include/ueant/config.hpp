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

#include <cstdint>
#include <string>
#include <vector>

#include "ueant/blockage.hpp"
#include "ueant/layout.hpp"

namespace ueant
{

    // Device mounting for a run: one fixed rotation, or a fresh uniform
    // random rotation per replication.
    struct OrientationSpec
    {
        bool uniform_random = false;
        RotationAngles fixed;
    };

    // Per-antenna implementation loss, drawn uniformly per replication.
    struct PortLossSpec
    {
        bool enabled = false;
        double lo_db = 2.0;
        double hi_db = 3.0;
    };

    struct StepSpec
    {
        double theta_deg = 1.0;
        double phi_deg = 1.0;
    };

    // Full description of a simulation run. Defaults are a free-space
    // reference handset at 3.5 GHz with a fixed upright mounting.
    struct SimConfig
    {
        DeviceLayout layout = reference_handset();
        ScenarioProbabilities probabilities;
        AttenuationTable table = AttenuationTable::example();

        bool has_seed = false;
        std::uint64_t seed = 0;
        int replications = 100;
        double carrier_hz = 3.5e9;
        std::vector<int> antennas; // empty selects every layout element
        OrientationSpec orientation;
        PortLossSpec port_loss;
        double serving_theta_deg = 90.0;
        double serving_phi_deg = 0.0;
        StepSpec probe_step{10.0, 10.0}; // per-replication statistics grid
        StepSpec map_step{1.0, 1.0};     // full-sphere export grid
        int threads = 1;                 // 0 picks the hardware count

        // The active antenna selection with an empty list resolved to the
        // whole layout.
        std::vector<int> active_ids() const;

        // True when any part of the run draws random numbers.
        bool randomized() const;
    };

    SimConfig default_config();

    // Parses the JSON run description. Unknown keys and type mismatches are
    // ParseError; base_dir anchors a relative attenuation-table path.
    SimConfig parse_config(const std::string &json_text, const std::string &base_dir = ".");

    SimConfig load_config(const std::string &path); // throws IoError/ParseError/ValidationError

    // Every rule the run description violates, empty when sound. Covers the
    // probability simplex, layout structure, antenna selection against the
    // carrier, band coverage, grid divisibility, loss and replication ranges
    // and the seed requirement of randomized runs.
    std::vector<std::string> config_violations(const SimConfig &c);

    // Throws ValidationError carrying all violations at once.
    void validate_config(const SimConfig &c);

} // namespace ueant
