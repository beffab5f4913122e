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
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ueant/geometry.hpp"
#include "ueant/rng.hpp"

namespace ueant
{

    // Usage postures selecting a column of the attenuation table. The
    // enumeration order is fixed; scenario sampling draws through the inverse
    // CDF in this order.
    enum class BlockageScenario
    {
        FreeSpace = 0,
        OneHandBrowsing = 1,
        TwoHandBrowsing = 2,
        HeadHandTalk = 3
    };

    inline constexpr std::array<BlockageScenario, 4> ALL_SCENARIOS = {
        BlockageScenario::FreeSpace, BlockageScenario::OneHandBrowsing,
        BlockageScenario::TwoHandBrowsing, BlockageScenario::HeadHandTalk};

    const char *to_string(BlockageScenario s);
    BlockageScenario scenario_from_string(const std::string &name); // throws ParseError

    // Per-scenario probabilities, indexed by the enumeration order.
    struct ScenarioProbabilities
    {
        std::array<double, 4> p = {1.0, 0.0, 0.0, 0.0};

        static ScenarioProbabilities free_space_only() { return {}; }
        double at(BlockageScenario s) const { return p[static_cast<std::size_t>(s)]; }
        std::vector<std::string> violations() const;
    };

    // Inverse-CDF draw over the four scenarios; consumes one uniform variate.
    BlockageScenario sample_scenario(const ScenarioProbabilities &p, Rng &rng);

    // Carrier band (f_low, f_high]. A band reaching below 1 GHz is restricted
    // to antenna locations #4 and #8.
    struct FrequencyBand
    {
        double f_low_hz = 0.0;
        double f_high_hz = 0.0;
        std::string provenance;

        bool contains(double f_hz) const { return f_hz > f_low_hz && f_hz <= f_high_hz; }
        bool sub_1ghz() const { return f_low_hz < 1e9; }
    };

    // Element-wise blockage attenuation, keyed by (scenario, antenna, band).
    // Free-space attenuation is identically zero; missing entries for other
    // scenarios are lookup errors, not zeros.
    class AttenuationTable
    {
    public:
        AttenuationTable(std::vector<FrequencyBand> bands,
                         std::map<std::tuple<int, int, int>, double> entries);

        // The table shipped with the repository: the default three bands with
        // per-antenna placeholder values (provenance "example"). Substitute
        // measured values for standards-grade runs.
        static AttenuationTable example();

        // A table with the default bands and no entries; only free-space
        // lookups succeed.
        static AttenuationTable free_space_only();

        static AttenuationTable load(const std::string &path); // throws ParseError/IoError
        static AttenuationTable parse(const std::string &json_text);

        const std::vector<FrequencyBand> &bands() const { return bands_; }
        int band_index(double carrier_hz) const; // throws BandNotCovered

        // Attenuation in dB for one antenna element; the scenario column and
        // the carrier's band select the entry.
        double element_attenuation_db(BlockageScenario s, int antenna_id, double carrier_hz) const;

        // Antenna ids present for (scenario, band).
        std::vector<int> antenna_ids(BlockageScenario s, int band) const;
        std::vector<int> all_antenna_ids() const;

        bool has_entries() const { return !entries_.empty(); }
        std::string to_json_text() const;

    private:
        std::vector<FrequencyBand> bands_;
        std::map<std::tuple<int, int, int>, double> entries_; // (scenario, antenna, band) -> dB
    };

    // The legacy angular-region blocker: one fixed attenuation applied to
    // every antenna inside a rectangular (phi x theta) region, boundaries
    // inclusive.
    struct ModelARegion
    {
        double center_phi_deg = 180.0;
        double width_phi_deg = 120.0;
        double center_theta_deg = 90.0;
        double height_theta_deg = 80.0;
        double attenuation_db = 30.0;

        std::vector<std::string> violations() const;
    };

    double model_a_attenuation_db(const ModelARegion &r, const Direction &d_gcs);

    // Randomized per-port implementation loss. Disabled draws are all zeros;
    // enabled draws are independent uniforms in [lo, hi] dB.
    std::vector<double> port_imbalance_draw(bool enabled, double lo_db, double hi_db,
                                            int n_ports, Rng &rng);

} // namespace ueant
