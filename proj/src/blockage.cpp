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

#include "ueant/blockage.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ueant/errors.hpp"

namespace ueant
{

    const char *to_string(BlockageScenario s)
    {
        switch (s)
        {
        case BlockageScenario::FreeSpace:
            return "free_space";
        case BlockageScenario::OneHandBrowsing:
            return "one_hand_browsing";
        case BlockageScenario::TwoHandBrowsing:
            return "two_hand_browsing";
        default:
            return "head_hand_talk";
        }
    }

    BlockageScenario scenario_from_string(const std::string &name)
    {
        for (auto s : ALL_SCENARIOS)
            if (name == to_string(s))
                return s;
        throw ParseError("unknown blockage scenario '" + name + "'");
    }

    std::vector<std::string> ScenarioProbabilities::violations() const
    {
        std::vector<std::string> v;
        double sum = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i)
        {
            if (p[i] < 0.0 || p[i] > 1.0)
                v.push_back(std::string("probability for ") + to_string(ALL_SCENARIOS[i]) +
                            " outside [0, 1]");
            sum += p[i];
        }
        if (std::abs(sum - 1.0) > 1e-9)
            v.push_back("scenario probabilities sum to " + std::to_string(sum) + ", expected 1");
        return v;
    }

    BlockageScenario sample_scenario(const ScenarioProbabilities &p, Rng &rng)
    {
        const double u = rng.next_unit();
        double cum = 0.0;
        for (std::size_t i = 0; i + 1 < p.p.size(); ++i)
        {
            cum += p.p[i];
            if (u < cum)
                return ALL_SCENARIOS[i];
        }
        return ALL_SCENARIOS.back();
    }

    AttenuationTable::AttenuationTable(std::vector<FrequencyBand> bands,
                                       std::map<std::tuple<int, int, int>, double> entries)
        : bands_(std::move(bands)), entries_(std::move(entries))
    {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < bands_.size(); ++i)
        {
            if (!(bands_[i].f_low_hz < bands_[i].f_high_hz))
                v.push_back("band " + std::to_string(i) + ": f_low must be < f_high");
            if (i > 0 && bands_[i].f_low_hz < bands_[i - 1].f_high_hz)
                v.push_back("band " + std::to_string(i) + ": overlaps or precedes band " +
                            std::to_string(i - 1));
        }
        for (const auto &[key, att] : entries_)
        {
            const auto [scen, id, band] = key;
            const std::string where = std::string("entry (") + to_string(ALL_SCENARIOS[
                                          static_cast<std::size_t>(scen)]) +
                                      ", antenna " + std::to_string(id) + ", band " +
                                      std::to_string(band) + ")";
            if (band < 0 || band >= static_cast<int>(bands_.size()))
            {
                v.push_back(where + ": band index out of range");
                continue;
            }
            if (att < 0.0)
                v.push_back(where + ": attenuation must be >= 0 dB");
            if (scen == static_cast<int>(BlockageScenario::FreeSpace) && att != 0.0)
                v.push_back(where + ": free-space attenuation must be 0 dB");
            if (bands_[static_cast<std::size_t>(band)].sub_1ghz() && id != 4 && id != 8)
                v.push_back(where + ": sub-1 GHz bands only cover antennas #4 and #8");
        }
        if (!v.empty())
            throw ValidationError(std::move(v));
    }

    AttenuationTable AttenuationTable::example()
    {
        std::vector<FrequencyBand> bands = {
            {0.6e9, 1.0e9, "example"},
            {1.0e9, 8.4e9, "example"},
            {14.8e9, 15.4e9, "example"},
        };

        // Placeholder grips: a right-hand browsing grip loads the bottom of
        // the device hardest, talk mode also loads the top. Only illustrative
        // values; swap in measured tables for standards-grade runs.
        const int OHB = static_cast<int>(BlockageScenario::OneHandBrowsing);
        const int THB = static_cast<int>(BlockageScenario::TwoHandBrowsing);
        const int HHT = static_cast<int>(BlockageScenario::HeadHandTalk);

        std::map<std::tuple<int, int, int>, double> e;
        // Band 0: (0.6, 1.0] GHz, antennas #4 and #8 only.
        e[{OHB, 4, 0}] = 9.5;
        e[{OHB, 8, 0}] = 1.1;
        e[{THB, 4, 0}] = 7.8;
        e[{THB, 8, 0}] = 2.4;
        e[{HHT, 4, 0}] = 8.6;
        e[{HHT, 8, 0}] = 6.2;

        // Band 1: (1.0, 8.4] GHz.
        const double ohb1[8] = {1.2, 1.5, 4.7, 10.8, 9.2, 7.6, 5.1, 0.6};
        const double thb1[8] = {2.1, 2.4, 6.8, 8.9, 7.3, 6.5, 6.1, 1.8};
        const double hht1[8] = {6.4, 7.0, 5.9, 9.8, 8.4, 7.2, 4.3, 5.7};
        // Band 2: (14.8, 15.4] GHz.
        const double ohb2[8] = {1.8, 2.2, 6.3, 12.4, 10.7, 8.9, 6.0, 0.9};
        const double thb2[8] = {2.6, 3.1, 7.9, 9.6, 8.2, 7.4, 7.0, 2.3};
        const double hht2[8] = {7.5, 8.3, 6.6, 10.9, 9.3, 8.1, 5.2, 6.8};
        for (int id = 1; id <= 8; ++id)
        {
            e[{OHB, id, 1}] = ohb1[id - 1];
            e[{THB, id, 1}] = thb1[id - 1];
            e[{HHT, id, 1}] = hht1[id - 1];
            e[{OHB, id, 2}] = ohb2[id - 1];
            e[{THB, id, 2}] = thb2[id - 1];
            e[{HHT, id, 2}] = hht2[id - 1];
        }
        return AttenuationTable(std::move(bands), std::move(e));
    }

    AttenuationTable AttenuationTable::free_space_only()
    {
        return AttenuationTable(AttenuationTable::example().bands(), {});
    }

    AttenuationTable AttenuationTable::load(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open attenuation table '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse(ss.str());
    }

    AttenuationTable AttenuationTable::parse(const std::string &json_text)
    {
        nlohmann::json j;
        try
        {
            j = nlohmann::json::parse(json_text);
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ParseError(std::string("attenuation table: ") + e.what());
        }

        try
        {
            std::vector<FrequencyBand> bands;
            for (const auto &b : j.at("bands"))
                bands.push_back({b.at("f_low_hz").get<double>(), b.at("f_high_hz").get<double>(),
                                 b.value("provenance", "")});

            std::map<std::tuple<int, int, int>, double> entries;
            for (const auto &r : j.value("entries", nlohmann::json::array()))
            {
                const int scen = static_cast<int>(
                    scenario_from_string(r.at("scenario").get<std::string>()));
                entries[{scen, r.at("antenna_id").get<int>(), r.at("band_index").get<int>()}] =
                    r.at("attenuation_db").get<double>();
            }
            return AttenuationTable(std::move(bands), std::move(entries));
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ParseError(std::string("attenuation table: ") + e.what());
        }
    }

    std::string AttenuationTable::to_json_text() const
    {
        nlohmann::json j;
        j["bands"] = nlohmann::json::array();
        for (const auto &b : bands_)
            j["bands"].push_back({{"f_low_hz", b.f_low_hz},
                                  {"f_high_hz", b.f_high_hz},
                                  {"provenance", b.provenance}});
        j["entries"] = nlohmann::json::array();
        for (const auto &[key, att] : entries_)
        {
            const auto [scen, id, band] = key;
            j["entries"].push_back(
                {{"scenario", to_string(ALL_SCENARIOS[static_cast<std::size_t>(scen)])},
                 {"antenna_id", id},
                 {"band_index", band},
                 {"attenuation_db", att}});
        }
        return j.dump(2) + "\n";
    }

    int AttenuationTable::band_index(double carrier_hz) const
    {
        for (std::size_t i = 0; i < bands_.size(); ++i)
            if (bands_[i].contains(carrier_hz))
                return static_cast<int>(i);
        throw BandNotCovered("carrier " + std::to_string(carrier_hz / 1e9) +
                             " GHz falls outside every table band");
    }

    double AttenuationTable::element_attenuation_db(BlockageScenario s, int antenna_id,
                                                    double carrier_hz) const
    {
        const int band = band_index(carrier_hz);
        if (s == BlockageScenario::FreeSpace)
            return 0.0;
        const auto it = entries_.find({static_cast<int>(s), antenna_id, band});
        if (it == entries_.end())
            throw AntennaNotInBand(std::string("no ") + to_string(s) + " entry for antenna #" +
                                   std::to_string(antenna_id) + " in band " + std::to_string(band));
        return it->second;
    }

    std::vector<int> AttenuationTable::antenna_ids(BlockageScenario s, int band) const
    {
        std::set<int> ids;
        for (const auto &[key, att] : entries_)
            if (std::get<0>(key) == static_cast<int>(s) && std::get<2>(key) == band)
                ids.insert(std::get<1>(key));
        return {ids.begin(), ids.end()};
    }

    std::vector<int> AttenuationTable::all_antenna_ids() const
    {
        std::set<int> ids;
        for (const auto &[key, att] : entries_)
            ids.insert(std::get<1>(key));
        return {ids.begin(), ids.end()};
    }

    std::vector<std::string> ModelARegion::violations() const
    {
        std::vector<std::string> v;
        if (!(width_phi_deg > 0.0 && width_phi_deg <= 360.0))
            v.push_back("model_a: width_phi_deg must lie in (0, 360]");
        if (!(height_theta_deg > 0.0 && height_theta_deg <= 180.0))
            v.push_back("model_a: height_theta_deg must lie in (0, 180]");
        return v;
    }

    double model_a_attenuation_db(const ModelARegion &r, const Direction &d_gcs)
    {
        const double dphi = std::abs(wrap_deg(d_gcs.phi_deg() - r.center_phi_deg));
        const double dtheta = std::abs(d_gcs.theta_deg() - r.center_theta_deg);
        const bool inside = dphi <= r.width_phi_deg / 2.0 && dtheta <= r.height_theta_deg / 2.0;
        return inside ? r.attenuation_db : 0.0;
    }

    std::vector<double> port_imbalance_draw(bool enabled, double lo_db, double hi_db,
                                            int n_ports, Rng &rng)
    {
        if (lo_db > hi_db || lo_db < 0.0)
            throw InvalidRange("port imbalance range [" + std::to_string(lo_db) + ", " +
                               std::to_string(hi_db) + "] dB is invalid");
        if (n_ports < 0)
            throw InvalidRange("port count must be >= 0");

        std::vector<double> loss(static_cast<std::size_t>(n_ports), 0.0);
        if (enabled)
            for (auto &x : loss)
                x = rng.uniform(lo_db, hi_db);
        return loss;
    }

} // namespace ueant
