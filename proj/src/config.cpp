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

#include "ueant/config.hpp"

#include <cmath>
#include <filesystem>
#include <initializer_list>
#include <set>
#include <string>

#include <json.hpp>

#include "ueant/csv.hpp"
#include "ueant/errors.hpp"
#include "ueant/pattern.hpp"

namespace ueant
{

    namespace
    {
        using nlohmann::json;

        void reject_unknown_keys(const json &obj, const std::string &section,
                                 std::initializer_list<const char *> allowed)
        {
            for (const auto &item : obj.items())
            {
                bool known = false;
                for (const char *key : allowed)
                    if (item.key() == key)
                    {
                        known = true;
                        break;
                    }
                if (!known)
                    throw ParseError("unknown key '" + item.key() + "' in " + section);
            }
        }

        const json *get_object(const json &obj, const char *key, const std::string &section)
        {
            auto it = obj.find(key);
            if (it == obj.end())
                return nullptr;
            if (!it->is_object())
                throw ParseError(section + "." + key + " must be an object");
            return &*it;
        }

        double get_number(const json &obj, const char *key, const std::string &section,
                          double fallback)
        {
            auto it = obj.find(key);
            if (it == obj.end())
                return fallback;
            if (!it->is_number())
                throw ParseError(section + "." + key + " must be a number");
            return it->get<double>();
        }

        bool get_bool(const json &obj, const char *key, const std::string &section,
                      bool fallback)
        {
            auto it = obj.find(key);
            if (it == obj.end())
                return fallback;
            if (!it->is_boolean())
                throw ParseError(section + "." + key + " must be a boolean");
            return it->get<bool>();
        }

        std::string get_string(const json &obj, const char *key, const std::string &section,
                               const std::string &fallback)
        {
            auto it = obj.find(key);
            if (it == obj.end())
                return fallback;
            if (!it->is_string())
                throw ParseError(section + "." + key + " must be a string");
            return it->get<std::string>();
        }

        PatternParams parse_pattern(const json &node, const std::string &section)
        {
            if (node.is_string())
            {
                const auto name = node.get<std::string>();
                if (name == "directive")
                    return PatternParams::directive_default();
                if (name == "isotropic")
                    return PatternParams::isotropic();
                throw ParseError(section + ": unknown pattern '" + name + "'");
            }
            if (!node.is_object())
                throw ParseError(section + " must be a string or an object");
            reject_unknown_keys(node, section,
                                {"kind", "g_max_dbi", "theta_3db_deg", "phi_3db_deg",
                                 "sla_v_db", "a_max_db"});
            const auto kind = get_string(node, "kind", section, "directive");
            PatternParams p;
            if (kind == "directive")
                p = PatternParams::directive_default();
            else if (kind == "isotropic")
                p = PatternParams::isotropic();
            else
                throw ParseError(section + ": unknown pattern kind '" + kind + "'");
            p.g_max_dbi = get_number(node, "g_max_dbi", section, p.g_max_dbi);
            p.theta_3db_deg = get_number(node, "theta_3db_deg", section, p.theta_3db_deg);
            p.phi_3db_deg = get_number(node, "phi_3db_deg", section, p.phi_3db_deg);
            p.sla_v_db = get_number(node, "sla_v_db", section, p.sla_v_db);
            p.a_max_db = get_number(node, "a_max_db", section, p.a_max_db);
            return p;
        }

        Vec3 parse_vec3(const json &node, const std::string &section)
        {
            if (!node.is_array() || node.size() != 3 || !node[0].is_number() ||
                !node[1].is_number() || !node[2].is_number())
                throw ParseError(section + " must be an array of three numbers");
            return {node[0].get<double>(), node[1].get<double>(), node[2].get<double>()};
        }

        AntennaElement parse_element(const json &node, const PatternParams &default_pattern)
        {
            if (!node.is_object())
                throw ParseError("layout.elements entries must be objects");
            reject_unknown_keys(node, "layout.elements[]",
                                {"id", "position_mm", "orientation_deg", "pattern",
                                 "dual_polarized"});
            AntennaElement el;
            auto id = node.find("id");
            if (id == node.end() || !id->is_number_integer())
                throw ParseError("layout.elements[].id must be an integer");
            el.id = id->get<int>();
            auto pos = node.find("position_mm");
            if (pos == node.end())
                throw ParseError("layout.elements[].position_mm is required");
            el.position_mm = parse_vec3(*pos, "layout.elements[].position_mm");
            auto ori = node.find("orientation_deg");
            if (ori != node.end())
            {
                const Vec3 v = parse_vec3(*ori, "layout.elements[].orientation_deg");
                el.orientation = RotationAngles(v.x, v.y, v.z);
            }
            el.pattern = default_pattern;
            auto pat = node.find("pattern");
            if (pat != node.end())
                el.pattern = parse_pattern(*pat, "layout.elements[].pattern");
            el.dual_polarized = get_bool(node, "dual_polarized", "layout.elements[]", false);
            return el;
        }

        void parse_layout(const json &node, SimConfig &cfg, const PatternParams &default_pattern,
                          bool pattern_set)
        {
            reject_unknown_keys(node, "layout", {"kind", "n_ports", "elements"});
            const auto kind = get_string(node, "kind", "layout", "handheld");
            if (kind == "handheld")
                cfg.layout = reference_handset();
            else if (kind == "cpe")
                cfg.layout = cpe_reference();
            else if (kind == "legacy_array")
            {
                const auto n = get_number(node, "n_ports", "layout", 4.0);
                try
                {
                    cfg.layout = legacy_halfwave_array(static_cast<int>(n), cfg.carrier_hz);
                }
                catch (const Error &e)
                {
                    throw ParseError(std::string("layout: ") + e.what());
                }
            }
            else
                throw ParseError("layout.kind must be handheld, cpe or legacy_array");

            if (kind != "legacy_array" && node.contains("n_ports"))
                throw ParseError("layout.n_ports only applies to legacy_array");

            auto elements = node.find("elements");
            if (elements != node.end())
            {
                if (!elements->is_array())
                    throw ParseError("layout.elements must be an array");
                cfg.layout.elements.clear();
                for (const auto &entry : *elements)
                    cfg.layout.elements.push_back(parse_element(entry, default_pattern));
            }
            else if (pattern_set)
            {
                for (auto &el : cfg.layout.elements)
                    el.pattern = default_pattern;
            }
        }

        void parse_blockage(const json &node, SimConfig &cfg, const std::string &base_dir,
                            bool &table_set)
        {
            reject_unknown_keys(node, "blockage", {"probabilities", "table"});
            auto probs = get_object(node, "probabilities", "blockage");
            if (probs != nullptr)
            {
                reject_unknown_keys(*probs, "blockage.probabilities",
                                    {"free_space", "one_hand_browsing", "two_hand_browsing",
                                     "head_hand_talk"});
                cfg.probabilities.p = {0.0, 0.0, 0.0, 0.0};
                for (BlockageScenario s : ALL_SCENARIOS)
                    cfg.probabilities.p[static_cast<std::size_t>(s)] =
                        get_number(*probs, to_string(s), "blockage.probabilities", 0.0);
            }

            auto table = node.find("table");
            if (table == node.end())
                return;
            table_set = true;
            if (table->is_string())
            {
                const auto name = table->get<std::string>();
                if (name == "example")
                    cfg.table = AttenuationTable::example();
                else if (name == "free_space")
                    cfg.table = AttenuationTable::free_space_only();
                else
                    throw ParseError("blockage.table must be 'example', 'free_space' or "
                                     "an object with a path");
            }
            else if (table->is_object())
            {
                reject_unknown_keys(*table, "blockage.table", {"path"});
                const auto rel = get_string(*table, "path", "blockage.table", "");
                if (rel.empty())
                    throw ParseError("blockage.table.path is required");
                const std::filesystem::path p(rel);
                const auto full = p.is_absolute() ? p : std::filesystem::path(base_dir) / p;
                cfg.table = AttenuationTable::load(full.string());
            }
            else
            {
                throw ParseError("blockage.table must be a string or an object");
            }
        }

        void parse_run(const json &node, SimConfig &cfg)
        {
            reject_unknown_keys(node, "run",
                                {"seed", "replications", "carrier_hz", "antennas",
                                 "orientation", "port_loss", "serving", "probe_step_deg",
                                 "map_step_deg", "threads"});
            auto seed = node.find("seed");
            if (seed != node.end())
            {
                if (!seed->is_number_unsigned() && !seed->is_number_integer())
                    throw ParseError("run.seed must be a non-negative integer");
                if (seed->is_number_integer() && seed->get<long long>() < 0)
                    throw ParseError("run.seed must be a non-negative integer");
                cfg.seed = seed->get<std::uint64_t>();
                cfg.has_seed = true;
            }
            cfg.replications = static_cast<int>(get_number(node, "replications", "run",
                                                           cfg.replications));
            cfg.carrier_hz = get_number(node, "carrier_hz", "run", cfg.carrier_hz);
            auto ants = node.find("antennas");
            if (ants != node.end())
            {
                if (!ants->is_array())
                    throw ParseError("run.antennas must be an array of integers");
                cfg.antennas.clear();
                for (const auto &a : *ants)
                {
                    if (!a.is_number_integer())
                        throw ParseError("run.antennas must be an array of integers");
                    cfg.antennas.push_back(a.get<int>());
                }
            }
            auto ori = get_object(node, "orientation", "run");
            if (ori != nullptr)
            {
                reject_unknown_keys(*ori, "run.orientation",
                                    {"mode", "alpha_deg", "beta_deg", "gamma_deg"});
                const auto mode = get_string(*ori, "mode", "run.orientation", "fixed");
                if (mode == "uniform_random")
                {
                    cfg.orientation.uniform_random = true;
                    if (ori->contains("alpha_deg") || ori->contains("beta_deg") ||
                        ori->contains("gamma_deg"))
                        throw ParseError("run.orientation angles only apply to mode 'fixed'");
                }
                else if (mode == "fixed")
                {
                    cfg.orientation.uniform_random = false;
                    cfg.orientation.fixed = RotationAngles(
                        get_number(*ori, "alpha_deg", "run.orientation", 0.0),
                        get_number(*ori, "beta_deg", "run.orientation", 0.0),
                        get_number(*ori, "gamma_deg", "run.orientation", 0.0));
                }
                else
                {
                    throw ParseError("run.orientation.mode must be fixed or uniform_random");
                }
            }
            auto loss = get_object(node, "port_loss", "run");
            if (loss != nullptr)
            {
                reject_unknown_keys(*loss, "run.port_loss", {"enabled", "lo_db", "hi_db"});
                cfg.port_loss.enabled = get_bool(*loss, "enabled", "run.port_loss", false);
                cfg.port_loss.lo_db = get_number(*loss, "lo_db", "run.port_loss",
                                                 cfg.port_loss.lo_db);
                cfg.port_loss.hi_db = get_number(*loss, "hi_db", "run.port_loss",
                                                 cfg.port_loss.hi_db);
            }
            auto serving = get_object(node, "serving", "run");
            if (serving != nullptr)
            {
                reject_unknown_keys(*serving, "run.serving", {"theta_deg", "phi_deg"});
                cfg.serving_theta_deg = get_number(*serving, "theta_deg", "run.serving",
                                                   cfg.serving_theta_deg);
                cfg.serving_phi_deg = get_number(*serving, "phi_deg", "run.serving",
                                                 cfg.serving_phi_deg);
            }
            auto probe = get_object(node, "probe_step_deg", "run");
            if (probe != nullptr)
            {
                reject_unknown_keys(*probe, "run.probe_step_deg", {"theta", "phi"});
                cfg.probe_step.theta_deg = get_number(*probe, "theta", "run.probe_step_deg",
                                                      cfg.probe_step.theta_deg);
                cfg.probe_step.phi_deg = get_number(*probe, "phi", "run.probe_step_deg",
                                                    cfg.probe_step.phi_deg);
            }
            auto map = get_object(node, "map_step_deg", "run");
            if (map != nullptr)
            {
                reject_unknown_keys(*map, "run.map_step_deg", {"theta", "phi"});
                cfg.map_step.theta_deg = get_number(*map, "theta", "run.map_step_deg",
                                                    cfg.map_step.theta_deg);
                cfg.map_step.phi_deg = get_number(*map, "phi", "run.map_step_deg",
                                                  cfg.map_step.phi_deg);
            }
            cfg.threads = static_cast<int>(get_number(node, "threads", "run",
                                                      cfg.threads));
        }
    } // namespace

    std::vector<int> SimConfig::active_ids() const
    {
        if (!antennas.empty())
            return antennas;
        std::vector<int> ids;
        ids.reserve(layout.elements.size());
        for (const auto &el : layout.elements)
            ids.push_back(el.id);
        return ids;
    }

    bool SimConfig::randomized() const
    {
        if (orientation.uniform_random || port_loss.enabled)
            return true;
        for (BlockageScenario s : ALL_SCENARIOS)
            if (s != BlockageScenario::FreeSpace && probabilities.at(s) > 0.0)
                return true;
        return false;
    }

    SimConfig default_config() { return {}; }

    SimConfig parse_config(const std::string &json_text, const std::string &base_dir)
    {
        json root;
        try
        {
            root = json::parse(json_text);
        }
        catch (const json::exception &e)
        {
            throw ParseError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!root.is_object())
            throw ParseError("config root must be an object");
        reject_unknown_keys(root, "config", {"layout", "pattern", "blockage", "run"});

        SimConfig cfg;
        PatternParams default_pattern = PatternParams::directive_default();
        const bool pattern_set = root.contains("pattern");
        if (auto pat = root.find("pattern"); pat != root.end())
            default_pattern = parse_pattern(*pat, "pattern");

        // The run section first; legacy array spacing depends on the carrier.
        if (auto run = get_object(root, "run", "config"))
            parse_run(*run, cfg);
        bool custom_elements = false;
        if (auto layout = get_object(root, "layout", "config"))
        {
            custom_elements = layout->contains("elements");
            parse_layout(*layout, cfg, default_pattern, pattern_set);
        }
        else if (pattern_set)
        {
            for (auto &el : cfg.layout.elements)
                el.pattern = default_pattern;
        }
        bool table_set = false;
        if (auto blockage = get_object(root, "blockage", "config"))
            parse_blockage(*blockage, cfg, base_dir, table_set);

        // The shipped example table names the reference handset antennas; any
        // other element set defaults to a free-space table until the user
        // supplies matching measurements.
        if (!table_set && (cfg.layout.kind != LayoutKind::Handheld || custom_elements))
            cfg.table = AttenuationTable::free_space_only();
        return cfg;
    }

    SimConfig load_config(const std::string &path)
    {
        const auto dir = std::filesystem::path(path).parent_path();
        SimConfig cfg = parse_config(read_text_file(path),
                                     dir.empty() ? std::string(".") : dir.string());
        validate_config(cfg);
        return cfg;
    }

    std::vector<std::string> config_violations(const SimConfig &c)
    {
        std::vector<std::string> out;

        for (const auto &v : c.probabilities.violations())
            out.push_back(v);
        for (const auto &v : layout_violations(c.layout))
            out.push_back(v);
        if (c.layout.elements.empty())
            out.push_back("layout has no antenna elements");
        for (const auto &el : c.layout.elements)
            for (const auto &v : el.pattern.violations())
                out.push_back("antenna " + std::to_string(el.id) + ": " + v);

        if (!(c.carrier_hz > 0.0))
            out.push_back("carrier frequency must be positive");
        else
        {
            for (const auto &v : validate(c.layout, c.carrier_hz, c.active_ids()))
                out.push_back(v);
            try
            {
                c.table.band_index(c.carrier_hz);
            }
            catch (const BandNotCovered &)
            {
                out.push_back("carrier " + format_double(c.carrier_hz) +
                              " Hz is outside every attenuation band");
            }
        }

        {
            std::set<int> seen;
            for (int id : c.antennas)
                if (!seen.insert(id).second)
                    out.push_back("antenna " + std::to_string(id) +
                                  " listed twice in run.antennas");
        }

        for (int id : c.table.all_antenna_ids())
            if (c.layout.find(id) == nullptr)
                out.push_back("attenuation table names antenna " + std::to_string(id) +
                              " which the layout does not have");

        if (c.replications < 1)
            out.push_back("run.replications must be at least 1");
        if (c.threads < 0)
            out.push_back("run.threads must be 0 (auto) or positive");
        if (c.port_loss.enabled)
        {
            if (c.port_loss.lo_db < 0.0)
                out.push_back("run.port_loss.lo_db must be non-negative");
            if (c.port_loss.lo_db > c.port_loss.hi_db)
                out.push_back("run.port_loss.lo_db must not exceed hi_db");
        }
        if (!(c.serving_theta_deg >= 0.0 && c.serving_theta_deg <= 180.0))
            out.push_back("run.serving.theta_deg must lie in [0, 180]");

        const auto check_step = [&out](const char *name, double span, double step) {
            if (!(step > 0.0))
            {
                out.push_back(std::string(name) + " must be positive");
                return;
            }
            const double n = std::round(span / step);
            if (n < 1.0 || std::fabs(n * step - span) > 1e-9)
                out.push_back(std::string(name) + " must divide " + format_double(span) +
                              " deg evenly");
        };
        check_step("run.probe_step_deg.theta", 180.0, c.probe_step.theta_deg);
        check_step("run.probe_step_deg.phi", 360.0, c.probe_step.phi_deg);
        check_step("run.map_step_deg.theta", 180.0, c.map_step.theta_deg);
        check_step("run.map_step_deg.phi", 360.0, c.map_step.phi_deg);

        if (c.randomized() && !c.has_seed)
            out.push_back("run.seed is required when the run draws random numbers");

        return out;
    }

    void validate_config(const SimConfig &c)
    {
        const auto violations = config_violations(c);
        if (!violations.empty())
            throw ValidationError(violations);
    }

} // namespace ueant
