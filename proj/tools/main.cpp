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
#include <complex>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ueant/config.hpp"
#include "ueant/csv.hpp"
#include "ueant/errors.hpp"
#include "ueant/rng.hpp"
#include "ueant/simrun.hpp"

namespace
{

    struct CommonOpts
    {
        std::string config_path;
        std::uint64_t seed = 0;
        int threads = -1;
    };

    void add_common(CLI::App *sub, CommonOpts &c)
    {
        sub->add_option("--config", c.config_path, "JSON run description")
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", c.seed, "Override the run seed");
        sub->add_option("--threads", c.threads, "Override the worker count (0 = auto)");
    }

    ueant::SimConfig make_config(const CommonOpts &c, const CLI::App *sub)
    {
        ueant::SimConfig cfg;
        if (!c.config_path.empty())
        {
            const auto dir = std::filesystem::path(c.config_path).parent_path();
            cfg = ueant::parse_config(ueant::read_text_file(c.config_path),
                                      dir.empty() ? std::string(".") : dir.string());
        }
        if (sub->count("--seed") > 0)
        {
            cfg.seed = c.seed;
            cfg.has_seed = true;
        }
        if (sub->count("--threads") > 0)
            cfg.threads = c.threads;
        ueant::validate_config(cfg);
        return cfg;
    }

    void check(bool ok, const std::string &what, int &failures)
    {
        std::cout << (ok ? "  ok    " : "  FAIL  ") << what << "\n";
        if (!ok)
            ++failures;
    }

    // Quick built-in verification of the numerical core; no files involved.
    int self_test()
    {
        using namespace ueant;
        int failures = 0;

        {
            Rng a(7, 3), b(7, 3);
            bool same = true;
            for (int i = 0; i < 64; ++i)
                same = same && a.next_u64() == b.next_u64();
            check(same, "seeded generator replays byte for byte", failures);
        }
        {
            Rng rng(42);
            double worst_rt = 0.0, worst_on = 0.0;
            for (int i = 0; i < 200; ++i)
            {
                const RotationAngles ang(rng.uniform(-180, 180), rng.uniform(-90, 90),
                                         rng.uniform(-180, 180));
                const Rotation r = rotation_matrix(ang);
                worst_on = std::max(worst_on, r.orthonormality_error());
                const Direction d(rng.uniform(1.0, 179.0), rng.uniform(-180, 180), Frame::Gcs);
                const Direction down = transform_direction(r, d, true);
                const Direction up = transform_direction(r, down, false);
                worst_rt = std::max({worst_rt, std::fabs(up.theta_deg() - d.theta_deg()),
                                     std::fabs(wrap_deg(up.phi_deg() - d.phi_deg()))});
            }
            check(worst_on < 1e-12, "rotation matrices stay orthonormal", failures);
            check(worst_rt < 1e-9, "direction transforms round-trip", failures);
        }
        {
            const auto p = PatternParams::directive_default();
            const double front = gain_db(p, Direction(90, 0, Frame::Acs));
            const double back = gain_db(p, Direction(90, 180, Frame::Acs));
            check(front == 5.3 && back == -17.2, "reference pattern boresight and back lobe",
                  failures);
            const auto m = pattern_metrics(p, 0.25);
            check(std::fabs(m.efficiency_db) < 0.5, "reference pattern radiates 0 dB total",
                  failures);
        }
        {
            Rng rng(9);
            const Rotation r = rotation_matrix(RotationAngles(31, -22, 47));
            double worst = 0.0;
            for (int i = 0; i < 200; ++i)
            {
                const Direction d(rng.uniform(1.0, 179.0), rng.uniform(-180, 180), Frame::Gcs);
                const auto psi = polarization_angle(r, d);
                worst = std::max(worst,
                                 std::fabs(psi.cos_psi * psi.cos_psi +
                                           psi.sin_psi * psi.sin_psi - 1.0));
            }
            check(worst < 1e-12, "polarization rotation is unitary", failures);
        }
        {
            const auto table = AttenuationTable::example();
            const double a = table.element_attenuation_db(BlockageScenario::OneHandBrowsing,
                                                          4, 2.0e9);
            check(a == 10.8, "example table holds the browsing-grip anchor", failures);
        }
        {
            DeviceLayout pair;
            pair.kind = LayoutKind::Handheld;
            pair.length_mm = 150;
            pair.width_mm = 70;
            AntennaElement el;
            el.id = 1;
            el.position_mm = {0, -75, 0};
            el.orientation = RotationAngles(-90, 0, 0);
            pair.elements.push_back(el);
            el.id = 2;
            pair.elements.push_back(el);
            UeState state{pair, RotationAngles(), BlockageScenario::FreeSpace, 3.5e9, {}};
            const auto table = AttenuationTable::free_space_only();
            const Direction bore(90, -90, Frame::Gcs);
            const double single = effective_gain_db(state, table, 1, bore);
            const auto combined = combine_coherent(state, table, {{1, 0}, {2, 0}},
                                                   {{1.0, 0.0}, {1.0, 0.0}}, bore);
            const double gain = 10.0 * std::log10(combined.power());
            check(std::fabs(gain - single - 10.0 * std::log10(2.0)) < 0.01,
                  "co-located ports combine to +3.01 dB", failures);
        }

        if (failures > 0)
            throw Error(std::to_string(failures) + " self-test checks failed");
        std::cout << "self-test: all checks passed\n";
        return 0;
    }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"handheld UE antenna pattern, polarization and blockage model"};
    app.set_version_flag("--version", "ueant 0.1.0");
    app.require_subcommand(1);

    CommonOpts common;
    std::string out_path;
    std::string scenario_name = "free_space";
    double cut_theta = 90.0;
    bool raw = false;
    bool normalize = false;

    auto *cut = app.add_subcommand("pattern-cut", "Azimuth gain cut at a fixed theta");
    add_common(cut, common);
    cut->add_option("--out", out_path, "Output CSV path")->required();
    cut->add_option("--theta", cut_theta, "Cut elevation angle in deg [0, 180]");
    cut->add_flag("--raw", raw, "Sample the element pattern in its own frame");
    cut->add_flag("--normalize", normalize, "Shift the cut so its peak sits at 0 dB");
    cut->add_option("--scenario", scenario_name, "Posture for effective gains");
    cut->callback([&] {
        const auto cfg = make_config(common, cut);
        const auto rows = ueant::pattern_cut_export(cfg, cut_theta, raw, normalize,
                                                    ueant::scenario_from_string(scenario_name),
                                                    out_path);
        std::cout << "wrote " << rows << " rows to " << out_path << "\n";
    });

    auto *map = app.add_subcommand("sphere-map", "Per-port effective gain over the sphere");
    add_common(map, common);
    map->add_option("--out", out_path, "Output CSV path")->required();
    map->add_option("--scenario", scenario_name, "Posture for effective gains");
    map->callback([&] {
        const auto cfg = make_config(common, map);
        const auto rows = ueant::sphere_map_export(cfg,
                                                   ueant::scenario_from_string(scenario_name),
                                                   out_path);
        std::cout << "wrote " << rows << " rows to " << out_path << "\n";
    });

    auto *imb = app.add_subcommand("imbalance", "CDF of the per-direction port spread");
    add_common(imb, common);
    imb->add_option("--out", out_path, "Output CSV path")->required();
    imb->add_option("--scenario", scenario_name, "Posture for effective gains");
    imb->callback([&] {
        const auto cfg = make_config(common, imb);
        ueant::ImbalanceStats stats;
        const auto rows = ueant::imbalance_export(cfg,
                                                  ueant::scenario_from_string(scenario_name),
                                                  out_path, &stats);
        std::cout << "wrote " << rows << " rows to " << out_path << "\n";
        std::cout << "imbalance: max " << ueant::format_double(stats.max_db) << " dB, mean "
                  << ueant::format_double(stats.mean_db) << " dB, fraction above 10 dB "
                  << ueant::format_double(stats.fraction_above(10.0)) << "\n";
    });

    auto *mc = app.add_subcommand("blockage-mc", "Monte-Carlo posture and mounting sweep");
    add_common(mc, common);
    mc->add_option("--out", out_path, "Output CSV path")->required();
    mc->callback([&] {
        const auto cfg = make_config(common, mc);
        ueant::McResult res;
        const auto rows = ueant::blockage_mc_export(cfg, out_path, &res);
        std::cout << "wrote " << rows << " rows to " << out_path << "\n";
        for (ueant::BlockageScenario s : ueant::ALL_SCENARIOS)
            std::cout << "  " << ueant::to_string(s) << ": "
                      << res.scenario_counts[static_cast<std::size_t>(s)] << " replications\n";
        std::cout << "mean best serving gain "
                  << ueant::format_double(res.mean_best_serving_dbi) << " dBi\n";
    });

    auto *comb = app.add_subcommand("combine", "Equal-weight coherent port-pair combining");
    add_common(comb, common);
    comb->add_option("--out", out_path, "Output CSV path")->required();
    comb->add_option("--scenario", scenario_name, "Posture for effective gains");
    comb->callback([&] {
        const auto cfg = make_config(common, comb);
        const auto rows = ueant::combine_export(cfg,
                                                ueant::scenario_from_string(scenario_name),
                                                out_path);
        std::cout << "wrote " << rows << " rows to " << out_path << "\n";
    });

    auto *val = app.add_subcommand("validate", "Check a run description and exit");
    add_common(val, common);
    val->callback([&] {
        const auto cfg = make_config(common, val);
        std::cout << "configuration OK: " << cfg.layout.elements.size() << " antennas, "
                  << ueant::format_double(cfg.carrier_hz / 1e9) << " GHz, "
                  << cfg.replications << " replications\n";
    });

    auto *st = app.add_subcommand("self-test", "Run the built-in verification checks");
    st->callback([&] { self_test(); });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    catch (const ueant::ParseError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ueant::ValidationError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ueant::IoError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
