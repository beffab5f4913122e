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

#include "ueant/simrun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <thread>

#include "ueant/csv.hpp"
#include "ueant/errors.hpp"
#include "ueant/parallel.hpp"
#include "ueant/rng.hpp"

namespace ueant
{

    namespace
    {
        constexpr double DEG = std::numbers::pi / 180.0;

        // Seed substream layout: every replication owns a block of eight
        // purpose streams, so draws never depend on thread count or on which
        // features are enabled.
        constexpr std::uint64_t STREAMS_PER_REP = 8;
        constexpr std::uint64_t STREAM_SCENARIO = 0;
        constexpr std::uint64_t STREAM_ORIENTATION = 1;
        constexpr std::uint64_t STREAM_PORT_LOSS = 2;

        int resolve_threads(int configured)
        {
            if (configured > 0)
                return configured;
            const unsigned hw = std::thread::hardware_concurrency();
            return hw == 0 ? 1 : static_cast<int>(hw);
        }

        std::vector<double> grid_centers(double start, double span, double step)
        {
            const auto n = static_cast<std::size_t>(std::llround(span / step));
            std::vector<double> out(n);
            for (std::size_t i = 0; i < n; ++i)
                out[i] = start + (static_cast<double>(i) + 0.5) * step;
            return out;
        }

        std::string port_column(const PortKey &p)
        {
            return "ant" + std::to_string(p.antenna_id) + "_p" +
                   std::to_string(p.polarization) + "_dbi";
        }

        RotationAngles draw_orientation(Rng &rng)
        {
            const double alpha = rng.uniform(-180.0, 180.0);
            const double sin_beta = rng.uniform(-1.0, 1.0);
            const double beta = std::asin(std::clamp(sin_beta, -1.0, 1.0)) / DEG;
            const double gamma = rng.uniform(-180.0, 180.0);
            return RotationAngles(alpha, beta, gamma);
        }

        McRecord run_replication(const SimConfig &cfg, const std::vector<int> &ids,
                                 const std::vector<PortKey> &ports, std::size_t rep)
        {
            const std::uint64_t block = static_cast<std::uint64_t>(rep) * STREAMS_PER_REP;
            Rng scenario_rng(cfg.seed, block + STREAM_SCENARIO);
            Rng orientation_rng(cfg.seed, block + STREAM_ORIENTATION);
            Rng loss_rng(cfg.seed, block + STREAM_PORT_LOSS);

            McRecord rec;
            rec.replication = static_cast<int>(rep);
            rec.scenario = sample_scenario(cfg.probabilities, scenario_rng);
            rec.orientation = cfg.orientation.uniform_random ? draw_orientation(orientation_rng)
                                                             : cfg.orientation.fixed;

            const auto losses = port_imbalance_draw(cfg.port_loss.enabled, cfg.port_loss.lo_db,
                                                    cfg.port_loss.hi_db,
                                                    static_cast<int>(ids.size()), loss_rng);
            UeState state{cfg.layout, rec.orientation, rec.scenario, cfg.carrier_hz, {}};
            for (std::size_t i = 0; i < ids.size(); ++i)
                state.port_loss_db[ids[i]] = losses[i];

            const Direction serving(cfg.serving_theta_deg, cfg.serving_phi_deg, Frame::Gcs);
            rec.serving_gain_dbi.reserve(ports.size());
            double best = GAIN_FLOOR_DB;
            for (const PortKey &p : ports)
            {
                const double g = effective_gain_db(state, cfg.table, p.antenna_id, serving,
                                                   p.polarization);
                rec.serving_gain_dbi.push_back(g);
                best = std::max(best, g);
            }
            rec.best_serving_gain_dbi = best;

            if (ports.size() >= 2)
            {
                const GainGrid grid = sphere_sweep(state, cfg.table, cfg.probe_step.theta_deg,
                                                   cfg.probe_step.phi_deg, ids, 1);
                const ImbalanceStats stats = imbalance_stats(grid);
                rec.imbalance_max_db = stats.max_db;
                rec.imbalance_frac_above_10db = stats.fraction_above(10.0);
            }
            return rec;
        }
    } // namespace

    std::vector<PortKey> ports_for(const SimConfig &cfg)
    {
        std::vector<PortKey> ports;
        for (int id : cfg.active_ids())
        {
            const AntennaElement *el = cfg.layout.find(id);
            if (el == nullptr)
                throw InvalidRange("antenna id " + std::to_string(id) +
                                   " is not part of the layout");
            ports.push_back({id, 0});
            if (el->dual_polarized)
                ports.push_back({id, 1});
        }
        return ports;
    }

    UeState base_state(const SimConfig &cfg, BlockageScenario scenario)
    {
        return {cfg.layout, cfg.orientation.fixed, scenario, cfg.carrier_hz, {}};
    }

    McResult monte_carlo_run(const SimConfig &cfg)
    {
        const auto ids = cfg.active_ids();
        McResult res;
        res.ports = ports_for(cfg);
        res.records.resize(static_cast<std::size_t>(cfg.replications));

        parallel_for(res.records.size(), resolve_threads(cfg.threads), [&](std::size_t r) {
            res.records[r] = run_replication(cfg, ids, res.ports, r);
        });

        double sum = 0.0;
        for (const McRecord &rec : res.records)
        {
            res.scenario_counts[static_cast<std::size_t>(rec.scenario)] += 1;
            sum += rec.best_serving_gain_dbi;
        }
        res.mean_best_serving_dbi = sum / static_cast<double>(res.records.size());
        return res;
    }

    std::size_t pattern_cut_export(const SimConfig &cfg, double theta_deg, bool raw,
                                   bool normalize, BlockageScenario scenario,
                                   const std::string &path)
    {
        if (!(theta_deg >= 0.0 && theta_deg <= 180.0))
            throw InvalidRange("cut theta must lie in [0, 180] deg");

        const double step = cfg.map_step.phi_deg;
        const auto n = static_cast<std::size_t>(std::llround(360.0 / step));
        std::vector<double> phis(n);
        for (std::size_t j = 0; j < n; ++j)
            phis[j] = -180.0 + static_cast<double>(j) * step;

        CsvTable t;
        if (raw)
        {
            const int first_id = cfg.active_ids().front();
            const AntennaElement *el = cfg.layout.find(first_id);
            if (el == nullptr)
                throw InvalidRange("antenna id " + std::to_string(first_id) +
                                   " is not part of the layout");
            t.header = {"theta_deg", "phi_deg", "gain_dbi", "f_theta", "f_phi"};
            std::vector<double> gains(n);
            for (std::size_t j = 0; j < n; ++j)
                gains[j] = gain_db(el->pattern, Direction(theta_deg, phis[j], Frame::Acs));
            const double shift = normalize ? *std::max_element(gains.begin(), gains.end()) : 0.0;
            for (std::size_t j = 0; j < n; ++j)
            {
                const double g = gains[j] - shift;
                const FieldPair f = field_pair(el->pattern,
                                               Direction(theta_deg, phis[j], Frame::Acs));
                const double fscale = std::pow(10.0, -shift / 20.0);
                t.rows.push_back({format_double(theta_deg), format_double(phis[j]),
                                  format_double(g), format_double(f.f_theta * fscale),
                                  format_double(f.f_phi * fscale)});
            }
        }
        else
        {
            const UeState state = base_state(cfg, scenario);
            const auto ports = ports_for(cfg);
            t.header = {"theta_deg", "phi_deg"};
            for (const PortKey &p : ports)
                t.header.push_back(port_column(p));

            std::vector<std::vector<double>> gains(ports.size(), std::vector<double>(n));
            double peak = GAIN_FLOOR_DB;
            for (std::size_t j = 0; j < n; ++j)
            {
                const Direction d(theta_deg, phis[j], Frame::Gcs);
                for (std::size_t p = 0; p < ports.size(); ++p)
                {
                    gains[p][j] = effective_gain_db(state, cfg.table, ports[p].antenna_id, d,
                                                    ports[p].polarization);
                    peak = std::max(peak, gains[p][j]);
                }
            }
            const double shift = normalize ? peak : 0.0;
            for (std::size_t j = 0; j < n; ++j)
            {
                std::vector<std::string> row = {format_double(theta_deg),
                                                format_double(phis[j])};
                for (std::size_t p = 0; p < ports.size(); ++p)
                    row.push_back(format_double(gains[p][j] - shift));
                t.rows.push_back(std::move(row));
            }
        }
        write_csv(path, t);
        return t.rows.size();
    }

    std::size_t sphere_map_export(const SimConfig &cfg, BlockageScenario scenario,
                                  const std::string &path)
    {
        const UeState state = base_state(cfg, scenario);
        const GainGrid grid = sphere_sweep(state, cfg.table, cfg.map_step.theta_deg,
                                           cfg.map_step.phi_deg, cfg.active_ids(),
                                           resolve_threads(cfg.threads));
        CsvTable t;
        t.header = {"theta_deg", "phi_deg"};
        for (const PortKey &p : grid.ports)
            t.header.push_back(port_column(p));
        t.rows.reserve(grid.theta_deg.size() * grid.phi_deg.size());
        for (std::size_t i = 0; i < grid.theta_deg.size(); ++i)
            for (std::size_t j = 0; j < grid.phi_deg.size(); ++j)
            {
                std::vector<std::string> row = {format_double(grid.theta_deg[i]),
                                                format_double(grid.phi_deg[j])};
                const std::size_t cell = grid.index(i, j);
                for (std::size_t p = 0; p < grid.ports.size(); ++p)
                    row.push_back(format_double(grid.gain_dbi[p][cell]));
                t.rows.push_back(std::move(row));
            }
        write_csv(path, t);
        return t.rows.size();
    }

    std::size_t imbalance_export(const SimConfig &cfg, BlockageScenario scenario,
                                 const std::string &path, ImbalanceStats *stats_out)
    {
        const UeState state = base_state(cfg, scenario);
        const GainGrid grid = sphere_sweep(state, cfg.table, cfg.map_step.theta_deg,
                                           cfg.map_step.phi_deg, cfg.active_ids(),
                                           resolve_threads(cfg.threads));
        const ImbalanceStats stats = imbalance_stats(grid);
        if (stats_out != nullptr)
            *stats_out = stats;

        std::vector<std::size_t> order(stats.delta_db.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return stats.delta_db[a] < stats.delta_db[b];
        });
        double total = 0.0;
        for (double w : stats.weight)
            total += w;

        CsvTable t;
        t.header = {"delta_db", "cdf"};
        double cum = 0.0;
        for (std::size_t k = 0; k < order.size(); ++k)
        {
            cum += stats.weight[order[k]];
            const double value = stats.delta_db[order[k]];
            const bool last_of_tie = k + 1 == order.size() ||
                                     stats.delta_db[order[k + 1]] != value;
            if (last_of_tie)
                t.rows.push_back({format_double(value), format_double(cum / total)});
        }
        write_csv(path, t);
        return t.rows.size();
    }

    std::size_t blockage_mc_export(const SimConfig &cfg, const std::string &path,
                                   McResult *result_out)
    {
        const McResult res = monte_carlo_run(cfg);
        if (result_out != nullptr)
            *result_out = res;

        CsvTable t;
        t.header = {"replication", "scenario", "alpha_deg", "beta_deg", "gamma_deg"};
        for (const PortKey &p : res.ports)
            t.header.push_back(port_column(p));
        t.header.push_back("best_dbi");
        t.header.push_back("imb_max_db");
        t.header.push_back("imb_frac_gt10db");

        t.rows.reserve(res.records.size());
        for (const McRecord &rec : res.records)
        {
            std::vector<std::string> row = {std::to_string(rec.replication),
                                            to_string(rec.scenario),
                                            format_double(rec.orientation.alpha_deg),
                                            format_double(rec.orientation.beta_deg),
                                            format_double(rec.orientation.gamma_deg)};
            for (double g : rec.serving_gain_dbi)
                row.push_back(format_double(g));
            row.push_back(format_double(rec.best_serving_gain_dbi));
            row.push_back(format_double(rec.imbalance_max_db));
            row.push_back(format_double(rec.imbalance_frac_above_10db));
            t.rows.push_back(std::move(row));
        }
        write_csv(path, t);
        return t.rows.size();
    }

    std::size_t combine_export(const SimConfig &cfg, BlockageScenario scenario,
                               const std::string &path)
    {
        const UeState state = base_state(cfg, scenario);
        const auto ports = ports_for(cfg);
        if (ports.size() < 2)
            throw TooFewAntennas("combining needs at least two ports");

        std::vector<std::pair<PortKey, PortKey>> pairs;
        for (std::size_t a = 0; a < ports.size(); ++a)
            for (std::size_t b = a + 1; b < ports.size(); ++b)
                pairs.emplace_back(ports[a], ports[b]);

        const auto thetas = grid_centers(0.0, 180.0, cfg.map_step.theta_deg);
        const auto phis = grid_centers(-180.0, 360.0, cfg.map_step.phi_deg);
        const Direction serving(cfg.serving_theta_deg, cfg.serving_phi_deg, Frame::Gcs);
        const std::vector<std::complex<double>> weights = {{1.0, 0.0}, {1.0, 0.0}};

        std::vector<double> peak(pairs.size());
        std::vector<double> at_serving(pairs.size());
        parallel_for(pairs.size(), resolve_threads(cfg.threads), [&](std::size_t k) {
            const std::vector<PortKey> pair = {pairs[k].first, pairs[k].second};
            double best = 0.0;
            for (double th : thetas)
                for (double ph : phis)
                {
                    const Direction d(th, ph, Frame::Gcs);
                    best = std::max(best,
                                    combine_coherent(state, cfg.table, pair, weights, d).power());
                }
            peak[k] = best > 0.0 ? 10.0 * std::log10(best) : GAIN_FLOOR_DB;
            const double sp = combine_coherent(state, cfg.table, pair, weights, serving).power();
            at_serving[k] = sp > 0.0 ? 10.0 * std::log10(sp) : GAIN_FLOOR_DB;
        });

        CsvTable t;
        t.header = {"ant_a", "pol_a", "ant_b", "pol_b", "peak_dbi", "serving_dbi"};
        for (std::size_t k = 0; k < pairs.size(); ++k)
            t.rows.push_back({std::to_string(pairs[k].first.antenna_id),
                              std::to_string(pairs[k].first.polarization),
                              std::to_string(pairs[k].second.antenna_id),
                              std::to_string(pairs[k].second.polarization),
                              format_double(peak[k]), format_double(at_serving[k])});
        write_csv(path, t);
        return t.rows.size();
    }

} // namespace ueant
