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

#include "ueant/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ueant/errors.hpp"
#include "ueant/parallel.hpp"

namespace ueant
{

    namespace
    {
        constexpr double SPEED_OF_LIGHT = 299792458.0;
        constexpr double DEG = std::numbers::pi / 180.0;

        const AntennaElement &element_or_throw(const DeviceLayout &layout, int antenna_id)
        {
            const AntennaElement *el = layout.find(antenna_id);
            if (el == nullptr)
                throw InvalidRange("antenna id " + std::to_string(antenna_id) +
                                   " is not part of the layout");
            return *el;
        }

        // [F_theta; F_phi] = [[cos, -sin], [sin, cos]] * [f_theta; f_phi]
        ComplexFieldPair rotate_pol(const PolarizationRotation &psi, const ComplexFieldPair &f)
        {
            return {psi.cos_psi * f.f_theta - psi.sin_psi * f.f_phi,
                    psi.sin_psi * f.f_theta + psi.cos_psi * f.f_phi};
        }
    } // namespace

    ComplexFieldPair antenna_field_gcs(const UeState &state, const AttenuationTable &table,
                                       int antenna_id, const Direction &d_gcs,
                                       int polarization)
    {
        if (d_gcs.frame() != Frame::Gcs)
            throw std::invalid_argument("antenna_field_gcs expects a global-frame direction");
        const AntennaElement &el = element_or_throw(state.layout, antenna_id);
        if (polarization != 0 && polarization != 1)
            throw InvalidRange("polarization index must be 0 or 1");
        if (polarization == 1 && !el.dual_polarized)
            throw InvalidRange("antenna id " + std::to_string(antenna_id) +
                               " has no second polarization");

        const Rotation r_ue = rotation_matrix(state.ue_orientation);
        const RotationAngles mount(el.orientation.alpha_deg, el.orientation.beta_deg,
                                   el.orientation.gamma_deg + 90.0 * polarization);
        const Rotation r_el = rotation_matrix(mount);

        const Direction d_lcs = transform_direction(r_ue, d_gcs, true);
        const Direction d_acs = transform_direction(r_el, d_lcs, true);

        const FieldPair f_acs = field_pair(el.pattern, d_acs);
        const PolarizationRotation psi_el = polarization_angle(r_el, d_lcs);
        const PolarizationRotation psi_ue = polarization_angle(r_ue, d_gcs);

        ComplexFieldPair f{{f_acs.f_theta, 0.0}, {f_acs.f_phi, 0.0}};
        f = rotate_pol(psi_el, f);
        f = rotate_pol(psi_ue, f);

        const double loss_db = table.element_attenuation_db(state.scenario, antenna_id,
                                                            state.carrier_hz) +
                               state.port_loss_for(antenna_id);
        const double scale = std::pow(10.0, -loss_db / 20.0);
        f.f_theta *= scale;
        f.f_phi *= scale;
        return f;
    }

    double effective_gain_db(const UeState &state, const AttenuationTable &table,
                             int antenna_id, const Direction &d_gcs, int polarization)
    {
        // The basis rotations are orthogonal, so the total power needs no
        // polarization split; this keeps the gain defined at the poles.
        if (d_gcs.frame() != Frame::Gcs)
            throw std::invalid_argument("effective_gain_db expects a global-frame direction");
        const AntennaElement &el = element_or_throw(state.layout, antenna_id);
        if (polarization != 0 && polarization != 1)
            throw InvalidRange("polarization index must be 0 or 1");
        if (polarization == 1 && !el.dual_polarized)
            throw InvalidRange("antenna id " + std::to_string(antenna_id) +
                               " has no second polarization");

        const Rotation r_ue = rotation_matrix(state.ue_orientation);
        const RotationAngles mount(el.orientation.alpha_deg, el.orientation.beta_deg,
                                   el.orientation.gamma_deg + 90.0 * polarization);
        const Rotation r_el = rotation_matrix(mount);
        const Direction d_lcs = transform_direction(r_ue, d_gcs, true);
        const Direction d_acs = transform_direction(r_el, d_lcs, true);

        const double loss_db = table.element_attenuation_db(state.scenario, antenna_id,
                                                            state.carrier_hz) +
                               state.port_loss_for(antenna_id);
        return std::max(gain_db(el.pattern, d_acs) - loss_db, GAIN_FLOOR_DB);
    }

    std::complex<double> ray_response(const UeState &rx, const AttenuationTable &table,
                                      int rx_antenna_id, const Direction &d_rx_gcs,
                                      const std::array<std::complex<double>, 4> &coupling,
                                      const ComplexFieldPair &tx_field,
                                      double phase_rad, int rx_polarization)
    {
        const ComplexFieldPair fr = antenna_field_gcs(rx, table, rx_antenna_id, d_rx_gcs,
                                                      rx_polarization);
        const std::complex<double> coupled_theta = coupling[0] * tx_field.f_theta +
                                                   coupling[1] * tx_field.f_phi;
        const std::complex<double> coupled_phi = coupling[2] * tx_field.f_theta +
                                                 coupling[3] * tx_field.f_phi;
        const std::complex<double> response = fr.f_theta * coupled_theta +
                                              fr.f_phi * coupled_phi;
        return response * std::polar(1.0, phase_rad);
    }

    ComplexFieldPair combine_coherent(const std::vector<ComplexFieldPair> &fields,
                                      const std::vector<std::complex<double>> &weights)
    {
        if (fields.empty())
            throw EmptyInput("combine_coherent needs at least one field");
        if (fields.size() != weights.size())
            throw InvalidRange("combine_coherent needs one weight per field");

        double total = 0.0;
        for (const auto &w : weights)
            total += std::norm(w);
        if (!(total > 0.0))
            throw InvalidRange("combining weights are all zero");
        const double scale = 1.0 / std::sqrt(total);

        ComplexFieldPair out;
        for (std::size_t i = 0; i < fields.size(); ++i)
        {
            const std::complex<double> w = weights[i] * scale;
            out.f_theta += w * fields[i].f_theta;
            out.f_phi += w * fields[i].f_phi;
        }
        return out;
    }

    ComplexFieldPair combine_coherent(const UeState &state, const AttenuationTable &table,
                                      const std::vector<PortKey> &ports,
                                      const std::vector<std::complex<double>> &weights,
                                      const Direction &d_gcs)
    {
        if (ports.empty())
            throw EmptyInput("combine_coherent needs at least one port");
        const double k = 2.0 * std::numbers::pi * state.carrier_hz / SPEED_OF_LIGHT;
        const Rotation r_ue = rotation_matrix(state.ue_orientation);
        const Vec3 rho = unit_vector_and_basis(d_gcs).rho_hat;

        std::vector<ComplexFieldPair> fields;
        fields.reserve(ports.size());
        for (const PortKey &port : ports)
        {
            ComplexFieldPair f = antenna_field_gcs(state, table, port.antenna_id, d_gcs,
                                                   port.polarization);
            const AntennaElement &el = element_or_throw(state.layout, port.antenna_id);
            const Vec3 r_m = r_ue.apply(el.position_mm * 1e-3);
            const std::complex<double> phase = std::polar(1.0, k * r_m.dot(rho));
            f.f_theta *= phase;
            f.f_phi *= phase;
            fields.push_back(f);
        }
        return combine_coherent(fields, weights);
    }

    double GainGrid::max_gain_dbi() const
    {
        if (gain_dbi.empty() || gain_dbi.front().empty())
            throw EmptyInput("gain grid is empty");
        double best = GAIN_FLOOR_DB;
        for (const auto &port : gain_dbi)
            for (double g : port)
                best = std::max(best, g);
        return best;
    }

    double GainGrid::min_gain_dbi() const
    {
        if (gain_dbi.empty() || gain_dbi.front().empty())
            throw EmptyInput("gain grid is empty");
        double worst = -GAIN_FLOOR_DB;
        for (const auto &port : gain_dbi)
            for (double g : port)
                worst = std::min(worst, g);
        return worst;
    }

    namespace
    {
        std::size_t cell_count(double span_deg, double step_deg, const char *what)
        {
            if (!(step_deg > 0.0))
                throw InvalidRange(std::string(what) + " step must be positive");
            const double n_real = span_deg / step_deg;
            const auto n = static_cast<std::size_t>(std::llround(n_real));
            if (n == 0 || std::fabs(static_cast<double>(n) * step_deg - span_deg) > 1e-9)
                throw InvalidRange(std::string(what) + " step must divide " +
                                   std::to_string(span_deg) + " deg evenly");
            return n;
        }
    } // namespace

    GainGrid sphere_sweep(const UeState &state, const AttenuationTable &table,
                          double theta_step_deg, double phi_step_deg,
                          const std::vector<int> &active_ids, int n_threads)
    {
        std::vector<int> ids = active_ids;
        if (ids.empty())
            for (const AntennaElement &el : state.layout.elements)
                ids.push_back(el.id);
        if (ids.empty())
            throw EmptyInput("layout has no antennas to sweep");

        const auto violations = validate(state.layout, state.carrier_hz, ids);
        if (!violations.empty())
            throw ValidationError(violations);

        GainGrid grid;
        for (int id : ids)
        {
            grid.ports.push_back({id, 0});
            if (state.layout.find(id)->dual_polarized)
                grid.ports.push_back({id, 1});
        }

        const std::size_t n_theta = cell_count(180.0, theta_step_deg, "theta");
        const std::size_t n_phi = cell_count(360.0, phi_step_deg, "phi");
        grid.theta_deg.resize(n_theta);
        for (std::size_t i = 0; i < n_theta; ++i)
            grid.theta_deg[i] = (static_cast<double>(i) + 0.5) * theta_step_deg;
        grid.phi_deg.resize(n_phi);
        for (std::size_t j = 0; j < n_phi; ++j)
            grid.phi_deg[j] = -180.0 + (static_cast<double>(j) + 0.5) * phi_step_deg;

        grid.gain_dbi.assign(grid.ports.size(), std::vector<double>(n_theta * n_phi, 0.0));

        parallel_for(n_theta, n_threads, [&](std::size_t i) {
            for (std::size_t j = 0; j < n_phi; ++j)
            {
                const Direction d(grid.theta_deg[i], grid.phi_deg[j], Frame::Gcs);
                const std::size_t cell = grid.index(i, j);
                for (std::size_t p = 0; p < grid.ports.size(); ++p)
                    grid.gain_dbi[p][cell] = effective_gain_db(state, table,
                                                               grid.ports[p].antenna_id, d,
                                                               grid.ports[p].polarization);
            }
        });
        return grid;
    }

    double ImbalanceStats::fraction_above(double threshold_db) const
    {
        if (delta_db.empty())
            throw EmptyInput("imbalance stats hold no directions");
        double hit = 0.0;
        double total = 0.0;
        for (std::size_t i = 0; i < delta_db.size(); ++i)
        {
            total += weight[i];
            if (delta_db[i] > threshold_db)
                hit += weight[i];
        }
        return hit / total;
    }

    ImbalanceStats imbalance_stats(const GainGrid &grid)
    {
        if (grid.ports.size() < 2)
            throw TooFewAntennas("imbalance needs at least two ports");
        if (grid.theta_deg.empty() || grid.phi_deg.empty())
            throw EmptyInput("gain grid is empty");

        ImbalanceStats stats;
        stats.delta_db.reserve(grid.theta_deg.size() * grid.phi_deg.size());
        stats.weight.reserve(stats.delta_db.capacity());

        double weighted_sum = 0.0;
        double weight_total = 0.0;
        for (std::size_t i = 0; i < grid.theta_deg.size(); ++i)
        {
            const double w = std::sin(grid.theta_deg[i] * DEG);
            for (std::size_t j = 0; j < grid.phi_deg.size(); ++j)
            {
                const std::size_t cell = grid.index(i, j);
                double hi = grid.gain_dbi[0][cell];
                double lo = hi;
                for (std::size_t p = 1; p < grid.ports.size(); ++p)
                {
                    hi = std::max(hi, grid.gain_dbi[p][cell]);
                    lo = std::min(lo, grid.gain_dbi[p][cell]);
                }
                const double delta = hi - lo;
                stats.delta_db.push_back(delta);
                stats.weight.push_back(w);
                stats.max_db = std::max(stats.max_db, delta);
                weighted_sum += w * delta;
                weight_total += w;
            }
        }
        stats.mean_db = weighted_sum / weight_total;
        return stats;
    }

} // namespace ueant
