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
#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "ueant/blockage.hpp"
#include "ueant/geometry.hpp"
#include "ueant/layout.hpp"
#include "ueant/pattern.hpp"

namespace ueant
{

    // One UE in the world: the device, its mounting rotation (device frame
    // into the global frame), the active usage posture, the carrier and any
    // per-antenna implementation loss in dB.
    struct UeState
    {
        DeviceLayout layout;
        RotationAngles ue_orientation;
        BlockageScenario scenario = BlockageScenario::FreeSpace;
        double carrier_hz = 3.5e9;
        std::map<int, double> port_loss_db;

        double port_loss_for(int antenna_id) const
        {
            auto it = port_loss_db.find(antenna_id);
            return it == port_loss_db.end() ? 0.0 : it->second;
        }
    };

    // Complex field amplitudes in the global spherical basis.
    struct ComplexFieldPair
    {
        std::complex<double> f_theta{0.0, 0.0};
        std::complex<double> f_phi{0.0, 0.0};

        double power() const { return std::norm(f_theta) + std::norm(f_phi); }
    };

    // One logical port: an antenna location plus a polarization index.
    // Index 0 is the element's nominal slant, index 1 the +90 deg roll of a
    // dual-polarized location.
    struct PortKey
    {
        int antenna_id = 0;
        int polarization = 0;

        bool operator==(const PortKey &o) const
        {
            return antenna_id == o.antenna_id && polarization == o.polarization;
        }
        bool operator<(const PortKey &o) const
        {
            return antenna_id != o.antenna_id ? antenna_id < o.antenna_id
                                              : polarization < o.polarization;
        }
    };

    // Polarized field of one antenna port seen from a global direction.
    // Walks the chain global -> device -> antenna frame, evaluates the
    // element pattern, rotates the polarization basis back up through both
    // frames and applies the scenario and port losses as amplitude scaling.
    // Throws InvalidRange for an unknown antenna id or a polarization index
    // the element does not provide, and PoleDegenerate within 1e-9 deg of a
    // basis pole.
    ComplexFieldPair antenna_field_gcs(const UeState &state, const AttenuationTable &table,
                                       int antenna_id, const Direction &d_gcs,
                                       int polarization = 0);

    // Effective realized gain 10*log10(|F_theta|^2 + |F_phi|^2) of one port,
    // floored at -400 dB. Works at the poles too; the polarized split does
    // not change the total power, so no basis is needed.
    double effective_gain_db(const UeState &state, const AttenuationTable &table,
                             int antenna_id, const Direction &d_gcs, int polarization = 0);

    inline constexpr double GAIN_FLOOR_DB = -400.0;

    // Scalar channel response of one ray into one receive port:
    //   F_rx^T * M * F_tx * exp(j * phase)
    // with M the 2x2 polarization coupling in row-major order
    // (theta->theta, phi->theta, theta->phi, phi->phi).
    std::complex<double> ray_response(const UeState &rx, const AttenuationTable &table,
                                      int rx_antenna_id, const Direction &d_rx_gcs,
                                      const std::array<std::complex<double>, 4> &coupling,
                                      const ComplexFieldPair &tx_field,
                                      double phase_rad = 0.0, int rx_polarization = 0);

    // Coherent weighted sum of port fields. Weights are normalized to unit
    // total power before combining, so the result is the gain of the combined
    // beam, not of a transmit power increase. Throws EmptyInput for no
    // fields, InvalidRange for mismatched lengths or all-zero weights.
    ComplexFieldPair combine_coherent(const std::vector<ComplexFieldPair> &fields,
                                      const std::vector<std::complex<double>> &weights);

    // As above, but evaluates the listed ports of one device at a shared
    // global direction and applies the geometric phase exp(j*k * r . rho) of
    // each antenna position first. Co-located ports combine with zero
    // relative phase at every direction.
    ComplexFieldPair combine_coherent(const UeState &state, const AttenuationTable &table,
                                      const std::vector<PortKey> &ports,
                                      const std::vector<std::complex<double>> &weights,
                                      const Direction &d_gcs);

    // Effective gains of a port list on a regular sphere grid. Directions sit
    // at cell centers, so theta never touches the poles and every cell weight
    // is the exact sin(theta) of its center.
    struct GainGrid
    {
        std::vector<double> theta_deg; // cell centers, ascending
        std::vector<double> phi_deg;   // cell centers, ascending from -180
        std::vector<PortKey> ports;
        // gain_dbi[p][i * phi_deg.size() + j] is port p at (theta_i, phi_j)
        std::vector<std::vector<double>> gain_dbi;

        std::size_t index(std::size_t i_theta, std::size_t i_phi) const
        {
            return i_theta * phi_deg.size() + i_phi;
        }
        double max_gain_dbi() const;
        double min_gain_dbi() const;
    };

    // Sweeps every listed antenna (all of them when active_ids is empty) over
    // the full sphere. Steps must divide 180 and 360 deg evenly; the active
    // selection is validated against the layout and carrier first. Rows are
    // processed in parallel when n_threads > 1; results do not depend on the
    // thread count.
    GainGrid sphere_sweep(const UeState &state, const AttenuationTable &table,
                          double theta_step_deg, double phi_step_deg,
                          const std::vector<int> &active_ids = {}, int n_threads = 1);

    // Per-direction spread between the strongest and weakest port of a grid.
    // Directions are weighted by sin(theta) in the mean and in
    // fraction_above, so the numbers are sphere averages, not grid averages.
    struct ImbalanceStats
    {
        double max_db = 0.0;
        double mean_db = 0.0;
        std::vector<double> delta_db;
        std::vector<double> weight;

        double fraction_above(double threshold_db) const;
    };

    // Throws TooFewAntennas when the grid has fewer than two ports.
    ImbalanceStats imbalance_stats(const GainGrid &grid);

} // namespace ueant
