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

#include "ueant/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ueant/errors.hpp"

namespace ueant
{

    std::vector<std::string> PatternParams::violations() const
    {
        std::vector<std::string> v;
        if (kind == PatternKind::Isotropic)
            return v;
        if (!(theta_3db_deg > 0.0))
            v.push_back("pattern: theta_3db_deg must be > 0");
        if (!(phi_3db_deg > 0.0))
            v.push_back("pattern: phi_3db_deg must be > 0");
        if (sla_v_db < 0.0)
            v.push_back("pattern: sla_v_db must be >= 0");
        if (a_max_db < 0.0)
            v.push_back("pattern: a_max_db must be >= 0");
        return v;
    }

    double gain_db(const PatternParams &p, const Direction &d_acs)
    {
        if (d_acs.frame() != Frame::Acs)
            throw std::invalid_argument("gain_db: direction must be in the antenna frame");
        if (p.kind == PatternKind::Isotropic)
            return 0.0;

        const double t = (d_acs.theta_deg() - 90.0) / p.theta_3db_deg;
        const double h = d_acs.phi_deg() / p.phi_3db_deg;
        const double att_v = -std::min(12.0 * t * t, p.sla_v_db);
        const double att_h = -std::min(12.0 * h * h, p.a_max_db);
        return p.g_max_dbi - std::min(-(att_v + att_h), p.a_max_db);
    }

    FieldPair field_pair(const PatternParams &p, const Direction &d_acs)
    {
        return {std::sqrt(std::pow(10.0, gain_db(p, d_acs) / 10.0)), 0.0};
    }

    namespace
    {
        // -3 dB beamwidth of a cut sampled at uniform steps, with linear
        // interpolation of the crossing positions. Returns the full span when
        // the cut never drops 3 dB below its maximum.
        double beamwidth_of_cut(const std::vector<double> &angle, const std::vector<double> &gain)
        {
            const double peak = *std::max_element(gain.begin(), gain.end());
            const double level = peak - 3.0;
            const std::size_t i_pk = static_cast<std::size_t>(
                std::max_element(gain.begin(), gain.end()) - gain.begin());

            const auto cross = [&](bool up) -> double {
                if (up)
                {
                    for (std::size_t i = i_pk; i + 1 < gain.size(); ++i)
                        if (gain[i] >= level && gain[i + 1] < level)
                            return angle[i] + (angle[i + 1] - angle[i]) *
                                                  (gain[i] - level) / (gain[i] - gain[i + 1]);
                    return angle.back();
                }
                for (std::size_t i = i_pk; i > 0; --i)
                    if (gain[i] >= level && gain[i - 1] < level)
                        return angle[i] - (angle[i] - angle[i - 1]) *
                                              (gain[i] - level) / (gain[i] - gain[i - 1]);
                return angle.front();
            };
            return cross(true) - cross(false);
        }
    } // namespace

    PatternMetrics pattern_metrics(const PatternParams &p, double quadrature_step_deg)
    {
        if (quadrature_step_deg > 1.0)
            throw QuadratureTooCoarse("pattern_metrics: quadrature step " +
                                      std::to_string(quadrature_step_deg) + " deg exceeds 1 deg");
        if (!(quadrature_step_deg > 0.0))
            throw std::invalid_argument("pattern_metrics: quadrature step must be positive");

        PatternMetrics m;
        if (p.kind == PatternKind::Isotropic)
        {
            m.peak_dbi = 0.0;
            m.hpbw_az_deg = 360.0;
            m.hpbw_el_deg = 180.0;
            m.fbr_db = 0.0;
            m.efficiency_db = 0.0;
            return m;
        }

        // Principal cuts through the boresight, endpoints included.
        const int n_az = std::max(4, static_cast<int>(std::lround(360.0 / quadrature_step_deg)));
        const int n_el = std::max(2, static_cast<int>(std::lround(180.0 / quadrature_step_deg)));
        std::vector<double> az_angle(static_cast<std::size_t>(n_az) + 1), az_gain(az_angle.size());
        std::vector<double> el_angle(static_cast<std::size_t>(n_el) + 1), el_gain(el_angle.size());
        for (std::size_t i = 0; i < az_angle.size(); ++i)
        {
            az_angle[i] = -180.0 + 360.0 * static_cast<double>(i) / n_az;
            az_gain[i] = gain_db(p, Direction(90.0, az_angle[i], Frame::Acs));
        }
        for (std::size_t i = 0; i < el_angle.size(); ++i)
        {
            el_angle[i] = 180.0 * static_cast<double>(i) / n_el;
            el_gain[i] = gain_db(p, Direction(el_angle[i], 0.0, Frame::Acs));
        }

        m.peak_dbi = std::max(*std::max_element(az_gain.begin(), az_gain.end()),
                              *std::max_element(el_gain.begin(), el_gain.end()));
        m.hpbw_az_deg = beamwidth_of_cut(az_angle, az_gain);
        m.hpbw_el_deg = beamwidth_of_cut(el_angle, el_gain);
        m.fbr_db = gain_db(p, Direction(90.0, 0.0, Frame::Acs)) -
                   gain_db(p, Direction(90.0, 180.0, Frame::Acs));

        // Sphere average of the linear gain, midpoint rule on an equiangular
        // grid. Normalizing by the quadrature of unity instead of 4*pi keeps a
        // constant pattern at exactly 0 dB regardless of the step.
        const int nt = n_el, np = n_az;
        double power = 0.0, measure = 0.0;
        for (int i = 0; i < nt; ++i)
        {
            const double theta = (i + 0.5) * 180.0 / nt;
            const double w = std::sin(theta * (3.14159265358979323846 / 180.0));
            double row = 0.0;
            for (int j = 0; j < np; ++j)
            {
                const double phi = -180.0 + (j + 0.5) * 360.0 / np;
                row += std::pow(10.0, gain_db(p, Direction(theta, phi, Frame::Acs)) / 10.0);
            }
            power += w * row;
            measure += w * np;
        }
        m.efficiency_db = 10.0 * std::log10(power / measure);
        return m;
    }

} // namespace ueant
