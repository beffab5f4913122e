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

#include <string>
#include <vector>

#include "ueant/geometry.hpp"

namespace ueant
{

    enum class PatternKind
    {
        Directive,
        Isotropic
    };

    // Reference element pattern parameters. The directive kind is the
    // parabolic-attenuation shape with boresight at (theta'' = 90, phi'' = 0);
    // the isotropic kind evaluates to 0 dBi everywhere and ignores the rest.
    struct PatternParams
    {
        PatternKind kind = PatternKind::Directive;
        double g_max_dbi = 5.3;
        double theta_3db_deg = 125.0;
        double phi_3db_deg = 125.0;
        double sla_v_db = 22.5;
        double a_max_db = 22.5;

        static PatternParams directive_default() { return {}; }
        static PatternParams isotropic() { return {PatternKind::Isotropic, 0.0, 0.0, 0.0, 0.0, 0.0}; }

        std::vector<std::string> violations() const;
    };

    // Linear field amplitudes in the two spherical polarization components;
    // f_theta^2 + f_phi^2 is the linear directional gain.
    struct FieldPair
    {
        double f_theta = 0.0;
        double f_phi = 0.0;
    };

    // Directional gain in dBi at a direction in the antenna frame.
    double gain_db(const PatternParams &p, const Direction &d_acs);

    // Polarized field amplitudes; the reference pattern carries all its gain
    // in the theta component.
    FieldPair field_pair(const PatternParams &p, const Direction &d_acs);

    struct PatternMetrics
    {
        double peak_dbi = 0.0;
        double hpbw_az_deg = 0.0;
        double hpbw_el_deg = 0.0;
        double fbr_db = 0.0;
        double efficiency_db = 0.0;
    };

    // Sweeps the pattern on a dense grid: peak gain, -3 dB beamwidths of the
    // two principal cuts, front-to-back ratio and the sphere-average radiated
    // power in dB (0 dB = lossless redistribution). Throws QuadratureTooCoarse
    // for steps above 1 deg.
    PatternMetrics pattern_metrics(const PatternParams &p, double quadrature_step_deg = 0.25);

} // namespace ueant
