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
#include "ueant/pattern.hpp"

namespace ueant
{

    enum class LayoutKind
    {
        Handheld,
        Cpe,
        LegacyArray
    };

    const char *to_string(LayoutKind k);

    // One antenna location on the device. Position is in the device frame
    // (x across the width, y along the length, z out of the screen, origin at
    // the device center); orientation rotates the antenna frame into the
    // device frame. A dual-polarized location carries a second pattern with
    // the slant rolled by +90 deg.
    struct AntennaElement
    {
        int id = 0;
        Vec3 position_mm;
        RotationAngles orientation;
        PatternParams pattern;
        bool dual_polarized = false;

        // Element boresight in the device frame (image of the antenna-frame
        // boresight, which lies along +x'').
        Vec3 boresight_lcs() const;
    };

    struct DeviceLayout
    {
        LayoutKind kind = LayoutKind::Handheld;
        double length_mm = 0.0; // along y
        double width_mm = 0.0;  // along x
        double height_mm = 0.0; // along z
        std::vector<AntennaElement> elements;

        const AntennaElement *find(int id) const;
        int element_index(int id) const; // -1 when absent
    };

    // The reference handheld: 150 x 70 mm outline with eight directive
    // elements, four at the corners and four at the edge midpoints, each
    // boresight pointing outward in the device plane.
    //
    //   #1 top-left corner      #2 top-right corner
    //   #8 top-center           #3 right edge midpoint
    //   #7 left edge midpoint   #4 bottom-center
    //   #6 bottom-left corner   #5 bottom-right corner
    DeviceLayout reference_handset();

    // The fixed-wireless panel form factor (0 x 200 x 200 mm). Ships with no
    // antennas; element placement comes from configuration.
    DeviceLayout cpe_reference();

    // The legacy dual-polarized line array with ideal half-wavelength spacing
    // and isotropic elements. n_ports must be 2, 4 or 8; each pair of ports
    // shares one dual-polarized position.
    DeviceLayout legacy_halfwave_array(int n_ports, double carrier_hz);

    // Structural invariants: unique ids, handheld elements on the outline,
    // handheld boresights pointing away from the device center.
    std::vector<std::string> layout_violations(const DeviceLayout &layout);

    // Checks an active-antenna selection against the layout and carrier:
    // unknown ids are violations, and below 1 GHz a handheld may only use
    // antennas #4 and #8. Returns the (possibly empty) list of violations.
    std::vector<std::string> validate(const DeviceLayout &layout, double carrier_hz,
                                      const std::vector<int> &active_ids);

} // namespace ueant
