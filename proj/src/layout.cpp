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

#include "ueant/layout.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ueant/errors.hpp"

namespace ueant
{

    namespace
    {
        constexpr double SPEED_OF_LIGHT = 299792458.0; // m/s
        constexpr double OUTLINE_TOL_MM = 1.0;
        constexpr double SUB_1GHZ = 1e9;
    } // namespace

    const char *to_string(LayoutKind k)
    {
        switch (k)
        {
        case LayoutKind::Handheld:
            return "handheld";
        case LayoutKind::Cpe:
            return "cpe";
        default:
            return "legacy_array";
        }
    }

    Vec3 AntennaElement::boresight_lcs() const
    {
        return rotation_matrix(orientation).apply({1.0, 0.0, 0.0});
    }

    const AntennaElement *DeviceLayout::find(int id) const
    {
        const int i = element_index(id);
        return i < 0 ? nullptr : &elements[static_cast<std::size_t>(i)];
    }

    int DeviceLayout::element_index(int id) const
    {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i].id == id)
                return static_cast<int>(i);
        return -1;
    }

    DeviceLayout reference_handset()
    {
        DeviceLayout layout;
        layout.kind = LayoutKind::Handheld;
        layout.length_mm = 150.0;
        layout.width_mm = 70.0;
        layout.height_mm = 0.0;

        const double hx = layout.width_mm / 2.0;  // 35 mm
        const double hy = layout.length_mm / 2.0; // 75 mm
        const std::pair<int, Vec3> spots[] = {
            {1, {-hx, hy, 0.0}},  // top-left corner
            {2, {hx, hy, 0.0}},   // top-right corner
            {3, {hx, 0.0, 0.0}},  // right edge midpoint
            {4, {0.0, -hy, 0.0}}, // bottom-center
            {5, {hx, -hy, 0.0}},  // bottom-right corner
            {6, {-hx, -hy, 0.0}}, // bottom-left corner
            {7, {-hx, 0.0, 0.0}}, // left edge midpoint
            {8, {0.0, hy, 0.0}},  // top-center
        };
        for (const auto &[id, pos] : spots)
        {
            AntennaElement e;
            e.id = id;
            e.position_mm = pos;
            const double outward_az = std::atan2(pos.y, pos.x) * (180.0 / 3.14159265358979323846);
            e.orientation = RotationAngles(outward_az, 0.0, 0.0);
            e.pattern = PatternParams::directive_default();
            layout.elements.push_back(e);
        }
        return layout;
    }

    DeviceLayout cpe_reference()
    {
        DeviceLayout layout;
        layout.kind = LayoutKind::Cpe;
        layout.length_mm = 0.0;
        layout.width_mm = 200.0;
        layout.height_mm = 200.0;
        return layout;
    }

    DeviceLayout legacy_halfwave_array(int n_ports, double carrier_hz)
    {
        if (n_ports != 2 && n_ports != 4 && n_ports != 8)
            throw InvalidPortCount("legacy_halfwave_array: n_ports must be 2, 4 or 8, got " +
                                   std::to_string(n_ports));
        if (!(carrier_hz > 0.0))
            throw InvalidRange("legacy_halfwave_array: carrier must be positive");

        DeviceLayout layout;
        layout.kind = LayoutKind::LegacyArray;

        const int n_pos = n_ports / 2;
        const double spacing_mm = SPEED_OF_LIGHT / (2.0 * carrier_hz) * 1000.0;
        for (int i = 0; i < n_pos; ++i)
        {
            AntennaElement e;
            e.id = i + 1;
            e.position_mm = {(i - (n_pos - 1) / 2.0) * spacing_mm, 0.0, 0.0};
            e.pattern = PatternParams::isotropic();
            e.dual_polarized = true;
            layout.elements.push_back(e);
        }
        return layout;
    }

    namespace
    {
        // Distance from a point to the rectangle outline |x| = hx, |y| = hy.
        double outline_distance_mm(const Vec3 &p, double hx, double hy)
        {
            const double dx = std::abs(p.x) - hx;
            const double dy = std::abs(p.y) - hy;
            const double in_plane = (dx > 0.0 || dy > 0.0)
                                        ? std::hypot(std::max(dx, 0.0), std::max(dy, 0.0))
                                        : -std::max(dx, dy);
            return std::hypot(in_plane, p.z);
        }
    } // namespace

    std::vector<std::string> layout_violations(const DeviceLayout &layout)
    {
        std::vector<std::string> v;

        std::set<int> seen;
        for (const auto &e : layout.elements)
        {
            if (!seen.insert(e.id).second)
                v.push_back("layout: duplicate antenna id " + std::to_string(e.id));
            for (const auto &pv : e.pattern.violations())
                v.push_back("antenna " + std::to_string(e.id) + ": " + pv);
        }

        if (layout.kind == LayoutKind::Handheld)
        {
            const double hx = layout.width_mm / 2.0, hy = layout.length_mm / 2.0;
            for (const auto &e : layout.elements)
            {
                if (outline_distance_mm(e.position_mm, hx, hy) > OUTLINE_TOL_MM)
                    v.push_back("antenna " + std::to_string(e.id) +
                                ": position is not on the device outline");
                if (e.boresight_lcs().dot(e.position_mm) <= 0.0)
                    v.push_back("antenna " + std::to_string(e.id) +
                                ": boresight does not point outward from the device center");
            }
        }
        else if (layout.kind == LayoutKind::Cpe)
        {
            const double hx = layout.width_mm / 2.0, hz = layout.height_mm / 2.0;
            for (const auto &e : layout.elements)
            {
                if (std::abs(e.position_mm.y) > OUTLINE_TOL_MM ||
                    std::abs(e.position_mm.x) > hx + OUTLINE_TOL_MM ||
                    std::abs(e.position_mm.z) > hz + OUTLINE_TOL_MM)
                    v.push_back("antenna " + std::to_string(e.id) + ": position is off the panel");
            }
        }
        return v;
    }

    std::vector<std::string> validate(const DeviceLayout &layout, double carrier_hz,
                                      const std::vector<int> &active_ids)
    {
        std::vector<std::string> v;
        for (int id : active_ids)
            if (!layout.find(id))
                v.push_back("active antenna id " + std::to_string(id) + " is not in the layout");

        if (layout.kind == LayoutKind::Handheld && carrier_hz < SUB_1GHZ)
            for (int id : active_ids)
                if (id != 4 && id != 8 && layout.find(id))
                    v.push_back("antenna id " + std::to_string(id) +
                                " not usable below 1 GHz (only #4 and #8 are)");
        return v;
    }

} // namespace ueant
