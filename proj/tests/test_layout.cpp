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
#include <set>

#include <doctest.h>

#include "ueant/errors.hpp"
#include "ueant/layout.hpp"

using namespace ueant;

TEST_CASE("reference handset has the eight documented spots")
{
    const DeviceLayout h = reference_handset();
    CHECK(h.kind == LayoutKind::Handheld);
    CHECK(h.length_mm == 150.0);
    CHECK(h.width_mm == 70.0);
    REQUIRE(h.elements.size() == 8);

    const auto at = [&](int id) { return h.find(id)->position_mm; };
    CHECK(at(1).x == -35.0);
    CHECK(at(1).y == 75.0);
    CHECK(at(2).x == 35.0);
    CHECK(at(2).y == 75.0);
    CHECK(at(3).x == 35.0);
    CHECK(at(3).y == 0.0);
    CHECK(at(4).x == 0.0);
    CHECK(at(4).y == -75.0);
    CHECK(at(5).x == 35.0);
    CHECK(at(5).y == -75.0);
    CHECK(at(6).x == -35.0);
    CHECK(at(6).y == -75.0);
    CHECK(at(7).x == -35.0);
    CHECK(at(7).y == 0.0);
    CHECK(at(8).x == 0.0);
    CHECK(at(8).y == 75.0);
    for (const auto &el : h.elements)
        CHECK(el.position_mm.z == 0.0);
}

TEST_CASE("every handset element points outward in the device plane")
{
    const DeviceLayout h = reference_handset();
    for (const auto &el : h.elements)
    {
        CHECK(el.orientation.beta_deg == 0.0);
        CHECK(el.orientation.gamma_deg == 0.0);
        CHECK(el.orientation.alpha_deg ==
              doctest::Approx(wrap_deg(std::atan2(el.position_mm.y, el.position_mm.x) * 180.0 /
                                       std::acos(-1.0)))
                  .epsilon(1e-12));

        const Vec3 b = el.boresight_lcs();
        CHECK(b.dot(el.position_mm) > 0.0);
        CHECK(std::fabs(b.z) < 1e-15);
        CHECK(!el.dual_polarized);
        CHECK(el.pattern.kind == PatternKind::Directive);
    }
    CHECK(layout_violations(h).empty());
}

TEST_CASE("element lookup by id")
{
    const DeviceLayout h = reference_handset();
    CHECK(h.find(4) != nullptr);
    CHECK(h.find(4)->id == 4);
    CHECK(h.find(9) == nullptr);
    CHECK(h.element_index(8) == 7);
    CHECK(h.element_index(0) == -1);
}

TEST_CASE("structure checks flag duplicates, stray spots and inward boresights")
{
    DeviceLayout h = reference_handset();
    h.elements[1].id = 1;
    CHECK(!layout_violations(h).empty());

    h = reference_handset();
    h.elements[0].position_mm = {10.0, 10.0, 0.0}; // off the outline
    CHECK(!layout_violations(h).empty());

    h = reference_handset();
    h.elements[2].orientation = RotationAngles(180, 0, 0); // #3 pointing inward
    CHECK(!layout_violations(h).empty());
}

TEST_CASE("fixed-wireless panel ships empty")
{
    const DeviceLayout c = cpe_reference();
    CHECK(c.kind == LayoutKind::Cpe);
    CHECK(c.length_mm == 0.0);
    CHECK(c.width_mm == 200.0);
    CHECK(c.height_mm == 200.0);
    CHECK(c.elements.empty());
}

TEST_CASE("legacy array spaces dual-polarized positions by half a wavelength")
{
    const double f = 3.5e9;
    const DeviceLayout a = legacy_halfwave_array(8, f);
    CHECK(a.kind == LayoutKind::LegacyArray);
    REQUIRE(a.elements.size() == 4); // one dual-polarized position per port pair
    const double lambda_mm = 299792458.0 / f * 1000.0;
    for (std::size_t i = 1; i < a.elements.size(); ++i)
        CHECK(a.elements[i].position_mm.x - a.elements[i - 1].position_mm.x ==
              doctest::Approx(lambda_mm / 2.0).epsilon(1e-12));
    for (const auto &el : a.elements)
    {
        CHECK(el.dual_polarized);
        CHECK(el.pattern.kind == PatternKind::Isotropic);
    }

    // The line is centered on the device origin.
    double sum = 0.0;
    for (const auto &el : a.elements)
        sum += el.position_mm.x;
    CHECK(std::fabs(sum) < 1e-9);

    CHECK(legacy_halfwave_array(2, f).elements.size() == 1);
    CHECK(legacy_halfwave_array(4, f).elements.size() == 2);
    CHECK_THROWS_AS(legacy_halfwave_array(3, f), InvalidPortCount);
    CHECK_THROWS_AS(legacy_halfwave_array(16, f), InvalidPortCount);
    CHECK_THROWS_AS(legacy_halfwave_array(0, f), InvalidPortCount);
}

TEST_CASE("selections below 1 GHz are limited to the two low-band spots")
{
    const DeviceLayout h = reference_handset();
    CHECK(validate(h, 0.9e9, {4, 8}).empty());
    CHECK(validate(h, 0.9e9, {4}).empty());
    CHECK(!validate(h, 0.9e9, {1, 4, 8}).empty());
    CHECK(!validate(h, 0.7e9, {3}).empty());
    // At and above 1 GHz every spot is usable.
    CHECK(validate(h, 1.0e9, {1, 2, 3, 4, 5, 6, 7, 8}).empty());
    CHECK(validate(h, 3.5e9, {1, 2, 3, 4, 5, 6, 7, 8}).empty());
}

TEST_CASE("unknown ids are reported against any carrier")
{
    const DeviceLayout h = reference_handset();
    CHECK(!validate(h, 3.5e9, {9}).empty());
    CHECK(!validate(h, 0.9e9, {4, 99}).empty());
}
