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

#include <doctest.h>

#include "ueant/errors.hpp"
#include "ueant/geometry.hpp"
#include "ueant/rng.hpp"

using namespace ueant;

TEST_CASE("angles wrap into [-180, 180)")
{
    CHECK(wrap_deg(0.0) == 0.0);
    CHECK(wrap_deg(180.0) == -180.0);
    CHECK(wrap_deg(-180.0) == -180.0);
    CHECK(wrap_deg(540.0) == -180.0);
    CHECK(wrap_deg(359.0) == doctest::Approx(-1.0));
    CHECK(wrap_deg(-190.0) == doctest::Approx(170.0));
}

TEST_CASE("directions reject invalid colatitudes and clean up poles")
{
    CHECK_THROWS_AS(Direction(-0.1, 0.0, Frame::Gcs), std::invalid_argument);
    CHECK_THROWS_AS(Direction(180.1, 0.0, Frame::Gcs), std::invalid_argument);
    CHECK(Direction(0.0, 123.0, Frame::Gcs).phi_deg() == 0.0);
    CHECK(Direction(180.0, -77.0, Frame::Gcs).phi_deg() == 0.0);
    CHECK(Direction(90.0, 270.0, Frame::Gcs).phi_deg() == doctest::Approx(-90.0));
}

TEST_CASE("axis rotations act as expected on the basis vectors")
{
    const Vec3 x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    const auto close = [](const Vec3 &a, const Vec3 &b) {
        return (a - b).norm() < 1e-15;
    };
    CHECK(close(Rotation::about_z(90).apply(x), y));
    CHECK(close(Rotation::about_x(90).apply(y), z));
    CHECK(close(Rotation::about_y(90).apply(z), x));
    CHECK(close(Rotation::about_z(-90).apply(y), x));
}

TEST_CASE("composed mounting rotation follows the z-y-x convention")
{
    // alpha about z first, then beta about the new y, then gamma about the
    // newest x; as matrices that is R_z * R_y * R_x.
    const RotationAngles a(30, 40, 50);
    const Rotation lhs = rotation_matrix(a);
    const Rotation rhs = Rotation::about_z(30) * Rotation::about_y(40) * Rotation::about_x(50);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(lhs.at(r, c) == doctest::Approx(rhs.at(r, c)).epsilon(1e-15));
}

TEST_CASE("random mounting rotations are proper and invert exactly")
{
    Rng rng(101);
    for (int i = 0; i < 300; ++i)
    {
        const RotationAngles a(rng.uniform(-180, 180), rng.uniform(-90, 90),
                               rng.uniform(-180, 180));
        const Rotation r = rotation_matrix(a);
        CHECK(r.orthonormality_error() < 1e-12);
        CHECK(r.det() == doctest::Approx(1.0).epsilon(1e-12));

        const Vec3 v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Vec3 back = r.apply_inverse(r.apply(v));
        CHECK((back - v).norm() < 1e-13);
    }
}

TEST_CASE("direction transforms step frames and round-trip below 1e-9 deg")
{
    Rng rng(202);
    for (int i = 0; i < 300; ++i)
    {
        const RotationAngles a(rng.uniform(-180, 180), rng.uniform(-90, 90),
                               rng.uniform(-180, 180));
        const Rotation r = rotation_matrix(a);
        const Direction d(rng.uniform(0.5, 179.5), rng.uniform(-180, 180), Frame::Gcs);

        const Direction down = transform_direction(r, d, true);
        CHECK(down.frame() == Frame::Lcs);
        const Direction up = transform_direction(r, down, false);
        CHECK(up.frame() == Frame::Gcs);

        CHECK(std::fabs(up.theta_deg() - d.theta_deg()) < 1e-9);
        CHECK(std::fabs(wrap_deg(up.phi_deg() - d.phi_deg())) < 1e-9);
    }
}

TEST_CASE("frame tags saturate at the chain ends")
{
    const Rotation r = rotation_matrix(RotationAngles(10, 20, 30));
    const Direction acs(45, 45, Frame::Acs);
    CHECK(transform_direction(r, acs, false).frame() == Frame::Lcs);
    CHECK(transform_direction(r, transform_direction(r, acs, false), false).frame() ==
          Frame::Gcs);

    const Direction gcs(45, 45, Frame::Gcs);
    const Direction lcs = transform_direction(r, gcs, true);
    CHECK(lcs.frame() == Frame::Lcs);
    CHECK(transform_direction(r, lcs, true).frame() == Frame::Acs);
}

TEST_CASE("identity rotation leaves directions untouched")
{
    const Direction d(72.5, -31.25, Frame::Gcs);
    const Direction out = transform_direction(Rotation::identity(), d, true);
    CHECK(out.theta_deg() == doctest::Approx(72.5).epsilon(1e-15));
    CHECK(out.phi_deg() == doctest::Approx(-31.25).epsilon(1e-15));
}

TEST_CASE("spherical basis is right-handed and orthonormal")
{
    Rng rng(303);
    for (int i = 0; i < 100; ++i)
    {
        const Direction d(rng.uniform(1, 179), rng.uniform(-180, 180), Frame::Gcs);
        const SphericalBasis b = unit_vector_and_basis(d);
        CHECK(std::fabs(b.rho_hat.norm() - 1.0) < 1e-14);
        CHECK(std::fabs(b.theta_hat.norm() - 1.0) < 1e-14);
        CHECK(std::fabs(b.phi_hat.norm() - 1.0) < 1e-14);
        CHECK(std::fabs(b.rho_hat.dot(b.theta_hat)) < 1e-14);
        CHECK(std::fabs(b.rho_hat.dot(b.phi_hat)) < 1e-14);
        CHECK(std::fabs(b.theta_hat.dot(b.phi_hat)) < 1e-14);

        // theta_hat x phi_hat = rho_hat
        const Vec3 cross{b.theta_hat.y * b.phi_hat.z - b.theta_hat.z * b.phi_hat.y,
                         b.theta_hat.z * b.phi_hat.x - b.theta_hat.x * b.phi_hat.z,
                         b.theta_hat.x * b.phi_hat.y - b.theta_hat.y * b.phi_hat.x};
        CHECK((cross - b.rho_hat).norm() < 1e-13);
    }
}

TEST_CASE("polarization rotation is a unit rotation everywhere it is defined")
{
    Rng rng(404);
    for (int i = 0; i < 300; ++i)
    {
        const RotationAngles a(rng.uniform(-180, 180), rng.uniform(-90, 90),
                               rng.uniform(-180, 180));
        const Rotation r = rotation_matrix(a);
        const Direction d(rng.uniform(1, 179), rng.uniform(-180, 180), Frame::Gcs);
        const PolarizationRotation p = polarization_angle(r, d);
        CHECK(std::fabs(p.cos_psi * p.cos_psi + p.sin_psi * p.sin_psi - 1.0) < 1e-12);
    }
}

TEST_CASE("bearing-only rotations do not twist the polarization basis")
{
    Rng rng(505);
    for (int i = 0; i < 100; ++i)
    {
        const Rotation r = rotation_matrix(RotationAngles(rng.uniform(-180, 180), 0, 0));
        const Direction d(rng.uniform(1, 179), rng.uniform(-180, 180), Frame::Gcs);
        const PolarizationRotation p = polarization_angle(r, d);
        CHECK(p.cos_psi == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::fabs(p.sin_psi) < 1e-12);
    }
}

TEST_CASE("a pure roll twists the basis by the roll angle on its own axis")
{
    // Looking along +x while rolling about x: the polarization turns with
    // the roll.
    for (double gamma : {-120.0, -45.0, 10.0, 60.0, 150.0})
    {
        const Rotation r = rotation_matrix(RotationAngles(0, 0, gamma));
        const PolarizationRotation p = polarization_angle(r, Direction(90, 0, Frame::Gcs));
        CHECK(p.cos_psi == doctest::Approx(std::cos(gamma * std::acos(-1.0) / 180.0))
                               .epsilon(1e-12));
        CHECK(p.sin_psi == doctest::Approx(std::sin(gamma * std::acos(-1.0) / 180.0))
                               .epsilon(1e-12));
    }
}

TEST_CASE("polarization basis is refused at the poles")
{
    const Rotation r = rotation_matrix(RotationAngles(15, 25, 35));
    CHECK_THROWS_AS(polarization_angle(r, Direction(0, 0, Frame::Gcs)), PoleDegenerate);
    CHECK_THROWS_AS(polarization_angle(r, Direction(180, 0, Frame::Gcs)), PoleDegenerate);
}

TEST_CASE("seeded generator substreams replay and differ")
{
    Rng a(7, 3), b(7, 3), c(7, 4);
    bool same = true, differ = false;
    for (int i = 0; i < 100; ++i)
    {
        const auto va = a.next_u64();
        same = same && va == b.next_u64();
        differ = differ || va != c.next_u64();
    }
    CHECK(same);
    CHECK(differ);
}

TEST_CASE("uniform draws stay inside their interval and fill it")
{
    Rng rng(11);
    double lo_seen = 1.0, hi_seen = 0.0;
    for (int i = 0; i < 10000; ++i)
    {
        const double u = rng.uniform(0.25, 0.75);
        CHECK(u >= 0.25);
        CHECK(u < 0.75);
        lo_seen = std::min(lo_seen, u);
        hi_seen = std::max(hi_seen, u);
    }
    CHECK(lo_seen < 0.26);
    CHECK(hi_seen > 0.74);
}
