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

#include "ueant/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ueant/errors.hpp"

namespace ueant
{

    namespace
    {
        constexpr double DEG2RAD = 3.14159265358979323846 / 180.0;
        constexpr double RAD2DEG = 180.0 / 3.14159265358979323846;
    } // namespace

    const char *to_string(Frame f)
    {
        switch (f)
        {
        case Frame::Acs:
            return "ACS";
        case Frame::Lcs:
            return "LCS";
        default:
            return "GCS";
        }
    }

    double wrap_deg(double x)
    {
        double w = std::fmod(x + 180.0, 360.0);
        if (w < 0.0)
            w += 360.0;
        return w - 180.0;
    }

    Direction::Direction(double theta_deg, double phi_deg, Frame frame)
        : theta_deg_(theta_deg), phi_deg_(wrap_deg(phi_deg)), frame_(frame)
    {
        if (!(theta_deg >= 0.0 && theta_deg <= 180.0))
            throw std::invalid_argument("Direction: theta must lie in [0, 180] deg, got " +
                                        std::to_string(theta_deg));
        if (theta_deg_ == 0.0 || theta_deg_ == 180.0)
            phi_deg_ = 0.0;
    }

    Rotation Rotation::about_x(double deg)
    {
        const double c = std::cos(deg * DEG2RAD), s = std::sin(deg * DEG2RAD);
        Rotation r;
        r.m_ = {1, 0, 0,
                0, c, -s,
                0, s, c};
        return r;
    }

    Rotation Rotation::about_y(double deg)
    {
        const double c = std::cos(deg * DEG2RAD), s = std::sin(deg * DEG2RAD);
        Rotation r;
        r.m_ = {c, 0, s,
                0, 1, 0,
                -s, 0, c};
        return r;
    }

    Rotation Rotation::about_z(double deg)
    {
        const double c = std::cos(deg * DEG2RAD), s = std::sin(deg * DEG2RAD);
        Rotation r;
        r.m_ = {c, -s, 0,
                s, c, 0,
                0, 0, 1};
        return r;
    }

    Vec3 Rotation::apply(const Vec3 &v) const
    {
        return {m_[0] * v.x + m_[1] * v.y + m_[2] * v.z,
                m_[3] * v.x + m_[4] * v.y + m_[5] * v.z,
                m_[6] * v.x + m_[7] * v.y + m_[8] * v.z};
    }

    Vec3 Rotation::apply_inverse(const Vec3 &v) const
    {
        return {m_[0] * v.x + m_[3] * v.y + m_[6] * v.z,
                m_[1] * v.x + m_[4] * v.y + m_[7] * v.z,
                m_[2] * v.x + m_[5] * v.y + m_[8] * v.z};
    }

    Rotation Rotation::operator*(const Rotation &o) const
    {
        Rotation r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
            {
                double s = 0.0;
                for (int k = 0; k < 3; ++k)
                    s += at(i, k) * o.at(k, j);
                r.m_[static_cast<std::size_t>(3 * i + j)] = s;
            }
        return r;
    }

    Rotation Rotation::transposed() const
    {
        Rotation r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m_[static_cast<std::size_t>(3 * i + j)] = at(j, i);
        return r;
    }

    double Rotation::det() const
    {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    double Rotation::orthonormality_error() const
    {
        double worst = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
            {
                double s = 0.0;
                for (int k = 0; k < 3; ++k)
                    s += at(k, i) * at(k, j);
                worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
            }
        return worst;
    }

    Rotation rotation_matrix(const RotationAngles &a)
    {
        return Rotation::about_z(a.alpha_deg) * Rotation::about_y(a.beta_deg) *
               Rotation::about_x(a.gamma_deg);
    }

    SphericalBasis unit_vector_and_basis(const Direction &d)
    {
        const double th = d.theta_deg() * DEG2RAD;
        const double ph = d.phi_deg() * DEG2RAD;
        const double st = std::sin(th), ct = std::cos(th);
        const double sp = std::sin(ph), cp = std::cos(ph);
        return {{st * cp, st * sp, ct},
                {ct * cp, ct * sp, -st},
                {-sp, cp, 0.0}};
    }

    namespace
    {
        Frame step_frame(Frame f, bool inverse)
        {
            if (inverse)
                return f == Frame::Gcs ? Frame::Lcs : Frame::Acs;
            return f == Frame::Acs ? Frame::Lcs : Frame::Gcs;
        }

        Direction direction_of(const Vec3 &u, Frame frame)
        {
            const double z = std::clamp(u.z, -1.0, 1.0);
            const double theta = std::acos(z) * RAD2DEG;
            const double r_xy = std::hypot(u.x, u.y);
            const double phi = r_xy < 1e-15 ? 0.0 : std::atan2(u.y, u.x) * RAD2DEG;
            return {std::clamp(theta, 0.0, 180.0), phi, frame};
        }
    } // namespace

    Direction transform_direction(const Rotation &rot, const Direction &d, bool inverse)
    {
        const Vec3 rho = unit_vector_and_basis(d).rho_hat;
        const Vec3 u = inverse ? rot.apply_inverse(rho) : rot.apply(rho);
        return direction_of(u, step_frame(d.frame(), inverse));
    }

    PolarizationRotation polarization_angle(const Rotation &rot, const Direction &d)
    {
        const Direction d_in = transform_direction(rot, d, true);

        const auto near_pole = [](double theta) {
            return theta < POLE_GUARD_DEG || theta > 180.0 - POLE_GUARD_DEG;
        };
        if (near_pole(d.theta_deg()) || near_pole(d_in.theta_deg()))
            throw PoleDegenerate("polarization_angle: direction within " +
                                 std::to_string(POLE_GUARD_DEG) + " deg of a pole (theta=" +
                                 std::to_string(d.theta_deg()) + ", theta'=" +
                                 std::to_string(d_in.theta_deg()) + ")");

        const SphericalBasis outer = unit_vector_and_basis(d);
        const Vec3 theta_in_rotated = rot.apply(unit_vector_and_basis(d_in).theta_hat);
        return {outer.theta_hat.dot(theta_in_rotated), outer.phi_hat.dot(theta_in_rotated)};
    }

} // namespace ueant
