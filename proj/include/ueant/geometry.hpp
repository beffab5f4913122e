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
#include <cmath>

namespace ueant
{

    // Cartesian 3-vector.
    struct Vec3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
        double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
        double norm() const { return std::sqrt(dot(*this)); }
    };

    // Coordinate frames of the rotation chain. Patterns are defined in the
    // antenna frame (ACS, double-prime), mounted on the device in the UE-local
    // frame (LCS, single-prime) and evaluated in the global frame (GCS).
    enum class Frame
    {
        Acs,
        Lcs,
        Gcs
    };

    const char *to_string(Frame f);

    // Wrap an angle in degrees to [-180, 180).
    double wrap_deg(double x);

    // Spherical direction in degrees: theta in [0, 180] measured from +z,
    // phi wrapped to [-180, 180). At theta = 0 or 180 the azimuth is
    // meaningless and is stored as 0.
    class Direction
    {
    public:
        Direction(double theta_deg, double phi_deg, Frame frame);

        double theta_deg() const { return theta_deg_; }
        double phi_deg() const { return phi_deg_; }
        Frame frame() const { return frame_; }

    private:
        double theta_deg_;
        double phi_deg_;
        Frame frame_;
    };

    // Intrinsic z-y-x rotation angles in degrees: bearing alpha about z,
    // downtilt beta about the intermediate y, slant gamma about the final x.
    // Each angle is wrapped to [-180, 180) on construction.
    struct RotationAngles
    {
        RotationAngles() = default;
        RotationAngles(double alpha, double beta, double gamma)
            : alpha_deg(wrap_deg(alpha)), beta_deg(wrap_deg(beta)), gamma_deg(wrap_deg(gamma)) {}

        double alpha_deg = 0.0;
        double beta_deg = 0.0;
        double gamma_deg = 0.0;
    };

    // Proper 3x3 rotation matrix (orthonormal, det = +1).
    class Rotation
    {
    public:
        Rotation() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

        static Rotation identity() { return Rotation(); }
        static Rotation about_x(double deg);
        static Rotation about_y(double deg);
        static Rotation about_z(double deg);

        double at(int row, int col) const { return m_[static_cast<std::size_t>(3 * row + col)]; }

        Vec3 apply(const Vec3 &v) const;
        Vec3 apply_inverse(const Vec3 &v) const; // R^T v
        Rotation operator*(const Rotation &o) const;
        Rotation transposed() const;

        double det() const;
        // Largest |(R^T R - I)| entry; 0 for an exact rotation.
        double orthonormality_error() const;

    private:
        std::array<double, 9> m_; // row-major
    };

    // R = R_z(alpha) * R_y(beta) * R_x(gamma), right-handed rotations.
    Rotation rotation_matrix(const RotationAngles &a);

    // Orthonormal spherical basis attached to a direction.
    struct SphericalBasis
    {
        Vec3 rho_hat;   // radial unit vector
        Vec3 theta_hat; // increasing-theta unit vector
        Vec3 phi_hat;   // increasing-phi unit vector
    };

    SphericalBasis unit_vector_and_basis(const Direction &d);

    // Maps a direction across one frame of the rotation chain. With inverse
    // set, applies R^T and steps the frame tag down (Gcs -> Lcs -> Acs);
    // otherwise applies R and steps it up (Acs -> Lcs -> Gcs). A transformed
    // direction that lands on a pole gets phi = 0.
    Direction transform_direction(const Rotation &rot, const Direction &d, bool inverse);

    // Polarization basis mismatch between the outer frame at d and the inner
    // (primed) frame at the back-rotated direction. The polarized field maps as
    //   [F_theta; F_phi] = [[cos, -sin], [sin, cos]] * [F'_theta'; F'_phi'].
    struct PolarizationRotation
    {
        double cos_psi = 1.0;
        double sin_psi = 0.0;
    };

    // Throws PoleDegenerate when either frame's direction is within 1e-9 deg
    // of a pole; the basis is undefined there.
    PolarizationRotation polarization_angle(const Rotation &rot, const Direction &d);

    inline constexpr double POLE_GUARD_DEG = 1e-9;

} // namespace ueant
