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

#include <stdexcept>
#include <string>
#include <vector>

namespace ueant
{

    // Base class for all library errors.
    class Error : public std::runtime_error
    {
    public:
        explicit Error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // The spherical polarization basis is undefined at theta = 0 or 180 deg.
    class PoleDegenerate : public Error
    {
    public:
        using Error::Error;
    };

    // Quadrature step exceeds the supported resolution.
    class QuadratureTooCoarse : public Error
    {
    public:
        using Error::Error;
    };

    // Legacy array port count outside {2, 4, 8}.
    class InvalidPortCount : public Error
    {
    public:
        using Error::Error;
    };

    // Carrier frequency falls outside every table band.
    class BandNotCovered : public Error
    {
    public:
        using Error::Error;
    };

    // No attenuation entry for this antenna in the resolved band.
    class AntennaNotInBand : public Error
    {
    public:
        using Error::Error;
    };

    // Malformed numeric range (lo > hi or negative loss).
    class InvalidRange : public Error
    {
    public:
        using Error::Error;
    };

    // Operation requires a non-empty input.
    class EmptyInput : public Error
    {
    public:
        using Error::Error;
    };

    // Imbalance statistics need at least two active antennas.
    class TooFewAntennas : public Error
    {
    public:
        using Error::Error;
    };

    // File or text could not be parsed.
    class ParseError : public Error
    {
    public:
        using Error::Error;
    };

    // File I/O failure.
    class IoError : public Error
    {
    public:
        using Error::Error;
    };

    // One or more invariants violated; carries the full list.
    class ValidationError : public Error
    {
    public:
        explicit ValidationError(std::vector<std::string> violations)
            : Error(join(violations)), violations_(std::move(violations)) {}

        const std::vector<std::string> &violations() const { return violations_; }

    private:
        static std::string join(const std::vector<std::string> &v)
        {
            std::string s = "validation failed:";
            for (const auto &x : v)
                s += "\n  - " + x;
            return s;
        }
        std::vector<std::string> violations_;
    };

} // namespace ueant
