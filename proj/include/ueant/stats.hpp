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

#include <cstddef>
#include <vector>

namespace ueant
{

    // Right-continuous empirical distribution of a scalar sample. Tied
    // sample values collapse onto the highest cumulative probability of the
    // tie group.
    class EmpiricalCdf
    {
    public:
        explicit EmpiricalCdf(std::vector<double> samples); // throws EmptyInput

        std::size_t size() const { return sorted_.size(); }
        double min() const { return sorted_.front(); }
        double max() const { return sorted_.back(); }

        // Fraction of samples <= x.
        double probability_at(double x) const;

        // Smallest sample value whose cumulative probability reaches p;
        // p must lie in [0, 1].
        double value_at(double p) const;

        // Sorted sample values with their cumulative probabilities; ties are
        // merged into one point.
        struct Point
        {
            double value;
            double probability;
        };
        std::vector<Point> points() const;

        const std::vector<double> &sorted() const { return sorted_; }

    private:
        std::vector<double> sorted_;
    };

    double mean(const std::vector<double> &v);   // throws EmptyInput
    double median(const std::vector<double> &v); // throws EmptyInput

} // namespace ueant
