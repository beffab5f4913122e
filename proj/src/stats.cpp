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

#include "ueant/stats.hpp"

#include <algorithm>
#include <cmath>

#include "ueant/errors.hpp"

namespace ueant
{

    EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples))
    {
        if (sorted_.empty())
            throw EmptyInput("empirical CDF needs at least one sample");
        std::sort(sorted_.begin(), sorted_.end());
    }

    double EmpiricalCdf::probability_at(double x) const
    {
        const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
        return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
    }

    double EmpiricalCdf::value_at(double p) const
    {
        if (!(p >= 0.0 && p <= 1.0))
            throw InvalidRange("cumulative probability must lie in [0, 1]");
        if (p <= 0.0)
            return sorted_.front();
        const auto n = static_cast<double>(sorted_.size());
        auto k = static_cast<std::size_t>(std::min(n - 1.0, std::ceil(p * n) - 1.0));
        return sorted_[k];
    }

    std::vector<EmpiricalCdf::Point> EmpiricalCdf::points() const
    {
        std::vector<Point> out;
        const auto n = static_cast<double>(sorted_.size());
        for (std::size_t i = 0; i < sorted_.size(); ++i)
        {
            const double p = static_cast<double>(i + 1) / n;
            if (!out.empty() && out.back().value == sorted_[i])
                out.back().probability = p;
            else
                out.push_back({sorted_[i], p});
        }
        return out;
    }

    double mean(const std::vector<double> &v)
    {
        if (v.empty())
            throw EmptyInput("mean of an empty sample");
        double s = 0.0;
        for (double x : v)
            s += x;
        return s / static_cast<double>(v.size());
    }

    double median(const std::vector<double> &v)
    {
        if (v.empty())
            throw EmptyInput("median of an empty sample");
        std::vector<double> c = v;
        std::sort(c.begin(), c.end());
        const std::size_t n = c.size();
        if (n % 2 == 1)
            return c[n / 2];
        return 0.5 * (c[n / 2 - 1] + c[n / 2]);
    }

} // namespace ueant
